"""Trees under one line-graph step: leaf peeling, edge association, branch
decomposition, rooted class counts and the increase criterion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .distinguish import distinguishing_number, has_distinguishing_coloring, rooted_sb_count
from .enumeration import rooted_code, unlabeled_trees
from .exceptions import IndexOutOfRange, IneligibleGraph, NotATree
from .graph import Edge, Graph, induced_subgraph, is_tree
from .linegraph import line_graph


def _require_tree(t: Graph) -> None:
    if not is_tree(t):
        raise NotATree(f"expected a tree, got n={t.n}, m={t.m}")


@dataclass(frozen=True)
class PeelingSequence:
    """``layers[i]`` is the leaf set of the i-th peeled subtree; the last
    layer is the centre."""

    layers: tuple[tuple[int, ...], ...]

    @property
    def center(self) -> tuple[int, ...]:
        return self.layers[-1]

    def layer_of(self) -> dict[int, int]:
        return {v: i for i, layer in enumerate(self.layers) for v in layer}


def peel(t: Graph) -> PeelingSequence:
    _require_tree(t)
    remaining = set(range(t.n))
    deg = list(t.degrees)
    layers = []
    while len(remaining) > 2:
        leaves = sorted(v for v in remaining if deg[v] <= 1)
        for v in leaves:
            remaining.discard(v)
            for u in t.adj[v]:
                if u in remaining:
                    deg[u] -= 1
        layers.append(tuple(leaves))
    layers.append(tuple(sorted(remaining)))
    return PeelingSequence(tuple(layers))


@dataclass(frozen=True)
class EdgeAssociation:
    """``assoc[v]`` is the edge joining non-centre vertex ``v`` to its
    neighbour in a later layer; a central edge, when present, is shared by
    both centre vertices and kept apart in ``center_edge``."""

    assoc: dict[int, Edge]
    center_edge: Edge | None

    def edge_of(self, v: int) -> Edge:
        if v in self.assoc:
            return self.assoc[v]
        if self.center_edge is not None and v in self.center_edge:
            return self.center_edge
        raise KeyError(v)


def edge_assoc(t: Graph, peeling: PeelingSequence | None = None) -> EdgeAssociation:
    _require_tree(t)
    if t.n < 2:
        raise NotATree("edge association needs at least one edge")
    peeling = peeling or peel(t)
    layer = peeling.layer_of()
    center = peeling.center
    assoc = {}
    for v in range(t.n):
        if v in center:
            continue
        (u,) = [u for u in t.adj[v] if layer[u] > layer[v]]
        assoc[v] = Edge.of(v, u)
    center_edge = Edge.of(*center) if len(center) == 2 else None
    return EdgeAssociation(assoc, center_edge)


class Branch(NamedTuple):
    vertices: tuple[int, ...]
    root: int
    attach: int  # centre vertex the root hangs from
    code: str


class RootedGraph(NamedTuple):
    graph: Graph
    root: int
    vertices: tuple[int, ...]  # original labels, in subgraph order


@dataclass(frozen=True)
class TreeDecomposition:
    tree: Graph
    center: tuple[int, ...]
    branches: tuple[Branch, ...]
    classes: tuple[tuple[int, ...], ...]
    peeling: PeelingSequence

    @property
    def side_u(self) -> tuple[int, ...] | None:
        if len(self.center) != 2:
            return None
        return tuple(i for i, b in enumerate(self.branches) if b.attach == self.center[0])

    @property
    def side_w(self) -> tuple[int, ...] | None:
        if len(self.center) != 2:
            return None
        return tuple(i for i, b in enumerate(self.branches) if b.attach == self.center[1])

    def class_of(self, i: int) -> int:
        for c, members in enumerate(self.classes):
            if i in members:
                return c
        raise IndexOutOfRange(i)

    def branch_graph(self, i: int) -> RootedGraph:
        if not 0 <= i < len(self.branches):
            raise IndexOutOfRange(f"branch {i} of {len(self.branches)}")
        b = self.branches[i]
        sub, labels = induced_subgraph(self.tree, b.vertices)
        return RootedGraph(sub, labels.index(b.root), labels)


def decompose(t: Graph) -> TreeDecomposition:
    """Centre, branches (components of the tree minus its centre) and the
    classes of root-preserving isomorphic branches."""
    peeling = peel(t)
    center = peeling.center
    in_center = set(center)
    seen = set(center)
    branches = []
    for c in center:
        for root in t.adj[c]:
            if root in seen:
                continue
            comp = {root}
            stack = [root]
            while stack:
                v = stack.pop()
                for u in t.adj[v]:
                    if u not in comp and u not in in_center:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            code = rooted_code(t, root, frozenset(comp))
            branches.append(Branch(tuple(sorted(comp)), root, c, code))
    branches.sort(key=lambda b: b.root)
    by_code: dict[str, list[int]] = {}
    for i, b in enumerate(branches):
        by_code.setdefault(b.code, []).append(i)
    classes = tuple(sorted(tuple(v) for v in by_code.values()))
    return TreeDecomposition(t, center, tuple(branches), classes, peeling)


def line_branch(t: Graph, i: int, dec: TreeDecomposition | None = None) -> RootedGraph:
    """The image of branch ``i`` in ``L(t)``: the subgraph induced on the
    edges associated with its vertices, rooted at the edge of its root."""
    dec = dec or decompose(t)
    if not 0 <= i < len(dec.branches):
        raise IndexOutOfRange(f"branch {i} of {len(dec.branches)}")
    ea = edge_assoc(t, dec.peeling)
    prov = line_graph(t)
    b = dec.branches[i]
    wanted = {prov.vertex_of(*ea.assoc[v]): v for v in b.vertices}
    sub, labels = induced_subgraph(prov.child, wanted)
    root_vertex = prov.vertex_of(*ea.assoc[b.root])
    return RootedGraph(sub, labels.index(root_vertex), labels)


class ClassDetail(NamedTuple):
    m: int
    in_u: int | None
    in_w: int | None


@dataclass(frozen=True)
class TreePrediction:
    increases: bool
    k: int
    details: tuple[ClassDetail, ...]
    decomposition: TreeDecomposition


def _check_predictable(t: Graph) -> None:
    _require_tree(t)
    if t.n < 2:
        raise IneligibleGraph("the increase criterion needs at least one edge")
    if t.n == 2:
        raise IneligibleGraph("P2 is excluded: its line graph is a single vertex")


def predict_increase(t: Graph, k: int | None = None) -> TreePrediction:
    """Decide ``D(L(t)) > D(t)`` from the branch structure alone.

    With ``k = D(t)`` and ``m_i`` the rooted class count of a branch in class
    ``i``, the answer is yes exactly when the centre is an edge and every
    class has ``m_i`` members on each side of it. Equal counts on both sides
    for every class is also what it takes for some automorphism to swap the
    two centre vertices, so no separate swap test is needed.
    """
    _check_predictable(t)
    if k is None:
        k, _ = distinguishing_number(t)
    dec = decompose(t)
    u_side = set(dec.side_u or ())
    details = []
    for members in dec.classes:
        rep = dec.branch_graph(members[0])
        m_i = rooted_sb_count(rep.graph, rep.root, k)
        if len(dec.center) == 2:
            in_u = sum(1 for i in members if i in u_side)
            details.append(ClassDetail(m_i, in_u, len(members) - in_u))
        else:
            details.append(ClassDetail(m_i, None, None))
    increases = len(dec.center) == 2 and all(
        d.in_u == d.in_w == d.m for d in details
    )
    return TreePrediction(increases, k, tuple(details), dec)


def monochromatic_center_test(t: Graph) -> bool:
    """Whether some optimal distinguishing colouring gives the whole centre
    one colour."""
    _require_tree(t)
    center = peel(t).center
    if len(center) == 1:
        return True
    k, _ = distinguishing_number(t)
    u, w = center
    return has_distinguishing_coloring(t, k, tie={w: u}, first=[u, w]) is not None


def tree_report(t: Graph, with_line_graph: bool = True) -> dict:
    dec = decompose(t)
    report = {
        "n": t.n,
        "center": list(dec.center),
        "layers": [list(layer) for layer in dec.peeling.layers],
        "branches": [
            {"root": b.root, "vertices": list(b.vertices), "attach": b.attach,
             "class": dec.class_of(i)}
            for i, b in enumerate(dec.branches)
        ],
    }
    if t.n <= 2:
        report["prediction"] = None
        return report
    k, witness = distinguishing_number(t)
    pred = predict_increase(t, k)
    report["D_T"] = k
    report["witness_T"] = list(witness.colors)
    report["classes"] = [
        {"members": list(members), "m": d.m, "in_u": d.in_u, "in_w": d.in_w}
        for members, d in zip(dec.classes, pred.details)
    ]
    report["prediction"] = pred.increases
    if with_line_graph:
        lk, lwitness = distinguishing_number(line_graph(t).child)
        report["D_LT"] = lk
        report["witness_LT"] = list(lwitness.colors)
        report["agrees"] = pred.increases == (k < lk)
    return report


@dataclass(frozen=True)
class SweepRow:
    n: int
    trees: int
    increase: int
    equal: int
    decrease: int
    mismatches: int


def _sweep_one(t: Graph) -> tuple[int, int, bool]:
    k, _ = distinguishing_number(t)
    lk, _ = distinguishing_number(line_graph(t).child)
    return k, lk, predict_increase(t, k).increases


def sweep(max_n: int, min_n: int = 3, threads: int = 1) -> list[SweepRow]:
    """Compare D(T) and D(L(T)) for every tree with ``min_n <= n <= max_n``
    and count where the increase criterion disagrees with brute force."""
    rows = []
    for n in range(min_n, max_n + 1):
        trees = unlabeled_trees(n)
        if threads > 1:
            from concurrent.futures import ProcessPoolExecutor

            with ProcessPoolExecutor(threads) as pool:
                results = list(pool.map(_sweep_one, trees))
        else:
            results = [_sweep_one(t) for t in trees]
        inc = sum(1 for k, lk, _ in results if lk > k)
        eq = sum(1 for k, lk, _ in results if lk == k)
        dec = sum(1 for k, lk, _ in results if lk < k)
        bad = sum(1 for k, lk, p in results if p != (k < lk))
        rows.append(SweepRow(n, len(trees), inc, eq, dec, bad))
    return rows
