"""Automorphism groups, lifting automorphisms to line graphs, and the
isomorphism ``Aut(G) -> Aut(L(G))``.

Groups are kept as explicit, sorted element lists. Elements are found by a
backtracking search over pairs of ordered partitions: the base side
individualises a fixed sequence of vertices, the image side tries every
candidate in the matching cell, and both sides are refined by iterated
neighbour-colour multisets. A branch survives only while the two refined
colourings have the same colour histogram, and every leaf is checked
against the edge set, so the search is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ._config import get_config
from .exceptions import (
    Disconnected,
    GroupTooLarge,
    IneligibleGraph,
    NotAutomorphism,
    SearchCapExceeded,
    SizeMismatch,
)
from .graph import SABIDUSSI_EXCEPTIONS, Graph, classify_special, is_connected
from .linegraph import IterationChain, Provenance, clusters, line_graph

Permutation = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``, i.e. apply ``q`` first."""
    return tuple(p[x] for x in q)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    if len(p) != g.n or sorted(p) != list(range(g.n)):
        return False
    sets = g.adj_sets
    # a bijection sending every edge to an edge preserves non-edges too
    return all(p[v] in sets[p[u]] for u, v in g.edges)


@dataclass(frozen=True)
class AutGroup:
    host: Graph
    elements: tuple[Permutation, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return tuple(p) in self._element_set

    @property
    def _element_set(self) -> frozenset:
        # not cached: AutGroup is frozen and cheap to rebuild for small groups
        return frozenset(self.elements)

    def nontrivial(self) -> Iterator[Permutation]:
        ident = identity(self.host.n)
        return (p for p in self.elements if p != ident)

    def is_trivial(self) -> bool:
        return self.order == 1


def refine(adj, colors: Sequence[int]) -> list[int]:
    """Coarsest equitable refinement of ``colors``.

    New colours are ranks of ``(old colour, sorted neighbour colours)``
    signatures, so the result depends only on the isomorphism type of the
    coloured graph: relabelling the input relabels the output the same way.
    """
    n = len(colors)
    ranks = {c: i for i, c in enumerate(sorted(set(colors)))}
    colors = [ranks[c] for c in colors]
    ncolors = len(ranks)
    while ncolors < n:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in adj[v]]))) for v in range(n)]
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        if len(ranks) == ncolors:
            break
        colors = [ranks[s] for s in sigs]
        ncolors = len(ranks)
    return colors


def _target_cell(colors: list[int]) -> list[int] | None:
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    best = None
    for c in sorted(cells):
        cell = cells[c]
        if len(cell) > 1 and (best is None or len(cell) < len(best)):
            best = cell
    return best


def iter_automorphisms(
    g: Graph, colors: Sequence[int] | None = None, nontrivial_first: bool = False
) -> Iterator[Permutation]:
    """Lazily yield every colour-preserving automorphism of ``g``.

    ``colors`` is an optional initial vertex colouring that automorphisms
    must preserve. Each element is produced exactly once.
    """
    cap = get_config()["search_cap"]
    if g.n > cap:
        raise SearchCapExceeded(f"graph has {g.n} vertices, search cap is {cap}")
    if colors is not None and len(colors) != g.n:
        raise SizeMismatch(f"colouring has {len(colors)} entries for n={g.n}")
    adj, sets, n = g.adj, g.adj_sets, g.n
    start = refine(adj, [0] * n if colors is None else list(colors))

    def search(base: list[int], img: list[int]) -> Iterator[Permutation]:
        cell = _target_cell(base)
        if cell is None:
            where = {c: w for w, c in enumerate(img)}
            perm = tuple(where[c] for c in base)
            if all(perm[v] in sets[perm[u]] for u, v in g.edges):
                yield perm
            return
        v = cell[0]
        fresh = n + 1
        b2 = list(base)
        b2[v] = fresh
        b2 = refine(adj, b2)
        hist = sorted(b2)
        target = base[v]
        candidates = [w for w in range(n) if img[w] == target]
        if nontrivial_first:
            candidates.sort(key=lambda w: w == v)
        for w in candidates:
            i2 = list(img)
            i2[w] = fresh
            i2 = refine(adj, i2)
            if sorted(i2) == hist:
                yield from search(b2, i2)

    yield from search(start, start)


def automorphisms(
    g: Graph,
    fixed: Sequence[int] = (),
    colors: Sequence[int] | None = None,
    limit: int | None = None,
) -> AutGroup:
    """The automorphism group of ``g`` as a sorted element list.

    ``fixed`` vertices are held pointwise (giving a stabiliser subgroup);
    ``colors`` restricts to colour-preserving automorphisms.
    """
    cap = get_config()["group_cap"] if limit is None else limit
    init = list(colors) if colors is not None else [0] * g.n
    if len(init) != g.n:
        raise SizeMismatch(f"colouring has {len(init)} entries for n={g.n}")
    top = max(init, default=0) + 1
    for i, v in enumerate(fixed):
        init[v] = top + i
    elements = []
    for p in iter_automorphisms(g, init):
        elements.append(p)
        if len(elements) > cap:
            raise GroupTooLarge(f"automorphism group has more than {cap} elements")
    elements.sort()
    return AutGroup(g, tuple(elements))


def find_nontrivial_automorphism(g: Graph, colors: Sequence[int]) -> Permutation | None:
    """Some non-identity colour-preserving automorphism, or ``None``."""
    ident = identity(g.n)
    for p in iter_automorphisms(g, colors, nontrivial_first=True):
        if p != ident:
            return p
    return None


# -- lifting ------------------------------------------------------------------

def _lift_unchecked(prov: Provenance, phi: Sequence[int]) -> Permutation:
    index = prov.parent.edge_index
    out = []
    for u, v in prov.origin:
        a, b = phi[u], phi[v]
        out.append(index[(a, b) if a < b else (b, a)])
    return tuple(out)


def lift(prov: Provenance, phi: Sequence[int]) -> Permutation:
    """Induced action of ``phi`` on ``prov.child``: the vertex for edge
    ``{u, v}`` goes to the vertex for ``{phi(u), phi(v)}``."""
    if not is_automorphism(prov.parent, phi):
        raise NotAutomorphism("permutation does not preserve the parent's edges")
    return _lift_unchecked(prov, phi)


def lift_chain(chain: IterationChain, phi: Sequence[int]) -> Permutation:
    """Lift ``phi`` through every link of ``chain`` to ``chain.top``."""
    if not is_automorphism(chain.base, phi):
        raise NotAutomorphism("permutation does not preserve the base graph's edges")
    image = tuple(phi)
    # lifts of automorphisms are automorphisms, so only the base is checked
    for link in chain.links:
        image = _lift_unchecked(link, image)
    return image


@dataclass(frozen=True)
class SabidussiReport:
    injective: bool
    surjective: bool
    parent_order: int
    child_order: int

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective

    def to_json(self) -> dict:
        return {
            "injective": self.injective,
            "surjective": self.surjective,
            "parent_order": self.parent_order,
            "child_order": self.child_order,
            "isomorphism": self.isomorphism,
        }


def verify_sabidussi(g: Graph) -> SabidussiReport:
    """Compute ``Aut(G)`` and ``Aut(L(G))`` independently and test whether
    lifting is a bijection between them."""
    if not is_connected(g):
        raise Disconnected("lift verification needs a connected graph")
    prov = line_graph(g)
    parent = automorphisms(g)
    child = automorphisms(prov.child)
    images = [_lift_unchecked(prov, phi) for phi in parent]
    image_set = set(images)
    return SabidussiReport(
        injective=len(image_set) == len(images),
        surjective=image_set == set(child.elements),
        parent_order=parent.order,
        child_order=child.order,
    )


def cluster_equivariance(g: Graph, m: int, phi: Sequence[int], family=None) -> bool:
    """Whether the ``2m``-fold lift of ``phi`` carries each cluster of ``v``
    exactly onto the cluster of ``phi(v)``."""
    if family is None:
        family = clusters(g, m)
    chain = IterationChain(family.chain.base, family.chain.links[: 2 * m])
    for i in range(2 * m):
        if classify_special(chain.graph(i)) in SABIDUSSI_EXCEPTIONS:
            raise IneligibleGraph(f"level {i} of the chain is a lift exception")
    lifted = lift_chain(chain, phi)
    for v, members in enumerate(family.clusters):
        if sorted(lifted[z] for z in members) != list(family.clusters[phi[v]]):
            return False
    return True


def group_to_json(group: AutGroup) -> dict:
    return {"order": group.order, "elements": [list(p) for p in group.elements]}
