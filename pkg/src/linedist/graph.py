"""Immutable simple graphs on the vertex set ``0..n-1``."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Iterable, NamedTuple, Sequence

from .exceptions import DuplicateEdge, EmptyGraph, GraphError, LoopEdge, OutOfRange


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        return cls(a, b) if a < b else cls(b, a)


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    ``adj[v]`` is the strictly increasing tuple of neighbours of ``v``.
    Instances compare by value, so two graphs are equal exactly when they
    have the same vertex count and the same labelled edge set.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        object.__setattr__(self, "adj", tuple(tuple(row) for row in self.adj))
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, row in enumerate(self.adj):
            prev = -1
            for u in row:
                if not 0 <= u < self.n:
                    raise OutOfRange(f"neighbour {u} of {v} outside [0, {self.n})")
                if u == v:
                    raise LoopEdge(f"loop at vertex {v}")
                if u <= prev:
                    raise DuplicateEdge(f"neighbour list of {v} is not strictly increasing")
                prev = u
        for v, row in enumerate(self.adj):
            for u in row:
                if v not in self.adj_sets[u]:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[tuple[int, ...], ...]) -> "Graph":
        # skips invariant checks; only for constructions that guarantee them
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @cached_property
    def adj_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(row) for row in self.adj)

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        """Edges in lexicographic order."""
        return tuple(Edge(u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets[u]

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges]})"


def build(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Endpoints may be given in either order. Loops, repeated edges and
    endpoints outside ``[0, n)`` are rejected.
    """
    n = int(n)
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for e in edges:
        a, b = (int(x) for x in e)
        if not (0 <= a < n and 0 <= b < n):
            raise OutOfRange(f"edge ({a}, {b}) has an endpoint outside [0, {n})")
        if a == b:
            raise LoopEdge(f"loop at vertex {a}")
        if b in nbrs[a]:
            raise DuplicateEdge(f"edge {Edge.of(a, b)} given twice")
        nbrs[a].add(b)
        nbrs[b].add(a)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def degree(g: Graph, v: int) -> int:
    if not 0 <= v < g.n:
        raise OutOfRange(f"vertex {v} outside [0, {g.n})")
    return len(g.adj[v])


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the null graph is undefined")
    return min(g.degrees)


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("maximum degree of the null graph is undefined")
    return max(g.degrees)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp, stack = [s], [s]
        while stack:
            v = stack.pop()
            for u in g.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    """Connectivity; the null graph counts as connected."""
    return len(components(g)) <= 1


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on ``vertices``, relabelled in increasing order.

    Returns the subgraph and the tuple of original labels.
    """
    keep = tuple(sorted(set(vertices)))
    pos = {v: i for i, v in enumerate(keep)}
    adj = tuple(tuple(pos[u] for u in g.adj[v] if u in pos) for v in keep)
    return Graph(len(keep), adj), keep


def relabel(g: Graph, image: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``image[v]``."""
    return build(g.n, ((image[u], image[v]) for u, v in g.edges))


# -- named families ---------------------------------------------------------

def path(n: int) -> Graph:
    return build(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError(f"cycles need at least 3 vertices, got {n}")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return build(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the hub at vertex 0."""
    return build(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def paw() -> Graph:
    """Triangle 0-1-2 with the pendant edge 2-3."""
    return build(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


def diamond() -> Graph:
    """K4 minus the edge 0-3."""
    return build(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def double_star(leaves: int) -> Graph:
    """Centre edge 0-1 with ``leaves`` pendant vertices on each end."""
    edges = [(0, 1)]
    for i in range(leaves):
        edges.append((0, 2 + i))
        edges.append((1, 2 + leaves + i))
    return build(2 + 2 * leaves, edges)


# -- special graphs ---------------------------------------------------------

class SpecialClass(str, enum.Enum):
    P2 = "P2"
    Q = "Q"
    LQ = "LQ"
    PATH = "Path"
    CYCLE3 = "Cycle3"
    CYCLE4 = "Cycle4"
    CYCLE5 = "Cycle5"
    CYCLE_LONG = "CycleLong"
    CLAW = "Claw"
    SINGLE_VERTEX = "SingleVertex"
    EMPTY = "Empty"
    OTHER = "Other"

    @property
    def is_cycle(self) -> bool:
        return self in (self.CYCLE3, self.CYCLE4, self.CYCLE5, self.CYCLE_LONG)


def _isomorphic_small(g: Graph, h: Graph) -> bool:
    # exhaustive matching; only ever called with n <= 4
    if g.n != h.n or g.m != h.m:
        return False
    target = set(h.edges)
    for perm in permutations(range(g.n)):
        if all(Edge.of(perm[u], perm[v]) in target for u, v in g.edges):
            return True
    return False


def classify_special(g: Graph) -> SpecialClass:
    """Recognise the small graphs that line-graph results single out."""
    if g.n == 0:
        return SpecialClass.EMPTY
    if g.n == 1:
        return SpecialClass.SINGLE_VERTEX
    if not is_connected(g):
        return SpecialClass.OTHER
    if g.n == 2:
        return SpecialClass.P2
    degs = sorted(g.degrees)
    if g.m == g.n - 1 and degs[-1] <= 2:
        return SpecialClass.PATH
    if g.m == g.n and degs[0] == degs[-1] == 2:
        return {
            3: SpecialClass.CYCLE3,
            4: SpecialClass.CYCLE4,
            5: SpecialClass.CYCLE5,
        }.get(g.n, SpecialClass.CYCLE_LONG)
    if g.n == 4:
        if degs == [1, 1, 1, 3]:
            return SpecialClass.CLAW
        if _isomorphic_small(g, paw()):
            return SpecialClass.Q
        if _isomorphic_small(g, diamond()):
            return SpecialClass.LQ
    return SpecialClass.OTHER


SABIDUSSI_EXCEPTIONS = frozenset({SpecialClass.P2, SpecialClass.Q, SpecialClass.LQ})


def is_k4(g: Graph) -> bool:
    return g.n == 4 and g.m == 6


def is_lift_exception(g: Graph) -> bool:
    """Connected graphs whose automorphisms do not lift onto ``Aut(L(g))``.

    Besides P2, the paw and the diamond this includes K4: ``L(K4)`` is the
    octahedron, whose group has order 48 against 24 for K4.
    """
    return classify_special(g) in SABIDUSSI_EXCEPTIONS or is_k4(g)
