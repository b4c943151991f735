"""Line graphs with provenance, iterated line graphs, origin maps and clusters.

Vertex ``i`` of ``L(G)`` always stands for the ``i``-th edge of ``G`` in
lexicographic order, so every construction here is deterministic and two
runs produce identical labelled graphs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from ._config import get_config
from .exceptions import Disconnected, GraphError, SizeCapExceeded
from .graph import Edge, Graph, is_connected


@dataclass(frozen=True)
class Provenance:
    """One application of the line-graph operator.

    ``origin[i]`` is the edge of ``parent`` represented by vertex ``i`` of
    ``child``.
    """

    parent: Graph
    child: Graph

    @property
    def origin(self) -> tuple[Edge, ...]:
        return self.parent.edges

    def vertex_of(self, u: int, v: int) -> int:
        """Child vertex standing for the parent edge ``{u, v}``."""
        return self.parent.edge_index[(u, v) if u < v else (v, u)]


@dataclass(frozen=True)
class IterationChain:
    """``base = L^0``, ``links[i].child = L^{i+1}(base)``."""

    base: Graph
    links: tuple[Provenance, ...] = ()

    def __post_init__(self):
        prev = self.base
        for link in self.links:
            if link.parent is not prev and link.parent != prev:
                raise GraphError("iteration chain links do not compose")
            prev = link.child

    def __len__(self):
        return len(self.links)

    @property
    def k(self) -> int:
        return len(self.links)

    def graph(self, i: int) -> Graph:
        """``L^i(base)`` for ``0 <= i <= k``."""
        if not 0 <= i <= self.k:
            raise IndexError(f"chain of length {self.k} has no level {i}")
        return self.base if i == 0 else self.links[i - 1].child

    @property
    def top(self) -> Graph:
        return self.graph(self.k)

    def extend(self, extra: int, vertex_cap: int | None = None) -> "IterationChain":
        links = list(self.links)
        g = self.top
        for step in range(extra):
            _check_next_size(g, self.k + step + 1, vertex_cap)
            link = line_graph(g)
            links.append(link)
            g = link.child
        return IterationChain(self.base, tuple(links))


def line_edge_count(g: Graph) -> int:
    """Number of edges of ``L(g)``: pairs of edges meeting at a vertex."""
    return sum(comb(d, 2) for d in g.degrees)


def _check_next_size(g: Graph, iteration: int, vertex_cap: int | None) -> None:
    cap = get_config()["vertex_cap"] if vertex_cap is None else vertex_cap
    if g.m > cap:
        raise SizeCapExceeded(iteration, g.m, cap)


def line_graph(g: Graph) -> Provenance:
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    adj = []
    for i, (u, v) in enumerate(g.edges):
        # the two incidence lists meet only in i because g is simple
        row = incident[u] + incident[v]
        row.remove(i)
        row.remove(i)
        row.sort()
        adj.append(tuple(row))
    child = Graph._trusted(g.m, tuple(adj))
    return Provenance(g, child)


def iterate(g: Graph, k: int, vertex_cap: int | None = None) -> IterationChain:
    """Chain ``G, L(G), ..., L^k(G)``.

    Raises :class:`SizeCapExceeded` before building any iterate whose
    vertex count (the edge count of its parent) exceeds the cap.
    """
    if k < 0:
        raise ValueError(f"iteration count must be nonnegative, got {k}")
    return IterationChain(g).extend(k, vertex_cap)


def origin_map(chain: IterationChain, start: int = 0) -> tuple[int, ...]:
    """The map from ``L^{start+2}`` down to ``L^start`` sending a pair of
    incident edges to their shared endpoint."""
    if chain.k < start + 2:
        raise ValueError(f"need two links after level {start}, chain has {chain.k}")
    first, second = chain.links[start], chain.links[start + 1]
    f = []
    for i, j in second.origin:
        a, b = first.origin[i]
        c, d = first.origin[j]
        f.append(a if a in (c, d) else b)
    return tuple(f)


def cluster_sizes(chain: IterationChain, depth: int) -> tuple[int, ...]:
    """Cluster sizes at ``depth`` using only levels up to ``2*depth - 2``.

    The preimage of ``u`` under the origin map is the set of pairs of edges
    meeting at ``u``, so it has ``C(deg u, 2)`` elements and the deepest
    iterate never has to be built.
    """
    if depth < 1:
        raise ValueError(f"cluster depth must be at least 1, got {depth}")
    label = cluster_labels(chain, depth - 1)
    g = chain.graph(2 * depth - 2)
    sizes = [0] * chain.base.n
    for u, v in enumerate(label):
        d = g.degrees[u]
        sizes[v] += d * (d - 1) // 2
    return tuple(sizes)


def fibers(f, size: int) -> tuple[tuple[int, ...], ...]:
    """Preimage buckets of ``f`` over ``range(size)``, each sorted."""
    buckets: list[list[int]] = [[] for _ in range(size)]
    for z, v in enumerate(f):
        buckets[v].append(z)
    return tuple(tuple(b) for b in buckets)


@dataclass(frozen=True)
class ClusterFamily:
    """Clusters of every base vertex inside ``L^{2*depth}(base)``.

    ``label[z]`` is the base vertex whose cluster contains ``z``;
    ``clusters[v]`` lists that cluster in increasing order.
    """

    depth: int
    host: Graph
    clusters: tuple[tuple[int, ...], ...]
    label: tuple[int, ...]
    chain: IterationChain = field(repr=False, compare=False)

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.clusters)


def cluster_labels(chain: IterationChain, depth: int) -> tuple[int, ...]:
    """Ancestor labels at level ``2*depth`` of ``chain``.

    Composes the origin maps level by level, which realises the recursion
    "cluster at depth j+1 = union of f-preimages of the depth-j cluster".
    """
    label = tuple(range(chain.base.n))
    for j in range(depth):
        f = origin_map(chain, 2 * j)
        label = tuple(label[u] for u in f)
    return label


def clusters(
    g: Graph,
    m: int,
    chain: IterationChain | None = None,
    vertex_cap: int | None = None,
) -> ClusterFamily:
    if m < 1:
        raise ValueError(f"cluster depth must be at least 1, got {m}")
    if not is_connected(g):
        raise Disconnected("clusters are defined for connected graphs")
    if chain is None or chain.base != g:
        chain = iterate(g, 2 * m, vertex_cap)
    elif chain.k < 2 * m:
        chain = chain.extend(2 * m - chain.k, vertex_cap)
    label = cluster_labels(chain, m)
    return ClusterFamily(
        depth=m,
        host=chain.graph(2 * m),
        clusters=fibers(label, g.n),
        label=label,
        chain=chain,
    )


def provenance_to_json(prov: Provenance) -> list[dict]:
    return [
        {"vertex": i, "edge": [e.u, e.v]} for i, e in enumerate(prov.origin)
    ]


def clusters_to_json(family: ClusterFamily) -> dict:
    return {
        "depth": family.depth,
        "host_n": family.host.n,
        "clusters": {str(v): list(c) for v, c in enumerate(family.clusters)},
    }
