"""Independent reference computations used as test oracles.

Nothing here imports the search code under test: automorphisms come from
plain permutation scans or networkx, line graphs from networkx, and
distinguishing numbers from full enumeration of colourings.
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from linedist.graph import Graph, build


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def from_nx(G: nx.Graph) -> Graph:
    G = nx.convert_node_labels_to_integers(G, ordering="sorted")
    return build(G.number_of_nodes(), [tuple(sorted(e)) for e in G.edges()])


def edge_set(g: Graph) -> set[frozenset[int]]:
    return {frozenset(e) for e in g.edges}


def brute_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """Every vertex permutation preserving the edge set, by full scan."""
    edges = edge_set(g)
    out = []
    for p in permutations(range(g.n)):
        if all(frozenset((p[u], p[v])) in edges for u, v in g.edges):
            out.append(p)
    return out


def nx_automorphisms(g: Graph) -> list[tuple[int, ...]]:
    G = to_nx(g)
    found = GraphMatcher(G, G).isomorphisms_iter()
    return sorted(tuple(m[v] for v in range(g.n)) for m in found)


def nx_line_graph(g: Graph) -> Graph:
    """L(g) from networkx, relabelled so vertex i is the i-th edge in
    lexicographic order."""
    L = nx.line_graph(to_nx(g))
    rank = {e: i for i, e in enumerate(sorted(tuple(sorted(e)) for e in g.edges))}
    edges = set()
    for a, b in L.edges():
        i, j = rank[tuple(sorted(a))], rank[tuple(sorted(b))]
        edges.add((min(i, j), max(i, j)))
    return build(g.m, sorted(edges))


def brute_is_distinguishing(colors, group) -> bool:
    return all(
        any(colors[v] != colors[p[v]] for v in range(len(colors)))
        for p in group
        if any(p[v] != v for v in range(len(p)))
    )


def brute_distinguishing_number(g: Graph, group=None) -> int:
    if g.n == 0:
        return 0
    group = brute_automorphisms(g) if group is None else group
    for k in range(1, g.n + 1):
        for colors in product(range(1, k + 1), repeat=g.n):
            if brute_is_distinguishing(colors, group):
                return k
    raise AssertionError("unreachable")


def brute_rooted_count(g: Graph, root: int, k: int) -> int:
    """Orbits of stabiliser-distinguishing k-colourings, computed from the
    definition with a union of explicit orbit sets."""
    stab = [p for p in brute_automorphisms(g) if p[root] == root]
    kept = [c for c in product(range(1, k + 1), repeat=g.n)
            if brute_is_distinguishing(c, stab)]
    classes = set()
    for c in kept:
        orbit = frozenset(tuple(c[p[v]] for v in range(g.n)) for p in stab)
        classes.add(orbit)
    return len(classes)


def nested_line_graph_vertices(g: Graph):
    """Vertices of L(g) and L^2(g) as nested frozensets of base vertices."""
    first = sorted(frozenset(e) for e in g.edges)
    second = [frozenset((a, b)) for a, b in combinations(first, 2) if len(a & b) == 1]
    return first, second


def shared_vertex(pair) -> int:
    a, b = tuple(pair)
    (v,) = a & b
    return v


def least_binomial_m(r: int, k: int) -> int:
    m = 1
    while comb(r + m - 1, m - 1) < k:
        m += 1
    return m


def connected_atlas(min_n: int, max_n: int) -> list[Graph]:
    """Every connected graph on min_n..max_n vertices (max_n <= 7), one
    per isomorphism class."""
    return [from_nx(G) for G in nx.graph_atlas_g()
            if min_n <= G.number_of_nodes() <= max_n and nx.is_connected(G)]
