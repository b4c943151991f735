"""Rooted-tree canonical codes and small-tree corpora."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence

from .exceptions import NotATree
from .graph import Graph, build, is_tree


def rooted_code(g: Graph, root: int, allowed: frozenset[int] | None = None) -> str:
    """AHU code of the tree hanging from ``root``.

    Only vertices in ``allowed`` (default: all) are walked, which lets a
    caller encode one component of a forest without building it. Two rooted
    trees get the same code iff some isomorphism maps root to root.
    """
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in g.adj[v]:
            if u not in parent and (allowed is None or u in allowed):
                parent[u] = v
                order.append(u)
    children: dict[int, list[str]] = {v: [] for v in order}
    code = {}
    for v in reversed(order):
        code[v] = "(" + "".join(sorted(children[v])) + ")"
        if parent[v] >= 0:
            children[parent[v]].append(code[v])
    return code[root]


def tree_center(g: Graph) -> tuple[int, ...]:
    """The one or two vertices left by repeatedly deleting all leaves."""
    if not is_tree(g):
        raise NotATree("center is computed for trees")
    deg = list(g.degrees)
    remaining = g.n
    layer = [v for v in range(g.n) if deg[v] <= 1]
    removed = [False] * g.n
    while remaining > 2:
        nxt = []
        for v in layer:
            removed[v] = True
            remaining -= 1
            for u in g.adj[v]:
                if not removed[u]:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return tuple(v for v in range(g.n) if not removed[v])


def free_tree_code(g: Graph) -> str:
    """Canonical code of an unrooted tree."""
    center = tree_center(g)
    if len(center) == 1:
        return "V" + rooted_code(g, center[0])
    u, w = center
    side_u = frozenset(_side(g, u, w))
    side_w = frozenset(range(g.n)) - side_u
    a, b = sorted([rooted_code(g, u, side_u), rooted_code(g, w, side_w)])
    return "E" + a + b


def _side(g: Graph, start: int, blocked: int) -> list[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in g.adj[v]:
            if u != blocked and u not in seen:
                seen.add(u)
                stack.append(u)
    return sorted(seen)


def tree_from_code(code: str) -> Graph:
    """Tree realising a rooted or free code, vertices in preorder."""
    if code[0] == "V":
        edges, n = _decode_rooted(code[1:], 0)
        return build(n, edges)
    if code[0] == "E":
        first_end = _matching(code, 1)
        left, right = code[1:first_end + 1], code[first_end + 1:]
        e1, n1 = _decode_rooted(left, 0)
        e2, n2 = _decode_rooted(right, n1)
        return build(n1 + n2, e1 + e2 + [(0, n1)])
    edges, n = _decode_rooted(code, 0)
    return build(n, edges)


def _matching(code: str, start: int) -> int:
    depth = 0
    for i in range(start, len(code)):
        depth += 1 if code[i] == "(" else -1
        if depth == 0:
            return i
    raise ValueError(f"unbalanced code {code!r}")


def _decode_rooted(code: str, offset: int) -> tuple[list[tuple[int, int]], int]:
    edges = []
    stack: list[int] = []
    count = 0
    for ch in code:
        if ch == "(":
            v = offset + count
            count += 1
            if stack:
                edges.append((stack[-1], v))
            stack.append(v)
        else:
            stack.pop()
    return edges, count


@lru_cache(maxsize=None)
def _tree_codes(n: int) -> tuple[str, ...]:
    if n < 1:
        return ()
    if n == 1:
        return ("V()",)
    codes = set()
    for code in _tree_codes(n - 1):
        t = tree_from_code(code)
        for v in range(t.n):
            grown = build(n, list(t.edges) + [(v, n - 1)])
            codes.add(free_tree_code(grown))
    return tuple(sorted(codes))


def unlabeled_trees(n: int) -> list[Graph]:
    """One tree per isomorphism class on ``n`` vertices, in code order.

    Built by attaching a leaf to every vertex of every smaller tree and
    keeping canonical codes, which reaches n = 10 in well under a second.
    """
    return [tree_from_code(c) for c in _tree_codes(n)]


def prufer_decode(seq: Sequence[int]) -> Graph:
    """Labelled tree on ``len(seq) + 2`` vertices with Prüfer sequence ``seq``."""
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return build(n, edges)


def prufer_trees(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labelled trees on ``n >= 2`` vertices."""
    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq)


def unlabeled_trees_by_prufer(n: int) -> list[Graph]:
    """Same classes as :func:`unlabeled_trees`, found by deduplicating every
    labelled tree. Exponential; meant as a cross-check for small ``n``."""
    if n == 1:
        return [build(1, [])]
    codes = {free_tree_code(t) for t in prufer_trees(n)}
    return [tree_from_code(c) for c in sorted(codes)]
