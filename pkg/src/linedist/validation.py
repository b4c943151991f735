"""Input coercion shared by the estimators and the CLI."""

from __future__ import annotations

from .exceptions import Disconnected, GraphError, NotATree
from .graph import Graph, build, is_connected, is_tree


def check_graph(X, *, connected: bool = False, tree: bool = False) -> Graph:
    """Coerce ``X`` to a :class:`Graph`.

    Accepts a ``Graph``, an ``(n, edges)`` pair, or any object exposing
    ``number_of_nodes()`` and ``edges()`` over the integers ``0..n-1`` (a
    networkx graph, for instance).
    """
    if isinstance(X, Graph):
        g = X
    elif hasattr(X, "number_of_nodes") and hasattr(X, "edges"):
        n = X.number_of_nodes()
        nodes = sorted(X.nodes()) if hasattr(X, "nodes") else list(range(n))
        if nodes != list(range(n)):
            raise GraphError("graph nodes must be the integers 0..n-1")
        g = build(n, X.edges())
    elif isinstance(X, tuple) and len(X) == 2:
        g = build(X[0], X[1])
    else:
        raise TypeError(f"cannot interpret {type(X).__name__} as a graph")
    if connected and not is_connected(g):
        raise Disconnected("a connected graph is required")
    if tree and not is_tree(g):
        raise NotATree("a tree is required")
    return g


def check_positive(name: str, value, allow_none: bool = False):
    if value is None and allow_none:
        return None
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")
    return value


def check_nonnegative(name: str, value):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
    return value
