"""Edge-list text format, DOT export and JSON helpers.

The edge-list format is exact: a header line ``"n m"`` followed by ``m``
lines ``"u v"`` with ``u < v``, decimal ASCII, every line LF-terminated,
no comments and no blank lines.
"""

from __future__ import annotations

import json
import re
from typing import Iterable, Sequence

from .exceptions import GraphError, ParseError
from .graph import Graph, build

_LINE = re.compile(r"(0|[1-9][0-9]*) (0|[1-9][0-9]*)")


def parse_edge_list(text: str) -> Graph:
    if not text.endswith("\n"):
        raise ParseError("edge list must end with a newline")
    lines = text[:-1].split("\n")
    header = _LINE.fullmatch(lines[0])
    if header is None:
        raise ParseError(f"bad header line {lines[0]!r}")
    n, m = int(header.group(1)), int(header.group(2))
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges, found {len(lines) - 1} lines")
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        match = _LINE.fullmatch(line)
        if match is None:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(match.group(1)), int(match.group(2))
        if u >= v:
            raise ParseError(f"line {lineno}: endpoints must satisfy u < v")
        edges.append((u, v))
    try:
        return build(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    out = [f"{g.n} {g.m}"]
    out.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def read_edge_list(path) -> Graph:
    with open(path, "rb") as fh:
        raw = fh.read()
    try:
        text = raw.decode("ascii")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not ASCII") from exc
    return parse_edge_list(text)


def write_edge_list(g: Graph, path) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_edge_list(g))


def to_dot(g: Graph, name: str = "G", colors: Sequence[int] | None = None) -> str:
    """Undirected DOT source; vertex labels are the indices."""
    lines = [f"graph {name} {{"]
    for v in range(g.n):
        attrs = f'label="{v}"'
        if colors is not None:
            attrs += f', colorscheme=set19, style=filled, fillcolor={colors[v] % 9 + 1}'
        lines.append(f"  {v} [{attrs}];")
    lines.extend(f"  {u} -- {v};" for u, v in g.edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    try:
        return build(obj["n"], obj["edges"])
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed graph object: {exc}") from exc


def dumps(obj) -> str:
    """Deterministic JSON text used for every report."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def edge_pairs(edges: Iterable[Sequence[int]]) -> list[list[int]]:
    return [[int(a), int(b)] for a, b in edges]
