"""Command-line front end.

    linedist line     --input G.txt --iterations 2
    linedist aut      --input G.txt
    linedist dist     --input G.txt [--max-colors 4]
    linedist clusters --input G.txt --depth 1
    linedist break    --input G.txt [--remark-opt] --output cert.json
    linedist verify   --input cert.json
    linedist tree     --input T.txt
    linedist sweep    --max-n 9

Reports are JSON. Exit codes: 0 ok, 2 parse error, 3 ineligible input,
4 cap exceeded, 5 verification failure, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from datetime import datetime, timezone

from . import __version__
from ._config import config_context
from .autgroup import automorphisms, group_to_json
from .certificate import certificate_from_json, certificate_to_json, verify_certificate
from .distinguish import break_symmetry, distinguishing_number
from .exceptions import (
    CapExceeded,
    IneligibleError,
    LineDistError,
    ParseError,
    VerificationFailed,
)
from .io import dumps, graph_to_json, parse_edge_list, to_dot
from .linegraph import clusters, clusters_to_json, iterate, provenance_to_json
from .treesym import sweep, tree_report

REPORT_SCHEMA = "linedist.report/1"

EXIT_OK, EXIT_OTHER, EXIT_PARSE, EXIT_INELIGIBLE, EXIT_CAP, EXIT_VERIFY = 0, 1, 2, 3, 4, 5

log = logging.getLogger("linedist")


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="report path (default: stdout)")
    common.add_argument("--dot", metavar="PATH", help="also write a DOT rendering")
    common.add_argument("--threads", type=_positive, default=os.cpu_count() or 1)
    common.add_argument("--vertex-cap", type=_positive, default=10**6)
    common.add_argument("--group-cap", type=_positive, default=10**6)
    common.add_argument("--work-cap", type=_positive, default=10**9)

    with_input = argparse.ArgumentParser(add_help=False, parents=[common])
    with_input.add_argument("--input", required=True,
                            help="edge-list file ('-' for stdin)")

    parser = argparse.ArgumentParser(prog="linedist", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("line", parents=[with_input], help="iterated line graph with provenance")
    p.add_argument("--iterations", type=_nonnegative, default=1)
    sub.add_parser("aut", parents=[with_input], help="automorphism group")
    p = sub.add_parser("dist", parents=[with_input], help="distinguishing number and witness")
    p.add_argument("--max-colors", type=_positive)
    p = sub.add_parser("clusters", parents=[with_input], help="vertex clusters in L^{2m}")
    p.add_argument("--depth", type=_positive, default=1)
    p = sub.add_parser("break", parents=[with_input], help="emit a two-colouring certificate")
    p.add_argument("--remark-opt", action="store_true",
                   help="size clusters by D(H) instead of n(H)")
    sub.add_parser("verify", parents=[with_input], help="re-check a stored certificate")
    sub.add_parser("tree", parents=[with_input], help="tree decomposition and increase test")
    p = sub.add_parser("sweep", parents=[common], help="exhaustive tree comparison")
    p.add_argument("--max-n", type=_positive, required=True)
    return parser


def _read_text(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, "rb") as fh:
            return fh.read().decode("ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _report(command: str, **body) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "command": command,
        "timestamp": datetime.now(timezone.utc).isoformat(timespec="seconds"),
        **body,
    }


def _sweep_table(rows) -> str:
    lines = [f"{'n':>3} {'trees':>6} {'D(L(T))>D(T)':>13} {'=':>5} {'<':>5} {'mismatch':>9}"]
    for r in rows:
        lines.append(f"{r.n:>3} {r.trees:>6} {r.increase:>13} {r.equal:>5} {r.decrease:>5} {r.mismatches:>9}")
    return "\n".join(lines) + "\n"


def run(args: argparse.Namespace) -> int:
    cmd = args.command
    if cmd == "sweep":
        rows = sweep(args.max_n, threads=args.threads)
        report = _report(cmd, max_n=args.max_n,
                         rows=[r.__dict__ for r in rows])
        _write(args.output, dumps(report))
        # the table goes wherever the JSON does not
        table = sys.stdout if args.output is not None else sys.stderr
        table.write(_sweep_table(rows))
        return EXIT_OK

    text = _read_text(args.input)
    if cmd == "verify":
        try:
            cert = certificate_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(f"certificate is not JSON: {exc}") from exc
        result = verify_certificate(cert)
        _write(args.output, dumps(_report(cmd, **result.to_json())))
        if not result.ok:
            raise VerificationFailed(result.reason)
        return EXIT_OK

    g = parse_edge_list(text)
    dot_graph, dot_colors = g, None
    if cmd == "line":
        chain = iterate(g, args.iterations)
        report = _report(cmd, input=graph_to_json(g), iterations=args.iterations,
                         graph=graph_to_json(chain.top),
                         provenance=[provenance_to_json(link) for link in chain.links])
        dot_graph = chain.top
    elif cmd == "aut":
        report = _report(cmd, input=graph_to_json(g), **group_to_json(automorphisms(g)))
    elif cmd == "dist":
        k, witness = distinguishing_number(g, args.max_colors)
        report = _report(cmd, input=graph_to_json(g), D=k, witness=list(witness.colors))
        dot_colors = witness.colors
    elif cmd == "clusters":
        family = clusters(g, args.depth)
        report = _report(cmd, input=graph_to_json(g), **clusters_to_json(family))
        dot_graph, dot_colors = family.host, family.label
    elif cmd == "break":
        cert = break_symmetry(g, remark_opt=args.remark_opt)
        report = {**certificate_to_json(cert),
                  "timestamp": _report(cmd)["timestamp"]}
        dot_graph = cert.base
    elif cmd == "tree":
        report = _report(cmd, input=graph_to_json(g), **tree_report(g))
    else:  # pragma: no cover - argparse restricts the choices
        raise ValueError(cmd)
    _write(args.output, dumps(report))
    if args.dot:
        _write(args.dot, to_dot(dot_graph, colors=dot_colors))
    return EXIT_OK


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        with config_context(vertex_cap=args.vertex_cap, group_cap=args.group_cap,
                            work_cap=args.work_cap):
            return run(args)
    except ParseError as exc:
        log.error("ParseError: %s", exc)
        return EXIT_PARSE
    except IneligibleError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INELIGIBLE
    except CapExceeded as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_CAP
    except VerificationFailed as exc:
        log.error("VerificationFailed: %s", exc)
        return EXIT_VERIFY
    except LineDistError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_OTHER


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
