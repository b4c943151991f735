"""Serialisation and independent re-checking of break certificates."""

from __future__ import annotations

from dataclasses import dataclass, field

from .autgroup import automorphisms, lift_chain
from .distinguish import (
    BreakCertificate,
    Coloring,
    distinguishing_number,
    is_distinguishing,
)
from .exceptions import CapExceeded, LineDistError, ParseError
from .graph import SABIDUSSI_EXCEPTIONS, SpecialClass, classify_special, is_connected, is_lift_exception
from .io import graph_from_json, graph_to_json
from .linegraph import IterationChain, cluster_labels, cluster_sizes, fibers, iterate

SCHEMA = "linedist.break-certificate/1"


def certificate_to_json(cert: BreakCertificate) -> dict:
    return {
        "schema": SCHEMA,
        "graph": graph_to_json(cert.graph),
        "base": graph_to_json(cert.base),
        "m": cert.m,
        "r": cert.r,
        "parity_r_prime": cert.parity_r_prime,
        "K": cert.K,
        "mode": cert.mode,
        "threshold": cert.threshold,
        "remark_fallback": cert.remark_fallback,
        "ones_per_cluster": list(cert.ones_per_cluster),
        "coloring": {
            "k": cert.coloring.k,
            "bits": "".join(str(c - 1) for c in cert.coloring.colors),
        },
    }


def certificate_from_json(obj: dict) -> BreakCertificate:
    if obj.get("schema") != SCHEMA:
        raise ParseError(f"unknown certificate schema {obj.get('schema')!r}")
    try:
        bits = obj["coloring"]["bits"]
        if set(bits) - {"0", "1"}:
            raise ParseError("coloring bits must be '0' or '1'")
        return BreakCertificate(
            graph=graph_from_json(obj["graph"]),
            base=graph_from_json(obj["base"]),
            m=int(obj["m"]),
            r=int(obj["r"]),
            parity_r_prime=int(obj["parity_r_prime"]),
            coloring=Coloring(tuple(int(b) + 1 for b in bits), int(obj["coloring"]["k"])),
            ones_per_cluster=tuple(int(x) for x in obj["ones_per_cluster"]),
            K=int(obj["K"]),
            mode=str(obj["mode"]),
            threshold=int(obj["threshold"]),
            remark_fallback=bool(obj.get("remark_fallback", False)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed certificate: {exc}") from exc


@dataclass
class VerifyReport:
    checks: list[tuple[str, bool]] = field(default_factory=list)
    reason: str | None = None

    @property
    def ok(self) -> bool:
        return self.reason is None and all(ok for _, ok in self.checks)

    def require(self, name: str, ok: bool):
        self.checks.append((name, bool(ok)))
        if not ok and self.reason is None:
            self.reason = name
        return ok

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "reason": self.reason,
            "checks": [{"check": name, "ok": ok} for name, ok in self.checks],
        }


def _least_depth(chain: IterationChain, threshold: int) -> int:
    r = 1
    while True:
        if chain.k < 2 * r - 2:
            chain = chain.extend(2 * r - 2 - chain.k)
        if min(cluster_sizes(chain, r)) >= threshold:
            return r
        r += 1


def _verify_direct(cert: BreakCertificate, report: VerifyReport) -> VerifyReport:
    tag = classify_special(cert.graph)
    report.require("direct mode applies to paths and long cycles", tag in (
        SpecialClass.SINGLE_VERTEX, SpecialClass.P2, SpecialClass.PATH, SpecialClass.CYCLE_LONG))
    report.require("base equals graph", cert.base == cert.graph)
    report.require("indices are zero", cert.m == cert.r == cert.parity_r_prime == cert.K == 0)
    report.require("coloring covers the graph", len(cert.coloring) == cert.graph.n)
    report.require("at most two colors", cert.coloring.k <= 2)
    if report.ok:
        group = automorphisms(cert.graph)
        report.require("coloring distinguishes the graph",
                       is_distinguishing(cert.graph, cert.coloring, group))
    return report


def verify_certificate(cert: BreakCertificate) -> VerifyReport:
    """Recompute everything the certificate claims from its input graph.

    Caps or library errors met along the way fail the verification rather
    than propagate, so a report is always returned.
    """
    report = VerifyReport()
    try:
        return _verify(cert, report)
    except (CapExceeded, LineDistError) as exc:
        report.require(f"recomputation failed: {type(exc).__name__}: {exc}", False)
        return report


def _verify(cert: BreakCertificate, report: VerifyReport) -> VerifyReport:
    g = cert.graph
    if not report.require("graph is connected", is_connected(g)):
        return report
    if cert.mode == "direct":
        return _verify_direct(cert, report)
    if not report.require("mode is rank or remark", cert.mode in ("rank", "remark")):
        return report
    if not report.require("indices are sane", cert.m >= 0 and cert.r >= 1 and cert.parity_r_prime >= 1):
        return report

    pre = iterate(g, cert.m)
    if not report.require("base is L^m(graph)", pre.top == cert.base):
        return report
    h = cert.base
    report.require("base has minimum degree >= 3", h.n > 0 and min(h.degrees) >= 3)
    report.require("base is not a lift exception",
                   classify_special(h) not in SABIDUSSI_EXCEPTIONS)

    chain = iterate(h, 2 * cert.r)
    top = chain.top
    colors = cert.coloring.colors
    if not report.require("coloring covers L^{2r}(base)", len(colors) == top.n):
        return report
    report.require("two colors", cert.coloring.k == 2)

    members = fibers(cluster_labels(chain, cert.r), h.n)
    counts = tuple(sum(1 for z in c if colors[z] == 2) for c in members)
    report.require("ones_per_cluster matches the coloring", counts == cert.ones_per_cluster)
    sizes = [len(c) for c in members]
    report.require("clusters reach the threshold", min(sizes) >= cert.threshold)

    if cert.mode == "rank":
        report.require("threshold is n(base)", cert.threshold == h.n)
        report.require("cluster counts are pairwise distinct", len(set(counts)) == len(counts))
    else:
        ok_range = all(c >= 1 for c in counts)
        report.require("cluster counts are positive", ok_range)
        if ok_range:
            report.require(
                "cluster counts distinguish the base",
                is_distinguishing(h, Coloring(counts, max(counts)), automorphisms(h)),
            )

    r = _least_depth(IterationChain(h), cert.threshold)
    report.require("r is the least admissible depth", r == cert.r)

    h_next = chain.graph(1)
    next_threshold = h_next.n
    if cert.mode == "remark":
        try:
            next_threshold = distinguishing_number(h_next)[0]
        except CapExceeded:
            pass
    r_prime = _least_depth(IterationChain(h_next, chain.links[1:]), next_threshold)
    report.require("parity depth is the least admissible", r_prime == cert.parity_r_prime)
    report.require("K = max(m + 2r, m + 1 + 2r')",
                   cert.K == max(cert.m + 2 * cert.r, cert.m + 1 + 2 * r_prime))

    group = automorphisms(h)
    broken = True
    for phi in group.nontrivial():
        lifted = lift_chain(chain, phi)
        if all(colors[z] == colors[lifted[z]] for z in range(top.n)):
            broken = False
            break
    report.require("every lifted automorphism changes some color", broken)

    # where a level's automorphisms do not all come from below, the lifted
    # elements are only a subgroup and the full group is checked directly
    if any(is_lift_exception(chain.graph(i)) for i in range(2 * cert.r)):
        full = automorphisms(top)
        report.require("coloring distinguishes the full automorphism group",
                       is_distinguishing(top, cert.coloring, full))
    return report
