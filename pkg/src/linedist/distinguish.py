"""Symmetry-breaking colourings: exact distinguishing numbers, rooted class
counts, and the cluster two-colouring of iterated line graphs."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from ._config import get_config
from .autgroup import (
    AutGroup,
    automorphisms,
    find_nontrivial_automorphism,
    identity,
    refine,
)
from .exceptions import (
    CapExceeded,
    Disconnected,
    GroupTooLarge,
    IneligibleGraph,
    SizeMismatch,
    WorkCapExceeded,
)
from .graph import (
    SABIDUSSI_EXCEPTIONS,
    Graph,
    SpecialClass,
    classify_special,
    components,
    induced_subgraph,
    is_connected,
    is_lift_exception,
    min_degree,
)
from .linegraph import IterationChain, cluster_labels, cluster_sizes, fibers, iterate

# groups up to this order are materialised for pruning; larger ones are
# probed with a fresh automorphism search per node instead
EXPLICIT_GROUP_LIMIT = 5000


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if self.k < 0:
            raise ValueError(f"palette size must be nonnegative, got {self.k}")
        bad = [c for c in self.colors if not 1 <= c <= self.k]
        if bad:
            raise ValueError(f"colours {sorted(set(bad))} outside 1..{self.k}")

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, v):
        return self.colors[v]


def _colors_of(coloring) -> tuple[int, ...]:
    return coloring.colors if isinstance(coloring, Coloring) else tuple(coloring)


def is_distinguishing(g: Graph, coloring, group: AutGroup) -> bool:
    """True iff every non-identity element of ``group`` moves some vertex to
    a vertex of a different colour."""
    colors = _colors_of(coloring)
    if len(colors) != g.n:
        raise SizeMismatch(f"colouring has {len(colors)} entries for n={g.n}")
    if group.host.n != g.n:
        raise SizeMismatch("group acts on a different vertex set")
    ident = identity(g.n)
    for p in group.elements:
        if p == ident:
            continue
        if all(colors[v] == colors[p[v]] for v in range(g.n)):
            return False
    return True


# -- enumeration machinery ------------------------------------------------------

class _Work:
    def __init__(self, cap=None):
        self.cap = get_config()["work_cap"] if cap is None else cap
        self.steps = 0

    def step(self):
        self.steps += 1
        if self.steps > self.cap:
            raise WorkCapExceeded(f"colouring search exceeded {self.cap} steps")


class _ElementOracle:
    """Prunes with an explicit group: an element is tested once every vertex
    it moves has been coloured."""

    def __init__(self, group: AutGroup, order: Sequence[int]):
        pos = {v: i for i, v in enumerate(order)}
        self.buckets: list[list[tuple[list[int], tuple[int, ...]]]] = [[] for _ in order]
        for p in group.nontrivial():
            moved = [v for v, w in enumerate(p) if v != w]
            self.buckets[max(pos[v] for v in moved)].append((moved, p))

    def violated(self, depth: int, colors: list[int]) -> bool:
        for moved, p in self.buckets[depth]:
            if all(colors[v] == colors[p[v]] for v in moved):
                return True
        return False


class _SearchOracle:
    """Prunes by searching for a colour-preserving automorphism that fixes
    every uncoloured vertex; used when the group is too large to list."""

    def __init__(self, g: Graph, fixed: Sequence[int] = ()):
        self.g = g
        self.fixed = tuple(fixed)

    def violated(self, depth: int, colors: list[int]) -> bool:
        n = self.g.n
        probe = [c if c else n + 2 + v for v, c in enumerate(colors)]
        for i, v in enumerate(self.fixed):
            probe[v] = 2 * n + 3 + i
        return find_nontrivial_automorphism(self.g, probe) is not None


def _oracle(g: Graph, order, fixed=()):
    try:
        group = automorphisms(g, fixed=fixed, limit=EXPLICIT_GROUP_LIMIT)
    except GroupTooLarge:
        return None, _SearchOracle(g, fixed)
    return group, _ElementOracle(group, order)


def search_order(g: Graph, first: Sequence[int] = ()) -> list[int]:
    """Vertices grouped by equitable cell so that interchangeable vertices are
    coloured close together and their symmetries are pruned early."""
    colors = refine(g.adj, [0] * g.n)
    head = list(first)
    rest = sorted((v for v in range(g.n) if v not in set(head)), key=lambda v: (colors[v], v))
    return head + rest


def _enumerate(
    n: int,
    k: int,
    oracle,
    order: Sequence[int],
    work: _Work,
    canonical: bool,
    tie: dict[int, int] | None = None,
) -> Iterator[tuple[int, ...]]:
    """Depth-first enumeration of complete distinguishing colourings.

    With ``canonical`` set, colour values appear in first-use order; every
    colouring is a relabelling of exactly one such colouring and relabelling
    preserves distinguishing, so existence answers are unchanged. ``tie``
    forces ``colors[v] == colors[tie[v]]`` (the tied vertex comes earlier).
    """
    colors = [0] * n
    tie = tie or {}

    def rec(depth: int, used: int):
        if depth == n:
            yield tuple(colors)
            return
        v = order[depth]
        if v in tie:
            choices = [colors[tie[v]]]
        else:
            top = min(k, used + 1) if canonical else k
            choices = range(1, top + 1)
        for c in choices:
            work.step()
            colors[v] = c
            if oracle.violated(depth, colors):
                continue
            yield from rec(depth + 1, max(used, c))
        colors[v] = 0

    return rec(0, 0)


def distinguishing_colorings(g: Graph, k: int, group: AutGroup | None = None) -> Iterator[Coloring]:
    """Every ``k``-colouring of ``g`` that distinguishes ``group`` (default
    ``Aut(g)``), in search order."""
    order = search_order(g)
    if group is None:
        group, oracle = _oracle(g, order)
    else:
        oracle = _ElementOracle(group, order)
    for colors in _enumerate(g.n, k, oracle, order, _Work(), canonical=False):
        yield Coloring(colors, k)


def distinguishing_number(g: Graph, max_colors: int | None = None) -> tuple[int, Coloring]:
    """Least ``k`` admitting a distinguishing ``k``-colouring, with a witness.

    By convention the null graph has ``D = 0`` and the one-vertex graph
    ``D = 1``; ``D = 1`` exactly when ``Aut(g)`` is trivial.
    """
    if g.n == 0:
        return 0, Coloring((), 0)
    order = search_order(g)
    group, oracle = _oracle(g, order)
    trivial = group.is_trivial() if group is not None else False
    if trivial:
        return 1, Coloring((1,) * g.n, 1)
    work = _Work()
    for k in range(2, g.n + 1):
        if max_colors is not None and k > max_colors:
            raise WorkCapExceeded(f"D exceeds --max-colors={max_colors}")
        found = next(_enumerate(g.n, k, oracle, order, work, canonical=True), None)
        if found is not None:
            return k, Coloring(found, k)
    raise AssertionError("the all-distinct colouring always distinguishes")


def has_distinguishing_coloring(g: Graph, k: int, tie: dict[int, int] | None = None,
                                first: Sequence[int] = ()) -> Coloring | None:
    """A distinguishing ``k``-colouring obeying the ``tie`` constraints, if any."""
    order = search_order(g, first)
    group, oracle = _oracle(g, order)
    found = next(_enumerate(g.n, k, oracle, order, _Work(), canonical=True, tie=tie), None)
    return None if found is None else Coloring(found, k)


def rooted_sb_count(g: Graph, root: int, k: int) -> int:
    """Number of classes of ``k``-colourings distinguishing the stabiliser of
    ``root``, two colourings being equivalent when they differ by an element
    of that stabiliser."""
    if k < 1:
        raise ValueError(f"palette size must be at least 1, got {k}")
    if not 0 <= root < g.n:
        raise IndexError(f"root {root} outside [0, {g.n})")
    stab = automorphisms(g, fixed=[root])
    order = search_order(g, [root])
    kept = set(_enumerate(g.n, k, _ElementOracle(stab, order), order, _Work(), canonical=False))
    classes = 0
    seen: set[tuple[int, ...]] = set()
    for f in sorted(kept):
        if f in seen:
            continue
        classes += 1
        orbit = {tuple(f[p[v]] for v in range(g.n)) for p in stab.elements}
        seen |= orbit
    return classes


def partition_bound(r: int, k: int) -> int:
    """Least ``m >= 1`` with ``C(r + m - 1, m - 1) >= k``: the number of colours
    needed so that ``r`` vertices admit ``k`` distinct colour-count profiles."""
    if r < 1 or k < 1:
        raise ValueError("partition_bound needs r >= 1 and k >= 1")
    m = 1
    while comb(r + m - 1, m - 1) < k:
        m += 1
    return m


# -- iterated line graphs -------------------------------------------------------

_NEVER_STABILIZES = {
    SpecialClass.EMPTY,
    SpecialClass.SINGLE_VERTEX,
    SpecialClass.P2,
    SpecialClass.PATH,
    SpecialClass.CYCLE3,
    SpecialClass.CYCLE4,
    SpecialClass.CYCLE5,
    SpecialClass.CYCLE_LONG,
    SpecialClass.CLAW,
}


def _require_connected(g: Graph):
    if not is_connected(g):
        raise Disconnected("operation requires a connected graph")


def _stabilization_chain(g: Graph, vertex_cap=None) -> IterationChain:
    _require_connected(g)
    tag = classify_special(g)
    if tag in _NEVER_STABILIZES:
        raise IneligibleGraph(f"{tag.value} never reaches minimum degree 3")
    chain = IterationChain(g)
    while min_degree(chain.top) < 3:
        chain = chain.extend(1, vertex_cap)
    return chain


def min_degree_stabilization(g: Graph, vertex_cap=None) -> int:
    """Least ``k`` with minimum degree of ``L^k(g)`` at least 3."""
    return _stabilization_chain(g, vertex_cap).k


def ceil_log3(x: int) -> int:
    t, power = 0, 1
    while power < x:
        power *= 3
        t += 1
    return t


@dataclass(frozen=True)
class RemarkBound:
    p: int
    K: int
    d_p: int
    d_p1: int
    substituted: tuple[bool, bool]

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "K": self.K,
            "D_p": self.d_p,
            "D_p_plus_1": self.d_p1,
            "substituted": list(self.substituted),
        }


def low_degree_span(g: Graph) -> int:
    """Largest component order after deleting every vertex of degree >= 3."""
    keep = [v for v in range(g.n) if g.degrees[v] < 3]
    if not keep:
        return 0
    sub, _ = induced_subgraph(g, keep)
    return max(len(c) for c in components(sub))


def remark_bound(g: Graph, vertex_cap=None) -> RemarkBound:
    """Upper bound on the stabilisation index from the degree <= 2 span.

    When an exact distinguishing number is out of reach the vertex count of
    the iterate is used in its place and the substitution is flagged.
    """
    _stabilization_chain(g, vertex_cap)
    p = low_degree_span(g)
    chain = iterate(g, p + 1, vertex_cap)
    values, flags = [], []
    for level in (p, p + 1):
        h = chain.graph(level)
        try:
            d, _ = distinguishing_number(h)
            flags.append(False)
        except CapExceeded:
            d = h.n
            flags.append(True)
        values.append(d)
    K = max(p + 2 * ceil_log3(values[0]), p + 1 + 2 * ceil_log3(values[1]))
    return RemarkBound(p, K, values[0], values[1], tuple(flags))


@dataclass(frozen=True)
class BreakCertificate:
    """Witness that ``L^K(graph)`` admits a distinguishing 2-colouring for
    every iterate from ``K`` on.

    ``coloring`` colours ``L^{2r}(base)`` where ``base = L^m(graph)``; inside
    the cluster of base vertex ``v`` exactly ``ones_per_cluster[v]`` vertices
    get colour 2. ``mode`` is ``"rank"`` (counts are the distinct ranks
    0..n-1), ``"remark"`` (counts form an optimal distinguishing colouring of
    the base) or ``"direct"`` (graphs the line graph fixes or shrinks, where
    ``coloring`` colours ``graph`` itself).
    """

    graph: Graph
    base: Graph
    m: int
    r: int
    parity_r_prime: int
    coloring: Coloring
    ones_per_cluster: tuple[int, ...]
    K: int
    mode: str
    threshold: int
    remark_fallback: bool = False


def _first_depth(chain: IterationChain, threshold: int, vertex_cap) -> tuple[int, IterationChain]:
    """Least ``r`` whose clusters all reach ``threshold``; the chain is
    extended only as far as the size computation needs."""
    r = 1
    while True:
        if chain.k < 2 * r - 2:
            chain = chain.extend(2 * r - 2 - chain.k, vertex_cap)
        if min(cluster_sizes(chain, r)) >= threshold:
            return r, chain
        r += 1


def _threshold(h: Graph, remark_opt: bool):
    """Cluster size needed, the per-vertex counts, and whether the
    optimisation had to fall back."""
    if remark_opt:
        try:
            d, f = distinguishing_number(h)
            return d, f.colors, False
        except CapExceeded:
            pass
    return h.n, tuple(range(h.n)), remark_opt


def break_symmetry(g: Graph, remark_opt: bool = False, vertex_cap=None) -> BreakCertificate:
    _require_connected(g)
    tag = classify_special(g)
    if tag in (SpecialClass.EMPTY, SpecialClass.CYCLE3, SpecialClass.CYCLE4,
               SpecialClass.CYCLE5, SpecialClass.CLAW):
        raise IneligibleGraph(f"{tag.value} is excluded: its iterates are never 2-distinguishable")
    if tag in (SpecialClass.SINGLE_VERTEX, SpecialClass.P2, SpecialClass.PATH,
               SpecialClass.CYCLE_LONG):
        d, f = distinguishing_number(g)
        return BreakCertificate(
            graph=g, base=g, m=0, r=0, parity_r_prime=0, coloring=f,
            ones_per_cluster=(), K=0, mode="direct", threshold=d,
        )

    chain = _stabilization_chain(g, vertex_cap)
    while classify_special(chain.top) in SABIDUSSI_EXCEPTIONS:
        chain = chain.extend(1, vertex_cap)
    while True:
        cert, h_chain = _cluster_certificate(g, chain, remark_opt, vertex_cap)
        if _lifts_cover(h_chain, cert):
            return cert
        chain = chain.extend(1, vertex_cap)


def _lifts_cover(h_chain: IterationChain, cert: BreakCertificate) -> bool:
    """Whether checking lifted automorphisms suffices, or, where some level
    of the chain is a lift exception, whether the colouring also breaks the
    full automorphism group of the coloured iterate."""
    levels = range(2 * cert.r)
    if not any(is_lift_exception(h_chain.graph(i)) for i in levels):
        return True
    top = h_chain.graph(2 * cert.r)
    try:
        full = automorphisms(top)
    except CapExceeded:
        return False
    return is_distinguishing(top, cert.coloring, full)


def _cluster_certificate(g, chain, remark_opt, vertex_cap):
    m = chain.k
    h = chain.top

    threshold, ones, fallback = _threshold(h, remark_opt)
    r, h_chain = _first_depth(IterationChain(h), threshold, vertex_cap)
    if h_chain.k < 2 * r:
        h_chain = h_chain.extend(2 * r - h_chain.k, vertex_cap)

    h_next = h_chain.graph(1)
    threshold_next, _, fallback_next = _threshold(h_next, remark_opt)
    r_prime, _ = _first_depth(
        IterationChain(h_next, h_chain.links[1:]), threshold_next, vertex_cap
    )

    label = cluster_labels(h_chain, r)
    members = fibers(label, h.n)
    colors = [1] * len(label)
    for v, cluster in enumerate(members):
        for z in cluster[: ones[v]]:
            colors[z] = 2
    mode = "rank" if not remark_opt or fallback else "remark"
    cert = BreakCertificate(
        graph=g,
        base=h,
        m=m,
        r=r,
        parity_r_prime=r_prime,
        coloring=Coloring(colors, 2),
        ones_per_cluster=tuple(ones),
        K=max(m + 2 * r, m + 1 + 2 * r_prime),
        mode=mode,
        threshold=threshold,
        remark_fallback=fallback or fallback_next,
    )
    return cert, h_chain
