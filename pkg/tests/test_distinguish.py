import pytest
from hypothesis import given

from linedist._config import config_context
from linedist.autgroup import automorphisms
from linedist.distinguish import (
    Coloring,
    break_symmetry,
    ceil_log3,
    distinguishing_colorings,
    distinguishing_number,
    has_distinguishing_coloring,
    is_distinguishing,
    low_degree_span,
    min_degree_stabilization,
    partition_bound,
    remark_bound,
    rooted_sb_count,
)
from linedist.exceptions import (
    Disconnected,
    IneligibleGraph,
    SizeCapExceeded,
    SizeMismatch,
    WorkCapExceeded,
)
from linedist.graph import build, complete, cycle, double_star, paw, path, star
from linedist.linegraph import iterate, line_graph

from conftest import graphs, trees
from oracles import (
    brute_automorphisms,
    brute_distinguishing_number,
    brute_is_distinguishing,
    brute_rooted_count,
    least_binomial_m,
)


def test_coloring_validates():
    with pytest.raises(ValueError):
        Coloring((1, 3), 2)
    assert len(Coloring((1, 2, 2), 2)) == 3


def test_is_distinguishing_examples():
    c4 = cycle(4)
    assert not is_distinguishing(c4, [1, 1, 1, 1], automorphisms(c4))
    c6 = cycle(6)
    assert is_distinguishing(c6, Coloring((1, 1, 2, 1, 2, 2), 2), automorphisms(c6))
    rigid = build(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (2, 4)])
    assert len(brute_automorphisms(rigid)) == 1
    assert is_distinguishing(rigid, [1] * 6, automorphisms(rigid))


def test_is_distinguishing_size_mismatch():
    with pytest.raises(SizeMismatch):
        is_distinguishing(cycle(4), [1, 2], automorphisms(cycle(4)))


@pytest.mark.parametrize("g,d", [
    (cycle(3), 3), (cycle(4), 3), (cycle(5), 3), (cycle(6), 2), (cycle(7), 2),
    (star(3), 3), (star(4), 4), (complete(4), 4), (complete(5), 5),
    (path(1), 1), (path(2), 2), (path(5), 2), (paw(), 2), (build(0, []), 0),
])
def test_distinguishing_number_values(g, d):
    k, witness = distinguishing_number(g)
    assert k == d
    assert len(witness) == g.n
    if g.n:
        assert is_distinguishing(g, witness, automorphisms(g))


@given(graphs(max_n=6))
def test_distinguishing_number_brute_force(g):
    group = brute_automorphisms(g)
    k, witness = distinguishing_number(g)
    assert k == brute_distinguishing_number(g, group)
    assert brute_is_distinguishing(witness.colors, group)


@given(graphs(max_n=7))
def test_rigid_iff_one(g):
    k, _ = distinguishing_number(g)
    assert (k == 1) == (g.n >= 1 and automorphisms(g).is_trivial())


def test_max_colors_cap():
    with pytest.raises(WorkCapExceeded):
        distinguishing_number(complete(5), max_colors=3)
    with config_context(work_cap=10):
        with pytest.raises(WorkCapExceeded):
            distinguishing_number(complete(6))


@given(graphs(max_n=6))
def test_all_distinguishing_colorings(g):
    from itertools import product
    group = brute_automorphisms(g)
    expected = {c for c in product((1, 2), repeat=g.n) if brute_is_distinguishing(c, group)}
    got = [c.colors for c in distinguishing_colorings(g, 2)]
    assert len(got) == len(set(got))
    assert set(got) == expected


def test_has_distinguishing_coloring_with_tie():
    p4 = path(4)
    found = has_distinguishing_coloring(p4, 2, tie={2: 1}, first=[1, 2])
    assert found is not None and found[1] == found[2]
    assert has_distinguishing_coloring(complete(4), 3) is None


def test_large_group_uses_search_oracle():
    # the group is far beyond the explicit-list limit
    k, witness = distinguishing_number(star(8))
    assert k == 8
    assert sorted(witness.colors[1:]) == list(range(1, 9))


@pytest.mark.parametrize("g,root,k,count", [
    (path(1), 0, 1, 1), (path(1), 0, 3, 3),
    (path(2), 0, 2, 4),
    (star(2), 0, 2, 2),
])
def test_rooted_sb_count_examples(g, root, k, count):
    assert rooted_sb_count(g, root, k) == count


def test_cherry_classes_have_distinct_root_colours():
    cherry = star(2)
    from itertools import product
    stab = [p for p in brute_automorphisms(cherry) if p[0] == 0]
    kept = [c for c in product((1, 2), repeat=3) if brute_is_distinguishing(c, stab)]
    assert {c[0] for c in kept} == {1, 2}
    assert rooted_sb_count(cherry, 0, 2) == 2


@given(trees(max_n=6))
def test_rooted_sb_count_brute_force(t):
    for k in (1, 2, 3):
        assert rooted_sb_count(t, 0, k) == brute_rooted_count(t, 0, k)


@given(graphs(min_n=1, max_n=5))
def test_rooted_sb_count_monotone(g):
    counts = [rooted_sb_count(g, 0, k) for k in (1, 2, 3, 4)]
    assert counts == sorted(counts)


def test_rooted_sb_count_bad_input():
    with pytest.raises(ValueError):
        rooted_sb_count(path(3), 0, 0)
    with pytest.raises(IndexError):
        rooted_sb_count(path(3), 5, 2)


@pytest.mark.parametrize("r,k", [(r, k) for r in range(1, 7) for k in range(1, 30)])
def test_partition_bound(r, k):
    assert partition_bound(r, k) == least_binomial_m(r, k)


def test_partition_bound_rejects():
    with pytest.raises(ValueError):
        partition_bound(0, 3)


@pytest.mark.parametrize("g,k", [(complete(4), 0), (star(4), 1), (paw(), 2), (double_star(2), 3)])
def test_min_degree_stabilization(g, k):
    assert min_degree_stabilization(g) == k
    chain = iterate(g, k)
    assert min(chain.top.degrees) >= 3
    assert k == 0 or min(chain.graph(k - 1).degrees) < 3


@pytest.mark.parametrize("g", [path(5), cycle(4), cycle(8), star(3), path(2), path(1)])
def test_min_degree_stabilization_ineligible(g):
    with pytest.raises(IneligibleGraph):
        min_degree_stabilization(g)


def test_min_degree_stabilization_disconnected():
    with pytest.raises(Disconnected):
        min_degree_stabilization(build(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]))


def test_ceil_log3():
    assert [ceil_log3(x) for x in (1, 2, 3, 4, 9, 10, 27, 28)] == [0, 1, 1, 2, 2, 3, 3, 4]


def test_remark_bound_k4():
    rb = remark_bound(complete(4))
    assert rb.p == 0
    d_l = brute_distinguishing_number(line_graph(complete(4)).child)
    assert (rb.d_p, rb.d_p1) == (4, d_l)
    assert rb.K == max(2 * ceil_log3(4), 1 + 2 * ceil_log3(d_l))
    assert rb.substituted == (False, False)


def test_remark_bound_paw():
    assert low_degree_span(paw()) == 2
    rb = remark_bound(paw())
    assert rb.p == 2
    assert rb.to_json()["p"] == 2


@given(graphs(min_n=4, max_n=6, connected=True))
def test_low_degree_span_zero_when_min_degree_three(g):
    if min(g.degrees) >= 3:
        assert low_degree_span(g) == 0


def test_break_k4():
    cert = break_symmetry(complete(4))
    assert (cert.m, cert.r, cert.mode) == (0, 2, "rank")
    assert sorted(cert.ones_per_cluster) == [0, 1, 2, 3]
    assert cert.K == max(cert.m + 2 * cert.r, cert.m + 1 + 2 * cert.parity_r_prime)
    assert len(cert.coloring) == 180


def test_break_paw():
    cert = break_symmetry(paw())
    assert cert.m == 2
    assert cert.base == iterate(paw(), 2).top
    assert len(set(cert.ones_per_cluster)) == cert.base.n


def test_break_cycle_is_direct():
    cert = break_symmetry(cycle(6))
    assert cert.mode == "direct" and cert.K == 0
    assert cert.coloring.k == 2


@pytest.mark.parametrize("g", [cycle(3), cycle(4), cycle(5), star(3), build(0, [])])
def test_break_ineligible(g):
    with pytest.raises((IneligibleGraph, Disconnected)):
        break_symmetry(g)


def test_break_respects_vertex_cap():
    with pytest.raises(SizeCapExceeded):
        break_symmetry(paw(), vertex_cap=10)


def test_break_remark_mode_is_smaller():
    rank = break_symmetry(paw())
    remark = break_symmetry(paw(), remark_opt=True)
    assert remark.mode == "remark"
    assert remark.K <= rank.K
    assert min(remark.ones_per_cluster) >= 1


@pytest.mark.parametrize("g", [complete(4), complete(5), star(4)])
def test_certificate_index_is_two_distinguishable(g):
    cert = break_symmetry(g)
    top = iterate(g, cert.K).top
    assert has_distinguishing_coloring(top, 2) is not None
