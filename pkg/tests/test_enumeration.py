import random

import networkx as nx
import pytest
from hypothesis import given

from linedist.enumeration import (
    free_tree_code,
    prufer_decode,
    prufer_trees,
    rooted_code,
    tree_center,
    tree_from_code,
    unlabeled_trees,
    unlabeled_trees_by_prufer,
)
from linedist.exceptions import NotATree
from linedist.graph import cycle, is_tree, path, relabel, star

from conftest import trees
from oracles import to_nx

COUNTS = [1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106]  # indexed by n


@pytest.mark.parametrize("n", range(1, 11))
def test_counts(n):
    assert len(unlabeled_trees(n)) == COUNTS[n]


@pytest.mark.parametrize("n", range(2, 8))
def test_prufer_dedup_agrees(n):
    codes = [free_tree_code(t) for t in unlabeled_trees(n)]
    assert codes == [free_tree_code(t) for t in unlabeled_trees_by_prufer(n)]


@pytest.mark.parametrize("n", range(1, 11))
def test_against_networkx(n):
    ours = unlabeled_trees(n)
    theirs = list(nx.nonisomorphic_trees(n)) if n > 1 else [nx.empty_graph(1)]
    assert len(ours) == len(theirs)
    for t in ours:
        assert is_tree(t)
        assert sum(nx.is_isomorphic(to_nx(t), T) for T in theirs) == 1


def test_prufer_labelled_count():
    assert sum(1 for _ in prufer_trees(5)) == 5 ** 3
    assert prufer_decode([3, 3, 3]).degrees == (1, 1, 1, 4, 1)


@given(trees(max_n=12))
def test_code_is_isomorphism_invariant(t):
    perm = list(range(t.n))
    random.Random(t.n).shuffle(perm)
    assert free_tree_code(relabel(t, perm)) == free_tree_code(t)
    assert free_tree_code(tree_from_code(free_tree_code(t))) == free_tree_code(t)


def test_rooted_code_distinguishes_roots():
    p3 = path(3)
    assert rooted_code(p3, 0) != rooted_code(p3, 1)
    assert rooted_code(p3, 0) == rooted_code(p3, 2)


def test_center():
    assert tree_center(path(4)) == (1, 2)
    assert tree_center(star(6)) == (0,)
    with pytest.raises(NotATree):
        tree_center(cycle(3))
