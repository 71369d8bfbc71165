from __future__ import annotations

import networkx as nx
import pytest

from rdlab.enumeration import (
    ENUM_CAP,
    all_trees,
    count_trees_labeled_oracle,
    labeled_tree_classes,
    prufer_to_tree,
)
from rdlab.graph import canonical_code, path, star
from rdlab.oracle import CapExceeded

KNOWN = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]


def test_examples():
    assert len(list(all_trees(1))) == 1
    four = list(all_trees(4))
    assert sorted(canonical_code(t) for t in four) == sorted([canonical_code(path(4)), canonical_code(star(3))])
    assert len(list(all_trees(7))) == 11


def test_oracle_examples():
    assert count_trees_labeled_oracle(2) == 1
    assert count_trees_labeled_oracle(5) == 3
    assert count_trees_labeled_oracle(6) == 6


@pytest.mark.parametrize("n", range(1, 15))
def test_counts(n):
    ts = list(all_trees(n))
    assert len(ts) == KNOWN[n - 1]
    codes = [canonical_code(t) for t in ts]
    assert codes == sorted(set(codes))
    assert all(t.n == n and len(t.edges) == n - 1 for t in ts)


@pytest.mark.parametrize("n", range(2, 12))
def test_matches_networkx(n):
    ours = {canonical_code(t) for t in all_trees(n)}
    theirs = set()
    for g in nx.nonisomorphic_trees(n):
        t = prufer_to_tree(tuple(nx.to_prufer_sequence(g))) if n > 2 else path(2)
        theirs.add(canonical_code(t))
    assert ours == theirs


@pytest.mark.parametrize("n", range(3, 9))
def test_prufer_oracle(n):
    compiled = labeled_tree_classes(n)
    assert compiled == labeled_tree_classes(n, compiled=False)
    assert compiled == {canonical_code(t) for t in all_trees(n)}


def test_deterministic_stream():
    assert [canonical_code(t) for t in all_trees(9)] == [canonical_code(t) for t in all_trees(9)]


def test_caps():
    with pytest.raises(CapExceeded):
        list(all_trees(ENUM_CAP + 1))
    with pytest.raises(CapExceeded):
        count_trees_labeled_oracle(11)
