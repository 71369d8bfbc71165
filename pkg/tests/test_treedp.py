from __future__ import annotations

from conftest import trees
from hypothesis import given

from rdlab import oracle
from rdlab.certificates import Assignment, is_rds, is_ridf
from rdlab.graph import double_star, path, star
from rdlab.treedp import (
    IN,
    OUT_D,
    OUT_DS,
    OUT_NONE,
    OUT_S,
    RIDF_STATES,
    gamma_r_tree,
    gamma_ri_tree,
    rds_child_ok,
    report,
    ridf_child_ok,
)


def test_gamma_r_examples():
    assert gamma_r_tree(path(4)) == (2, frozenset({0, 3}))
    assert gamma_r_tree(path(7))[0] == 3
    assert gamma_r_tree(double_star(2, 2)) == (4, frozenset({2, 3, 4, 5}))


def test_gamma_ri_examples():
    assert gamma_ri_tree(path(4)) == (4, Assignment((2, 0, 0, 2)))
    assert gamma_ri_tree(path(6))[0] == 6
    assert gamma_ri_tree(star(3)) == (4, Assignment((1, 1, 1, 1)))


def test_tiny_trees():
    assert gamma_r_tree(path(1)) == (1, frozenset({0}))
    assert gamma_r_tree(path(2)) == (2, frozenset({0, 1}))
    assert gamma_ri_tree(path(2)) == (2, Assignment((1, 1)))


def test_rds_child_finalisation():
    # an unselected child with neither requirement met cannot be finished by any parent
    assert not rds_child_ok(IN, OUT_NONE)
    assert not rds_child_ok(OUT_DS, OUT_NONE)
    assert rds_child_ok(IN, OUT_S) and not rds_child_ok(IN, OUT_D)
    assert rds_child_ok(OUT_DS, OUT_D) and not rds_child_ok(OUT_DS, OUT_S)
    assert rds_child_ok(IN, IN) and rds_child_ok(OUT_DS, OUT_DS)


def test_ridf_child_finalisation():
    idx = {st: i for i, st in enumerate(RIDF_STATES)}
    two, one, zero_done = idx[(2, 0, 0)], idx[(1, 0, 0)], idx[(0, 2, 1)]
    deficit2_no_zero = idx[(0, 0, 0)]
    for parent in range(len(RIDF_STATES)):
        assert not ridf_child_ok(parent, deficit2_no_zero)
        assert ridf_child_ok(parent, zero_done)
    assert ridf_child_ok(two, idx[(0, 0, 1)])
    assert not ridf_child_ok(one, idx[(0, 0, 1)])
    assert ridf_child_ok(idx[(0, 0, 0)], idx[(0, 2, 0)])
    assert not ridf_child_ok(two, idx[(0, 2, 0)])


def test_json_report():
    doc = report(path(4), "gamma_ri")
    assert doc["method"] == "treedp" and doc["value"] == 4 and doc["witnesses"] == [[2, 0, 0, 2]]


@given(trees(max_n=11))
def test_gamma_r_matches_oracle(t):
    value, s = gamma_r_tree(t)
    rep = oracle.gamma_r_bruteforce(t)
    assert value == rep.value
    assert is_rds(t, s)[0] and s in rep.witnesses


@given(trees(max_n=9))
def test_gamma_ri_matches_oracle(t):
    value, f = gamma_ri_tree(t)
    rep = oracle.gamma_ri_bruteforce(t)
    assert value == rep.value == f.weight
    assert is_ridf(t, f)[0] and f in rep.witnesses


@given(trees(min_n=2, max_n=60))
def test_large_tree_witnesses(t):
    r, s = gamma_r_tree(t)
    ri, f = gamma_ri_tree(t)
    assert len(s) == r and is_rds(t, s)[0]
    assert f.weight == ri and is_ridf(t, f)[0]
    assert r <= ri <= 2 * r
