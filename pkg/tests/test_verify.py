from __future__ import annotations

import json

from rdlab.verify import (
    verify_bound_sandwich,
    verify_lemmas_on_traces,
    verify_oracle_dp,
    verify_theorem_F,
    verify_theorem_H,
)


def test_small_sweeps_pass():
    for rep in (verify_bound_sandwich(9), verify_theorem_H(10), verify_theorem_F(10), verify_oracle_dp(8, 7)):
        assert rep.passed, rep.failures[:1]
        assert rep.per_n[max(rep.per_n)] == {8: 23, 9: 47, 10: 106}[max(rep.per_n)]


def test_report_bookkeeping():
    rep = verify_theorem_H(8)
    assert rep.trees_checked == sum(rep.per_n.values()) == 1 + 2 + 3 + 6 + 11 + 23
    doc = rep.to_json()
    assert doc["passed"] and doc["failure_count"] == 0 and "wall_time" not in doc
    assert "wall_time" in rep.to_json(include_timing=True)
    assert json.loads(rep.dumps()) == doc


def test_reports_are_deterministic():
    a = verify_lemmas_on_traces("F", 20, 14, seed=9)
    b = verify_lemmas_on_traces("F", 20, 14, seed=9)
    assert a.dumps() == b.dumps()
    assert verify_theorem_F(9, seed=3).dumps() == verify_theorem_F(9, seed=3).dumps()


def test_theorem_f_counterexample_is_reported():
    rep = verify_theorem_F(11, n_min=11)
    assert not rep.passed and len(rep.failures) == 1
    bad = rep.failures[0]
    assert bad["code"] == "((((())))(((())))(()))"
    assert (bad["gamma_r"], bad["gamma_ri"]) == (5, 10)
    assert bad["got"] == {"recognized": None}


def test_lemma_suites_small():
    assert verify_lemmas_on_traces("F", 40, 14, seed=1).passed
    rep = verify_lemmas_on_traces("H", 40, 12, seed=1)
    assert rep.passed and rep.trees_checked == 40


def test_workers_agree():
    assert verify_theorem_H(9, workers=2).dumps() == verify_theorem_H(9).dumps()
