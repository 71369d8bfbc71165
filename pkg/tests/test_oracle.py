from __future__ import annotations

import json

import pytest
from conftest import trees
from hypothesis import given, settings

from rdlab import oracle
from rdlab.certificates import Assignment, is_dominating, is_packing, is_rds, is_ridf
from rdlab.graph import Graph, double_star, path, star


def test_gamma_examples():
    rep = oracle.gamma_bruteforce(star(3))
    assert rep.value == 1 and rep.witnesses == (frozenset({0}),)
    assert oracle.gamma_bruteforce(path(4)).value == 2
    assert oracle.gamma_bruteforce(path(7)).value == 3


def test_gamma_r_examples():
    rep = oracle.gamma_r_bruteforce(path(4))
    assert rep.value == 2 and rep.witnesses == (frozenset({0, 3}),)
    assert oracle.gamma_r_bruteforce(star(3)).value == 4
    assert oracle.gamma_r_bruteforce(path(6)).value == 4


def test_gamma_ri_examples():
    rep = oracle.gamma_ri_bruteforce(path(4))
    assert rep.value == 4 and Assignment((2, 0, 0, 2)) in rep.witnesses
    assert oracle.gamma_ri_bruteforce(double_star(2, 3)).value == 5
    assert oracle.gamma_ri_bruteforce(path(6)).value == 6


def test_rho_examples():
    rep = oracle.rho_bruteforce(path(7))
    assert rep.value == 3 and frozenset({0, 3, 6}) in rep.witnesses
    assert oracle.rho_bruteforce(star(3)).value == 1
    assert oracle.rho_bruteforce(path(4)).value == 2


def test_disconnected_inputs():
    g = Graph(3, frozenset({(0, 1)}))
    assert oracle.gamma_r_bruteforce(g).value == 3
    assert oracle.gamma_ri_bruteforce(g).value == 3


def test_caps():
    with pytest.raises(oracle.CapExceeded):
        oracle.gamma_ri_bruteforce(path(oracle.RIDF_CAP + 1))
    with pytest.raises(oracle.CapExceeded):
        oracle.gamma_r_bruteforce(path(8), cap=5)


def test_json_report():
    doc = oracle.gamma_r_bruteforce(path(4)).to_json("gamma_r", 4)
    assert doc == {"n": 4, "invariant": "gamma_r", "method": "bruteforce", "value": 2,
                   "witness_count": 1, "witnesses": [[0, 3]]}
    json.dumps(doc)


@given(trees(max_n=9))
def test_witnesses_valid_and_minimal(t):
    rep = oracle.gamma_r_bruteforce(t)
    for w in rep.witnesses:
        assert is_rds(t, w)[0]
        for v in w:
            assert not is_rds(t, w - {v})[0] or len(w) - 1 >= rep.value
    for w in oracle.rho_bruteforce(t).witnesses:
        assert is_packing(t, w)[0]


@given(trees(max_n=9))
def test_sandwich_and_gamma_order(t):
    g = oracle.gamma_bruteforce(t).value
    r = oracle.gamma_r_bruteforce(t).value
    ri = oracle.gamma_ri_bruteforce(t).value
    assert g <= r <= ri <= 2 * r


@settings(max_examples=30)
@given(trees(max_n=9))
def test_twos_on_min_rds_is_ridf(t):
    for s in oracle.gamma_r_bruteforce(t).witnesses:
        f = Assignment(tuple(2 if v in s else 0 for v in t.vertices))
        assert is_ridf(t, f)[0]


@settings(max_examples=30)
@given(trees(max_n=8))
def test_ridf_witnesses_are_all_optimal(t):
    rep = oracle.gamma_ri_bruteforce(t)
    assert all(is_ridf(t, f)[0] and f.weight == rep.value for f in rep.witnesses)
    assert list(rep.witnesses) == sorted(set(rep.witnesses), key=lambda f: f.values)


def test_dominating_witness_count_on_p4():
    ws = oracle.gamma_bruteforce(path(4)).witnesses
    assert all(is_dominating(path(4), w)[0] for w in ws)
    assert len(ws) == 4  # {0,2} {0,3} {1,2} {1,3}
