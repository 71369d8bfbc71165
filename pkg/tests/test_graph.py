from __future__ import annotations

import random

import networkx as nx
import pytest
from conftest import trees
from hypothesis import given

from rdlab.graph import (
    Graph,
    GraphError,
    NotATreeError,
    Tree,
    canonical_code,
    diametral_path_max_penultimate,
    distance_matrix,
    double_star,
    eccentricity_diameter,
    neighbors,
    path,
    relabel,
    root_at,
    spider,
    star,
)


def test_neighbors_examples():
    assert neighbors(path(3), 1) == {0, 2}
    assert neighbors(star(3), 0) == {1, 2, 3}
    assert neighbors(Graph(1), 0) == frozenset()


def test_distance_matrix_examples():
    assert distance_matrix(Tree(1, frozenset())) == [[0]]
    assert distance_matrix(path(4))[0] == [0, 1, 2, 3]


def test_diametral_path_examples():
    p = diametral_path_max_penultimate(path(4))
    assert p.d == 3 and set(p.vertices) == {0, 1, 2, 3}
    ds = double_star(2, 2)
    p = diametral_path_max_penultimate(ds)
    assert p.d == 3 and ds.degree(p[p.d - 1]) == 3
    assert diametral_path_max_penultimate(spider(2)).d == 4


def test_canonical_code_examples():
    assert canonical_code(path(4)) == canonical_code(relabel(path(4), [2, 0, 3, 1]))
    assert canonical_code(path(4)) != canonical_code(star(3))
    assert canonical_code(double_star(2, 3)) == canonical_code(double_star(3, 2))


def test_root_at_examples():
    rt = root_at(path(3), 0)
    assert rt.parent == (None, 0, 1)
    assert len(root_at(star(3), 0).children[0]) == 3
    assert rt.depth(2) == 2
    assert root_at(path(4), 0).subtree(2) == [2, 3]


def test_tree_validation():
    with pytest.raises(NotATreeError):
        Tree(3, frozenset({(0, 1), (1, 2), (0, 2)}))
    with pytest.raises(NotATreeError):
        Tree(4, frozenset({(0, 1), (2, 3), (0, 1)}))
    with pytest.raises(GraphError):
        Graph(2, frozenset({(0, 5)}))
    with pytest.raises(GraphError):
        Graph(2, frozenset({(1, 1)}))


def test_leaves_and_stems():
    ds = double_star(2, 3)
    assert ds.leaves == {2, 3, 4, 5, 6}
    assert ds.stems == {0, 1}


@given(trees(max_n=14))
def test_degree_sum(t):
    assert sum(t.degree(v) for v in t.vertices) == 2 * (t.n - 1)


@given(trees(min_n=2, max_n=14))
def test_diametral_path_matches_double_bfs(t):
    p = diametral_path_max_penultimate(t)
    assert p.d == eccentricity_diameter(t)
    assert all(b in t.adj[a] for a, b in zip(p.vertices, p.vertices[1:]))
    assert p.d == nx.diameter(nx.Graph(list(t.edges))) if t.n > 1 else True


@given(trees(max_n=12))
def test_canonical_code_relabel_invariant(t):
    rng = random.Random(t.n)
    code = canonical_code(t)
    for _ in range(100):
        perm = list(range(t.n))
        rng.shuffle(perm)
        assert canonical_code(relabel(t, perm)) == code


@given(trees(max_n=10), trees(max_n=10))
def test_canonical_code_agrees_with_networkx(a, b):
    if a.n != b.n or a.n < 2:
        return
    same = nx.is_isomorphic(nx.Graph(list(a.edges)), nx.Graph(list(b.edges)))
    assert (canonical_code(a) == canonical_code(b)) == same
