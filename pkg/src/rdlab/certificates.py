"""Checkers for dominating sets, restrained dominating sets, packings and
restrained Italian dominating functions.

Every checker returns ``(ok, witness)``. On failure the witness is the first
offending vertex in id order (a vertex pair for packings); on success it is
``None``. Checkers work on arbitrary simple graphs, not only trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .graph import Graph, GraphError


@dataclass(frozen=True)
class Assignment:
    """A labelling V -> {0, 1, 2}."""

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if any(x not in (0, 1, 2) for x in self.values):
            raise ValueError("assignment labels must be 0, 1 or 2")

    @classmethod
    def from_sets(cls, n: int, ones: Iterable[int] = (), twos: Iterable[int] = ()) -> "Assignment":
        vals = [0] * n
        for v in ones:
            vals[v] = 1
        for v in twos:
            vals[v] = 2
        return cls(tuple(vals))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> int:
        return self.values[v]

    @cached_property
    def partition(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        cells: tuple[set[int], set[int], set[int]] = (set(), set(), set())
        for v, x in enumerate(self.values):
            cells[x].add(v)
        return tuple(frozenset(c) for c in cells)  # type: ignore[return-value]

    @property
    def weight(self) -> int:
        return sum(self.values)


def _check_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph of order {g.n}")
    return s


def _check_assignment(g: Graph, f: Assignment | Iterable[int]) -> Assignment:
    if not isinstance(f, Assignment):
        f = Assignment(tuple(f))
    if len(f) != g.n:
        raise GraphError(f"assignment has {len(f)} labels for a graph of order {g.n}")
    return f


def is_dominating(g: Graph, s: Iterable[int]) -> tuple[bool, int | None]:
    s = _check_set(g, s)
    for v in g.vertices:
        if v not in s and not any(u in s for u in g.adj[v]):
            return False, v
    return True, None


def is_rds(g: Graph, s: Iterable[int]) -> tuple[bool, int | None]:
    """Restrained domination: each outside vertex sees S and sees V - S."""
    s = _check_set(g, s)
    for v in g.vertices:
        if v in s:
            continue
        if not any(u in s for u in g.adj[v]) or all(u in s for u in g.adj[v]):
            return False, v
    return True, None


def is_ridf(g: Graph, f: Assignment | Iterable[int]) -> tuple[bool, int | None]:
    """Restrained Italian domination.

    Each 0-vertex needs neighbour labels summing to at least 2 and at least
    one 0-labelled neighbour.
    """
    f = _check_assignment(g, f)
    for v in g.vertices:
        if f[v] != 0:
            continue
        nb = g.adj[v]
        if sum(f[u] for u in nb) < 2 or all(f[u] != 0 for u in nb):
            return False, v
    return True, None


def is_packing(g: Graph, s: Iterable[int]) -> tuple[bool, tuple[int, int] | None]:
    """Pairwise distance at least three: no two members adjacent or sharing a neighbour."""
    s = _check_set(g, s)
    members = sorted(s)
    for i, a in enumerate(members):
        close = set(g.adj[a])
        for u in g.adj[a]:
            close.update(g.adj[u])
        for b in members[i + 1 :]:
            if b in close:
                return False, (a, b)
    return True, None
