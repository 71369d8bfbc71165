"""Exhaustive exact solvers for small graphs.

These are the ground truth for the tree DP and the family checks. Each search
walks candidate solutions level by level (set size, or assignment weight)
from zero upward, so the first level with any feasible solution is optimal.
That level is then enumerated completely, which yields every optimal witness.

Within a level, vertices are decided in BFS order. A vertex is tested as soon
as its whole closed neighbourhood is decided, so failed partial solutions are
cut off early.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .certificates import Assignment
from .graph import Graph

SET_CAP = 20
RIDF_CAP = 13


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class OptimalSetReport:
    value: int
    witnesses: tuple[frozenset[int], ...]

    def to_json(self, invariant: str, n: int, method: str = "bruteforce") -> dict:
        return {
            "n": n,
            "invariant": invariant,
            "method": method,
            "value": self.value,
            "witness_count": len(self.witnesses),
            "witnesses": [sorted(w) for w in self.witnesses],
        }


@dataclass(frozen=True)
class OptimalAssignmentReport:
    value: int
    witnesses: tuple[Assignment, ...]

    def to_json(self, invariant: str, n: int, method: str = "bruteforce") -> dict:
        return {
            "n": n,
            "invariant": invariant,
            "method": method,
            "value": self.value,
            "witness_count": len(self.witnesses),
            "witnesses": [list(w.values) for w in self.witnesses],
        }


def _check_cap(g: Graph, cap: int | None, default: int) -> None:
    limit = default if cap is None else cap
    if g.n > limit:
        raise CapExceeded(f"order {g.n} exceeds oracle cap {limit}")


def _search_plan(g: Graph) -> tuple[list[int], list[list[int]]]:
    """BFS vertex order, plus for each position the vertices whose closed
    neighbourhood is fully decided once that position is assigned."""
    order: list[int] = []
    seen = set()
    for s in g.vertices:
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    pos = {v: i for i, v in enumerate(order)}
    closers: list[list[int]] = [[] for _ in order]
    for u in g.vertices:
        closers[max(pos[w] for w in (u, *g.adj[u]))].append(u)
    return order, closers


def _minimum_sets(g: Graph, restrained: bool) -> OptimalSetReport:
    order, closers = _search_plan(g)
    nbr = g.adj_mask
    full = (1 << g.n) - 1
    n = g.n

    def outside_ok(u: int, mask: int) -> bool:
        if not nbr[u] & mask:
            return False
        return not restrained or bool(nbr[u] & ~mask & full)

    def level(k: int) -> list[int]:
        found: list[int] = []

        def dfs(i: int, mask: int, count: int) -> None:
            if i == n:
                found.append(mask)
                return
            v = order[i]
            for take in (0, 1):
                if take and count == k:
                    continue
                m = mask | (1 << v) if take else mask
                if all((m >> u) & 1 or outside_ok(u, m) for u in closers[i]):
                    dfs(i + 1, m, count + take)

        dfs(0, 0, 0)
        return found

    for k in range(n + 1):
        masks = level(k)
        if masks:
            sets = sorted((sorted(_bits(m)) for m in masks))
            return OptimalSetReport(k, tuple(frozenset(s) for s in sets))
    raise AssertionError("V itself always qualifies")


def _bits(mask: int) -> list[int]:
    out, v = [], 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def gamma_bruteforce(g: Graph, cap: int | None = None) -> OptimalSetReport:
    """Domination number with all minimum dominating sets."""
    _check_cap(g, cap, SET_CAP)
    return _minimum_sets(g, restrained=False)


def gamma_r_bruteforce(g: Graph, cap: int | None = None) -> OptimalSetReport:
    """Restrained domination number with all minimum restrained dominating sets."""
    _check_cap(g, cap, SET_CAP)
    return _minimum_sets(g, restrained=True)


def gamma_ri_bruteforce(g: Graph, cap: int | None = None) -> OptimalAssignmentReport:
    """Restrained Italian domination number with all minimum-weight RIDFs."""
    _check_cap(g, cap, RIDF_CAP)
    order, closers = _search_plan(g)
    adj = g.adj
    n = g.n
    labels = [0] * n

    def zero_ok(u: int) -> bool:
        total = 0
        has_zero = False
        for w in adj[u]:
            x = labels[w]
            total += x
            has_zero = has_zero or x == 0
        return total >= 2 and has_zero

    def level(budget: int) -> list[tuple[int, ...]]:
        found: list[tuple[int, ...]] = []

        def dfs(i: int, weight: int) -> None:
            if i == n:
                found.append(tuple(labels))
                return
            v = order[i]
            for x in (0, 1, 2):
                if weight + x > budget:
                    break
                labels[v] = x
                if all(labels[u] or zero_ok(u) for u in closers[i]):
                    dfs(i + 1, weight + x)
            labels[v] = 0

        dfs(0, 0)
        return found

    for w in range(n + 1):
        sols = level(w)
        if sols:
            return OptimalAssignmentReport(w, tuple(Assignment(s) for s in sorted(sols)))
    raise AssertionError("the all-ones labelling always qualifies")


def rho_bruteforce(g: Graph, cap: int | None = None) -> OptimalSetReport:
    """Packing number with all maximum packings."""
    _check_cap(g, cap, SET_CAP)
    n = g.n
    nbr = g.adj_mask
    ball2 = []
    for v in g.vertices:
        m = (1 << v) | nbr[v]
        for u in g.adj[v]:
            m |= nbr[u]
        ball2.append(m)

    best = 0
    found: list[int] = []

    def dfs(v: int, mask: int, blocked: int, count: int) -> None:
        nonlocal best, found
        if count + (n - v) < best:
            return
        if v == n:
            if count > best:
                best, found = count, [mask]
            elif count == best:
                found.append(mask)
            return
        if not (blocked >> v) & 1:
            dfs(v + 1, mask | (1 << v), blocked | ball2[v], count + 1)
        dfs(v + 1, mask, blocked, count)

    dfs(0, 0, 0, 0)
    sets = sorted(sorted(_bits(m)) for m in found)
    return OptimalSetReport(best, tuple(frozenset(s) for s in sets))
