"""Sweeps that check the characterization theorems and the family lemmas.

Every sweep returns a :class:`SweepReport`. Reports serialize without wall
time by default so that equal inputs give byte-identical files.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import oracle
from .certificates import is_dominating, is_packing, is_rds, is_ridf
from .enumeration import all_trees
from .families import (
    F,
    H,
    ConstructionTrace,
    FamilyState,
    StarException,
    canonical_ridf_f,
    recognize_f,
    recognize_h,
    replay,
    replay_prefixes,
    sample_trace,
)
from .graph import Graph, Tree, canonical_code, induced_tree
from .io import format_edgelist_line
from .treedp import gamma_r_tree, gamma_ri_tree

SPOT_CHECK_PER_MILLE = 10
TRACE_ORACLE_CAP = 16


@dataclass
class SweepReport:
    claim: str
    n_min: int
    n_max: int
    trees_checked: int = 0
    per_n: dict[int, int] = field(default_factory=dict)
    failures: list[dict] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "claim": self.claim,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "trees_checked": self.trees_checked,
            "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
            "passed": self.passed,
            "failure_count": len(self.failures),
            "failures": self.failures,
            "stats": self.stats,
        }
        if include_timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def dumps(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_json(include_timing), indent=2, sort_keys=True) + "\n"


def _pmap(fn: Callable, items: list, workers: int) -> list:
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


def _spot_pick(code: str, seed: int) -> bool:
    digest = hashlib.sha256(f"{seed}:{code}".encode()).digest()
    return int.from_bytes(digest[:4], "big") % 1000 < SPOT_CHECK_PER_MILLE


def _dp_with_witness_checks(t: Tree) -> tuple[int, int, list[str]]:
    """DP values plus a list of witness problems (empty when all pass)."""
    r, s = gamma_r_tree(t)
    ri, f = gamma_ri_tree(t)
    problems = []
    if len(s) != r or not is_rds(t, s)[0]:
        problems.append(f"gamma_r witness {sorted(s)} invalid")
    if f.weight != ri or not is_ridf(t, f)[0]:
        problems.append(f"gamma_ri witness {list(f.values)} invalid")
    return r, ri, problems


def _oracle_spot(t: Tree) -> list[str]:
    problems = []
    r, ri, _ = _dp_with_witness_checks(t)
    if t.n <= oracle.SET_CAP:
        rep = oracle.gamma_r_bruteforce(t)
        if rep.value != r:
            problems.append(f"gamma_r dp={r} oracle={rep.value}")
    if t.n <= oracle.RIDF_CAP:
        rep = oracle.gamma_ri_bruteforce(t)
        if rep.value != ri:
            problems.append(f"gamma_ri dp={ri} oracle={rep.value}")
    return problems


def _failure(t: Tree, expected, got, **extra) -> dict:
    out = {
        "code": canonical_code(t),
        "n": t.n,
        "expected": expected,
        "got": got,
        "edgelist": format_edgelist_line(t),
    }
    out.update(extra)
    return out


def _trees(n_min: int, n_max: int) -> Iterable[Tree]:
    for n in range(n_min, n_max + 1):
        yield from all_trees(n)


# Per-tree workers. Each returns (n, failure-or-None, stat-key-or-None, spot).

def _check_sandwich(args: tuple[Tree, int]) -> tuple:
    t, seed = args
    r, ri, problems = _dp_with_witness_checks(t)
    spot = _spot_pick(canonical_code(t), seed)
    if spot:
        problems += _oracle_spot(t)
    if problems:
        return t.n, _failure(t, "valid witnesses", problems), None, spot
    if not r <= ri <= 2 * r:
        return t.n, _failure(t, "gamma_r <= gamma_ri <= 2 gamma_r", {"gamma_r": r, "gamma_ri": ri}), None, spot
    tag = "upper_tight" if ri == 2 * r else ("lower_tight" if ri == r else None)
    return t.n, None, tag, spot


def _check_theorem_h(args: tuple[Tree, int]) -> tuple:
    t, seed = args
    r, ri, problems = _dp_with_witness_checks(t)
    spot = _spot_pick(canonical_code(t), seed)
    if spot:
        problems += _oracle_spot(t)
    if problems:
        return t.n, _failure(t, "valid witnesses", problems), None, spot
    rec = recognize_h(t)
    equal = r == ri
    member = rec is not None
    if isinstance(rec, ConstructionTrace):
        tree, _ = replay(rec)
        if canonical_code(tree) != canonical_code(t):
            return t.n, _failure(t, "trace replays to t", rec.to_json()), None, spot
    if equal != member:
        got = rec.to_json() if isinstance(rec, ConstructionTrace) else repr(rec)
        return t.n, _failure(t, {"equal": equal}, {"recognized": got}, gamma_r=r, gamma_ri=ri), None, spot
    tag = "star" if isinstance(rec, StarException) else ("member" if member else None)
    return t.n, None, tag, spot


def _f_diagnostics(t: Tree) -> dict:
    """Independent evidence about F-membership of t: in every F tree the
    minimum RDS is unique and is a packing."""
    if t.n > oracle.SET_CAP:
        return {}
    rep = oracle.gamma_r_bruteforce(t)
    return {
        "min_rds_count": len(rep.witnesses),
        "min_rds_is_packing": [is_packing(t, w)[0] for w in rep.witnesses],
        "min_rds": [sorted(w) for w in rep.witnesses],
    }


def _check_theorem_f(args: tuple[Tree, int]) -> tuple:
    t, seed = args
    r, ri, problems = _dp_with_witness_checks(t)
    spot = _spot_pick(canonical_code(t), seed)
    if spot:
        problems += _oracle_spot(t)
    if problems:
        return t.n, _failure(t, "valid witnesses", problems), None, spot
    rec = recognize_f(t)
    tight = ri == 2 * r
    member = rec is not None
    if rec is not None:
        tree, _ = replay(rec)
        if canonical_code(tree) != canonical_code(t):
            return t.n, _failure(t, "trace replays to t", rec.to_json()), None, spot
    if tight != member:
        got = rec.to_json() if rec is not None else None
        return (
            t.n,
            _failure(t, {"tight": tight}, {"recognized": got}, gamma_r=r, gamma_ri=ri, diagnostics=_f_diagnostics(t)),
            None,
            spot,
        )
    return t.n, None, "member" if member else None, spot


def _check_oracle_dp(args: tuple[Tree, int, int]) -> tuple:
    t, n_max_r, n_max_ri = args
    problems = []
    r, s = gamma_r_tree(t)
    rep = oracle.gamma_r_bruteforce(t)
    if rep.value != r:
        problems.append(f"gamma_r dp={r} oracle={rep.value}")
    if not is_rds(t, s)[0] or s not in rep.witnesses:
        problems.append(f"dp gamma_r witness {sorted(s)} not an optimal RDS")
    if any(not is_rds(t, w)[0] for w in rep.witnesses):
        problems.append("oracle gamma_r witness fails is_rds")
    if t.n <= n_max_ri:
        ri, f = gamma_ri_tree(t)
        rep2 = oracle.gamma_ri_bruteforce(t)
        if rep2.value != ri:
            problems.append(f"gamma_ri dp={ri} oracle={rep2.value}")
        if not is_ridf(t, f)[0] or f not in rep2.witnesses:
            problems.append(f"dp gamma_ri witness {list(f.values)} not an optimal RIDF")
        if any(not is_ridf(t, w)[0] for w in rep2.witnesses):
            problems.append("oracle gamma_ri witness fails is_ridf")
    if problems:
        return t.n, _failure(t, "dp == oracle", problems), None, False
    return t.n, None, "gamma_ri_compared" if t.n <= n_max_ri else None, False


def _run_tree_sweep(claim: str, n_min: int, n_max: int, worker, payload, workers: int) -> SweepReport:
    start = time.perf_counter()
    report = SweepReport(claim, n_min, n_max)
    items = [(t, *payload) for t in _trees(n_min, n_max)]
    tags: dict[str, dict[int, int]] = {}
    spots = 0
    for n, failure, tag, spot in _pmap(worker, items, workers):
        report.trees_checked += 1
        report.per_n[n] = report.per_n.get(n, 0) + 1
        spots += bool(spot)
        if failure is not None:
            report.failures.append(failure)
        if tag is not None:
            bucket = tags.setdefault(tag, {})
            bucket[n] = bucket.get(n, 0) + 1
    report.stats = {k: {str(n): c for n, c in sorted(v.items())} for k, v in sorted(tags.items())}
    report.stats["oracle_spot_checks"] = spots
    report.wall_time = time.perf_counter() - start
    return report


def verify_bound_sandwich(n_max: int, n_min: int = 1, seed: int = 0, workers: int = 1) -> SweepReport:
    """gamma_r <= gamma_ri <= 2 gamma_r on every tree of order n_min..n_max."""
    return _run_tree_sweep("sandwich", n_min, n_max, _check_sandwich, (seed,), workers)


def verify_theorem_H(n_max: int, n_min: int = 3, seed: int = 0, workers: int = 1) -> SweepReport:
    """gamma_r == gamma_ri exactly when the tree is in H or is a star."""
    return _run_tree_sweep("theorem-H", max(3, n_min), n_max, _check_theorem_h, (seed,), workers)


def verify_theorem_F(n_max: int, n_min: int = 4, seed: int = 0, workers: int = 1) -> SweepReport:
    """gamma_ri == 2 gamma_r exactly when the tree is in F."""
    return _run_tree_sweep("theorem-F", max(4, n_min), n_max, _check_theorem_f, (seed,), workers)


def verify_oracle_dp(n_max_r: int = 12, n_max_ri: int = 11, workers: int = 1) -> SweepReport:
    """Tree DP against brute force on every tree, with witness cross-checks."""
    return _run_tree_sweep("oracle-dp", 1, n_max_r, _check_oracle_dp, (n_max_r, n_max_ri), workers)


# Structural checks on random construction traces.


def _sv_forest_ok(t: Tree, sv: frozenset[int]) -> bool:
    """SV induces a forest whose components all have at least two vertices."""
    if not sv:
        return False
    seen: set[int] = set()
    for s in sorted(sv):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in t.adj[u]:
                if w in sv and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        if len(comp) < 2:
            return False
        # a subgraph of a tree is always acyclic; count edges anyway
        edges = sum(1 for u, v in t.edges if u in comp and v in comp)
        if edges != len(comp) - 1:
            return False
    return True


class _OracleCache:
    def __init__(self) -> None:
        self._store: dict[tuple[str, Graph], object] = {}

    def get(self, name: str, g: Graph):
        key = (name, g)
        if key not in self._store:
            self._store[key] = getattr(oracle, name)(g)
        return self._store[key]


def _h_prefix_checks(tree: Tree, state: FamilyState, cache: _OracleCache) -> dict[str, tuple]:
    """name -> (expected, got) for every failed check at one prefix."""
    bad: dict[str, tuple] = {}
    if state.lv | state.sv != frozenset(tree.vertices):
        bad["V = LV u SV"] = (tree.n, len(state.lv | state.sv))
    if tree.n <= TRACE_ORACLE_CAP:
        wit = cache.get("gamma_r_bruteforce", tree).witnesses
        if list(wit) != [state.lv]:
            bad["LV unique minimum RDS"] = ([sorted(state.lv)], [sorted(w) for w in wit])
    if not _sv_forest_ok(tree, state.sv):
        bad["SV forest with components >= 2"] = (True, False)
    return bad


def _f_prefix_checks(tree: Tree, state: FamilyState, cache: _OracleCache, ri: int) -> dict[str, tuple]:
    bad: dict[str, tuple] = {}
    lv = state.lv
    if not is_packing(tree, lv)[0]:
        bad["LV packing"] = (True, is_packing(tree, lv)[1])
    for v in tree.vertices:
        if v in lv:
            continue
        inside = sum(1 for u in tree.adj[v] if u in lv)
        outside = len(tree.adj[v]) - inside
        if inside != 1 or outside < 1:
            bad["one LV neighbour, one other"] = (v, {"lv": inside, "other": outside})
            break
    if tree.n <= TRACE_ORACLE_CAP:
        g = cache.get("gamma_bruteforce", tree)
        if g.value != len(lv) or not is_dominating(tree, lv)[0]:
            bad["LV minimum dominating set"] = (len(lv), g.value)
        wit = cache.get("gamma_r_bruteforce", tree).witnesses
        if list(wit) != [lv]:
            bad["LV unique minimum RDS"] = ([sorted(lv)], [sorted(w) for w in wit])
        wit = cache.get("rho_bruteforce", tree).witnesses
        if list(wit) != [lv]:
            bad["LV unique maximum packing"] = ([sorted(lv)], [sorted(w) for w in wit])
    cells = [frozenset((v, *tree.adj[v])) for v in sorted(lv)]
    if sum(len(c) for c in cells) != tree.n or frozenset().union(*cells) != frozenset(tree.vertices):
        bad["closed neighbourhoods partition V"] = (tree.n, sum(len(c) for c in cells))
    f = canonical_ridf_f(tree, state)
    if not is_ridf(tree, f)[0] or f.weight != 2 * len(lv) or f.weight != ri:
        bad["canonical RIDF optimal"] = ({"weight": 2 * len(lv), "gamma_ri": ri}, f.weight)
    return bad


def _check_trace(args: tuple[str, int, int]) -> tuple[ConstructionTrace, list[dict], int]:
    family, budget, seed = args
    trace = sample_trace(family, budget, seed)
    cache = _OracleCache()
    failures: list[dict] = []
    prev: tuple[int, int] | None = None
    prefixes = 0
    for k, (tree, state) in enumerate(replay_prefixes(trace)):
        prefixes += 1
        r, ri, problems = _dp_with_witness_checks(tree)
        bad: dict[str, tuple] = {}
        if problems:
            bad["witness validity"] = ("valid", problems)
        if family == H:
            if r != ri:
                bad["gamma_r == gamma_ri"] = (r, ri)
            if k == 0:
                want = sum(trace.base)
                if (r, ri) != (want, want):
                    bad["base values"] = (want, (r, ri))
            else:
                step = trace.steps[k - 1]
                inc = step.r + step.s if step.op == "O1" else step.t
                if (r - prev[0], ri - prev[1]) != (inc, inc):
                    bad[f"{step.op} increment"] = (inc, (r - prev[0], ri - prev[1]))
            bad.update(_h_prefix_checks(tree, state, cache))
        else:
            if ri != 2 * r or r != len(state.lv):
                bad["gamma_ri == 2 gamma_r == 2|LV|"] = (2 * len(state.lv), (r, ri))
            bad.update(_f_prefix_checks(tree, state, cache, ri))
        for name, (expected, got) in sorted(bad.items()):
            failures.append(
                {
                    "check": name,
                    "prefix_steps": k,
                    "trace": trace.prefix(k).to_json(),
                    "expected": expected,
                    "got": got,
                    "edgelist": format_edgelist_line(tree),
                }
            )
        prev = (r, ri)
    return trace, failures, prefixes


def verify_lemmas_on_traces(family: str, count: int, budget: int, seed: int, workers: int = 1) -> SweepReport:
    """Check the family invariants at every prefix of `count` random traces."""
    if family not in (H, F):
        raise ValueError(f"unknown family {family!r}")
    start = time.perf_counter()
    rng = random.Random(seed)
    seeds = [rng.getrandbits(64) for _ in range(count)]
    report = SweepReport(f"lemmas-{family}", 0, budget)
    ops: dict[str, int] = {}
    prefixes = 0
    for trace, failures, k in _pmap(_check_trace, [(family, budget, s) for s in seeds], workers):
        tree, _ = replay(trace)
        report.trees_checked += 1
        report.per_n[tree.n] = report.per_n.get(tree.n, 0) + 1
        report.failures.extend(failures)
        prefixes += k
        for step in trace.steps:
            ops[step.op] = ops.get(step.op, 0) + 1
    report.n_min = min(report.per_n, default=0)
    report.stats = {"prefixes_checked": prefixes, "steps": dict(sorted(ops.items())), "seed": seed}
    report.wall_time = time.perf_counter() - start
    return report
