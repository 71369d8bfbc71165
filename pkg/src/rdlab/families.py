"""Constructive tree families H and F: traces, replay, recognition, sampling.

Family H starts from a double star DS_{l,n} (l, n >= 2) and grows by
  O1: at x in LV, attach a double star DS_{r,s} (r >= 1, s >= 2) by an edge
      from x to the centre u that carries the r leaves;
  O2: at x in SV, attach a star K_{1,t} (t >= 2) by an edge from x to its centre.
Family F starts from P4 and grows by
  O1: at x in LV, attach a P3 by an edge from x to one of its ends;
  O2: at x in LV, attach a healthy spider S_{t,t} (t >= 1) by an edge from x
      to its centre.
LV collects every vertex that has been a leaf at some stage, SV every vertex
that has been a stem at some stage.

Replay numbering: the base tree uses the layout of ``graph.double_star`` or
``graph.path``; each step appends its new vertices in the order u, u's
leaves, v, v's leaves (H-O1); u, leaves (H-O2); u, middle, end (F-O1);
u, then (middle, foot) per leg (F-O2).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterator

from .certificates import Assignment
from .graph import (
    Tree,
    canonical_code,
    max_penultimate_paths,
    double_star,
    induced_tree,
    path,
    root_at,
)

H, F = "H", "F"
H_BASE_MIN = 2
H_O1_R_MIN, H_O1_S_MIN = 1, 2
H_O2_T_MIN = 2
F_O2_T_MIN = 1


class TraceError(ValueError):
    """A trace is malformed or a step's attachment vertex has the wrong class."""

    def __init__(self, message: str, step: int | None = None, vertex: int | None = None):
        super().__init__(message)
        self.step = step
        self.vertex = vertex


@dataclass(frozen=True)
class Step:
    op: str
    attach: int
    r: int | None = None
    s: int | None = None
    t: int | None = None

    def to_json(self) -> dict:
        out: dict = {"op": self.op, "attach": self.attach}
        for key in ("r", "s", "t"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out

    @classmethod
    def from_json(cls, d: dict) -> "Step":
        return cls(d["op"], int(d["attach"]), d.get("r"), d.get("s"), d.get("t"))


@dataclass(frozen=True)
class ConstructionTrace:
    family: str
    base: tuple[int, ...] = ()  # (l, n) for H; empty for F (always P4)
    steps: tuple[Step, ...] = ()

    def to_json(self) -> dict:
        base = {"l": self.base[0], "n": self.base[1]} if self.family == H else {"path": 4}
        return {"family": self.family, "base": base, "steps": [s.to_json() for s in self.steps]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, d: dict) -> "ConstructionTrace":
        family = d["family"]
        if family == H:
            base = (int(d["base"]["l"]), int(d["base"]["n"]))
        elif family == F:
            if d.get("base", {"path": 4}) != {"path": 4}:
                raise TraceError("family F starts from P4")
            base = ()
        else:
            raise TraceError(f"unknown family {family!r}")
        return cls(family, base, tuple(Step.from_json(s) for s in d.get("steps", [])))

    @classmethod
    def loads(cls, text: str) -> "ConstructionTrace":
        return cls.from_json(json.loads(text))

    def prefix(self, k: int) -> "ConstructionTrace":
        """The trace of T_{k+1}: base plus the first k steps."""
        return ConstructionTrace(self.family, self.base, self.steps[:k])


@dataclass(frozen=True)
class FamilyState:
    lv: frozenset[int]
    sv: frozenset[int] = field(default_factory=frozenset)


@dataclass(frozen=True)
class StarException:
    """The tree is a star K_{1,t}: outside H but with equal invariants."""

    t: int


def _base_tree(trace: ConstructionTrace) -> Tree:
    if trace.family == H:
        if len(trace.base) != 2:
            raise TraceError("H base needs (l, n)")
        l, n = trace.base
        if l < H_BASE_MIN or n < H_BASE_MIN:
            raise TraceError(f"H base DS_{{{l},{n}}} needs both sides >= {H_BASE_MIN}")
        return double_star(l, n)
    if trace.family == F:
        return path(4)
    raise TraceError(f"unknown family {trace.family!r}")


def _gadget(family: str, step: Step, start: int, i: int) -> list[tuple[int, int]]:
    """Edges of one step's gadget, numbered from `start`, joined to step.attach."""
    x, u = step.attach, start
    if family == H and step.op == "O1":
        r, s = step.r, step.s
        if r is None or s is None or r < H_O1_R_MIN or s < H_O1_S_MIN:
            raise TraceError(f"step {i}: H-O1 needs r >= {H_O1_R_MIN}, s >= {H_O1_S_MIN}", i)
        v = u + r + 1
        return [(x, u), (u, v)] + [(u, u + 1 + k) for k in range(r)] + [(v, v + 1 + k) for k in range(s)]
    if family == H and step.op == "O2":
        t = step.t
        if t is None or t < H_O2_T_MIN:
            raise TraceError(f"step {i}: H-O2 needs t >= {H_O2_T_MIN}", i)
        return [(x, u)] + [(u, u + 1 + k) for k in range(t)]
    if family == F and step.op == "O1":
        return [(x, u), (u, u + 1), (u + 1, u + 2)]
    if family == F and step.op == "O2":
        t = step.t
        if t is None or t < F_O2_T_MIN:
            raise TraceError(f"step {i}: F-O2 needs t >= {F_O2_T_MIN}", i)
        edges = [(x, u)]
        for k in range(t):
            mid = u + 1 + 2 * k
            edges += [(u, mid), (mid, mid + 1)]
        return edges
    raise TraceError(f"step {i}: unknown operation {step.op!r}", i)


def replay_prefixes(trace: ConstructionTrace) -> Iterator[tuple[Tree, FamilyState]]:
    """Yield (T_i, state) for T_1 (the base) through T_m."""
    tree = _base_tree(trace)
    lv = set(tree.leaves)
    sv = set(tree.stems) if trace.family == H else set()
    yield tree, FamilyState(frozenset(lv), frozenset(sv))
    for i, step in enumerate(trace.steps):
        need, label = (sv, "SV") if (trace.family == H and step.op == "O2") else (lv, "LV")
        if not 0 <= step.attach < tree.n:
            raise TraceError(f"step {i}: attach vertex {step.attach} not in tree", i, step.attach)
        if step.attach not in need:
            raise TraceError(f"step {i}: attach vertex {step.attach} not in {label}", i, step.attach)
        new_edges = _gadget(trace.family, step, tree.n, i)
        n = max(max(e) for e in new_edges) + 1
        tree = Tree(n, tree.edges | frozenset(new_edges))
        lv |= tree.leaves
        if trace.family == H:
            sv |= tree.stems
        yield tree, FamilyState(frozenset(lv), frozenset(sv))


def replay(trace: ConstructionTrace) -> tuple[Tree, FamilyState]:
    for result in replay_prefixes(trace):
        pass
    return result


def canonical_ridf_f(tree: Tree, state: FamilyState) -> Assignment:
    """Label 2 on LV and 0 elsewhere."""
    if any(not 0 <= v < tree.n for v in state.lv):
        raise TraceError("state names vertices outside the tree")
    if not tree.leaves <= state.lv:
        raise TraceError("every leaf of an F tree belongs to LV")
    return Assignment.from_sets(tree.n, twos=state.lv)


# Recognition works on vertex subsets of the input tree. A decomposition is a
# forward-ordered list of records in input-tree ids:
#   ("base", centre_a, leaves_a, centre_b, leaves_b)   H
#   ("base", (p0, p1, p2, p3))                          F
#   ("O1", x, u, leaves_u, v, leaves_v)                 H-O1
#   ("O2", x, u, leaves_u)                              H-O2
#   ("O1", x, (u, mid, end))                            F-O1
#   ("O2", x, u, ((mid, foot), ...))                    F-O2


def _to_trace(family: str, records: list[tuple]) -> tuple[ConstructionTrace, dict[int, int]]:
    """Trace for a decomposition, and the input-id -> replay-id map."""
    ids: dict[int, int] = {}

    def number(vs) -> None:
        for v in vs:
            ids[v] = len(ids)

    base, *rest = records
    if family == H:
        _, a, la, b, lb = base
        number([a, b, *la, *lb])
        trace_base: tuple[int, ...] = (len(la), len(lb))
    else:
        number(base[1])
        trace_base = ()
    steps = []
    for rec in rest:
        x = ids[rec[1]]
        if family == H and rec[0] == "O1":
            _, _, u, lu, v, lvs = rec
            number([u, *lu, v, *lvs])
            steps.append(Step("O1", x, r=len(lu), s=len(lvs)))
        elif family == H:
            _, _, u, lu = rec
            number([u, *lu])
            steps.append(Step("O2", x, t=len(lu)))
        elif rec[0] == "O1":
            number(rec[2])
            steps.append(Step("O1", x))
        else:
            _, _, u, legs = rec
            number([u, *(w for leg in legs for w in leg)])
            steps.append(Step("O2", x, t=len(legs)))
    return ConstructionTrace(family, trace_base, tuple(steps)), ids


def _validated(family: str, records: list[tuple]) -> FamilyState | None:
    """Replay a decomposition; on success return its state in input ids."""
    trace, ids = _to_trace(family, records)
    try:
        _, state = replay(trace)
    except TraceError:
        return None
    back = {new: old for old, new in ids.items()}
    return FamilyState(frozenset(back[v] for v in state.lv), frozenset(back[v] for v in state.sv))


def _peel(family: str, t: Tree, keep: frozenset[int], failed: set[frozenset[int]]) -> Iterator[list[tuple]]:
    """Validated decompositions of the subtree on `keep`.

    Vertex sets that admit none are remembered in `failed` and skipped.
    """
    if keep in failed:
        return
    found = False
    options = _h_options if family == H else _f_options
    for records in options(t, keep, failed):
        found = True
        yield records
    if not found:
        failed.add(keep)


def _extend(family: str, t: Tree, record: tuple, rest: frozenset[int], failed) -> Iterator[list[tuple]]:
    """Decompositions of the tree on `rest` whose replay admits `record` next."""
    for prefix in _peel(family, t, rest, failed):
        state = _validated(family, prefix)
        if state is None:
            continue
        need = state.sv if (family == H and record[0] == "O2") else state.lv
        if record[1] in need:
            yield prefix + [record]


def _h_options(t: Tree, keep: frozenset[int], failed: set[frozenset[int]]) -> Iterator[list[tuple]]:
    if len(keep) < 6:
        return
    sub, old = induced_tree(t, keep)
    for p in max_penultimate_paths(sub):
        d = p.d
        if d == 3:
            a, b = p[1], p[2]
            la = [old[w] for w in sub.adj[a] if w != b]
            lb = [old[w] for w in sub.adj[b] if w != a]
            if len(la) >= H_BASE_MIN and len(lb) >= H_BASE_MIN:
                yield [("base", old[a], la, old[b], lb)]
            return
        if d < 3:
            return
        x1, x2, x3 = p[d - 1], p[d - 2], p[d - 3]
        if sub.degree(x1) < 3:
            return  # every candidate shares this degree
        if sub.degree(x2) < 3:
            continue
        rt = root_at(sub, p[0])
        kids2 = rt.children[x2]
        star_leaves = [old[c] for c in rt.children[x1]]
        options = []
        if not any(c != x1 and rt.children[c] for c in kids2):
            leaves2 = [old[c] for c in kids2 if c != x1]
            options.append(
                (("O1", old[x3], old[x2], leaves2, old[x1], star_leaves), rt.subtree(x2))
            )
        options.append((("O2", old[x2], old[x1], star_leaves), rt.subtree(x1)))
        for record, removed in options:
            rest = keep - {old[w] for w in removed}
            yield from _extend(H, t, record, rest, failed)


def _f_options(t: Tree, keep: frozenset[int], failed: set[frozenset[int]]) -> Iterator[list[tuple]]:
    if len(keep) < 4:
        return
    sub, old = induced_tree(t, keep)
    for p in max_penultimate_paths(sub):
        d = p.d
        if d == 3:
            if sub.n == 4:
                yield [("base", tuple(old[v] for v in p.vertices))]
            return
        if d < 3 or sub.degree(p[d - 1]) != 2:
            return  # every candidate shares these
        rt = root_at(sub, p[0])
        x2, x3 = p[d - 2], p[d - 3]
        if sub.degree(x2) == 2:
            record = ("O1", old[x3], (old[x2], old[p[d - 1]], old[p[d]]))
        else:
            kids = rt.children[x2]
            if any(len(rt.children[c]) != 1 for c in kids):
                continue
            legs = tuple((old[c], old[rt.children[c][0]]) for c in kids)
            record = ("O2", old[x3], old[x2], legs)
        rest = keep - {old[w] for w in rt.subtree(x2)}
        yield from _extend(F, t, record, rest, failed)


def _finish(family: str, t: Tree, records: list[tuple]) -> ConstructionTrace:
    trace, _ = _to_trace(family, records)
    tree, _ = replay(trace)
    assert canonical_code(tree) == canonical_code(t)
    return trace


def recognize_h(t: Tree) -> ConstructionTrace | StarException | None:
    """Trace certifying t in H, StarException for stars, else None."""
    if t.n < 3:
        return None
    center_deg = max(len(a) for a in t.adj)
    if center_deg == t.n - 1:
        return StarException(t.n - 1)
    records = next(_peel(H, t, frozenset(t.vertices), set()), None)
    return None if records is None else _finish(H, t, records)


def recognize_f(t: Tree) -> ConstructionTrace | None:
    """Trace certifying t in F, else None."""
    if t.n < 4:
        return None
    records = next(_peel(F, t, frozenset(t.vertices), set()), None)
    return None if records is None else _finish(F, t, records)


def _small(rng: random.Random, lo: int, hi: int) -> int:
    return rng.randint(lo, min(hi, lo + 2))


def sample_trace(family: str, budget: int, seed: int) -> ConstructionTrace:
    """Random valid trace whose tree has at most `budget` vertices.

    Steps are added until no operation fits, so the result is within a few
    vertices of the budget. Deterministic per seed.
    """
    rng = random.Random(seed)
    if family == H:
        if budget < 6:
            raise ValueError("smallest H tree has 6 vertices")
        l = _small(rng, 2, budget - 4)
        n = _small(rng, 2, budget - 2 - l)
        trace = ConstructionTrace(H, (l, n))
    elif family == F:
        if budget < 4:
            raise ValueError("smallest F tree has 4 vertices")
        trace = ConstructionTrace(F)
    else:
        raise ValueError(f"unknown family {family!r}")

    tree, state = replay(trace)
    while True:
        room = budget - tree.n
        ops = []
        if family == H:
            if room >= 5:
                ops.append("O1")
            if room >= 3 and state.sv:
                ops.append("O2")
        elif room >= 3:
            ops += ["O1", "O2"]
        if not ops:
            return trace
        op = rng.choice(ops)
        pool = state.sv if (family == H and op == "O2") else state.lv
        x = rng.choice(sorted(pool))
        if family == H and op == "O1":
            r = _small(rng, 1, room - 4)
            step = Step("O1", x, r=r, s=_small(rng, 2, room - 2 - r))
        elif family == H:
            step = Step("O2", x, t=_small(rng, 2, room - 1))
        elif op == "O1":
            step = Step("O1", x)
        else:
            step = Step("O2", x, t=_small(rng, 1, (room - 1) // 2))
        trace = ConstructionTrace(family, trace.base, trace.steps + (step,))
        tree, state = replay(trace)
