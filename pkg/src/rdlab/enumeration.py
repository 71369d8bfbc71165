"""All non-isomorphic free trees of a given order.

Production path: the Wright-Richmond-Odlyzko-McKay successor algorithm on
canonical level sequences (root at level 0, centre-rooted, each level
sequence the lexicographically largest for its rooted tree). Output is
re-ordered by canonical code so the stream order does not depend on the
generator.

Cross-check path: every Prüfer sequence on n symbols, deduplicated by
canonical code. Exponential, so capped at small n.
"""

from __future__ import annotations

import itertools
from typing import Iterator

from .graph import Tree, canonical_code
from .oracle import CapExceeded

ENUM_CAP = 18
PRUFER_CAP = 10


def _layout_to_tree(levels: list[int]) -> Tree:
    edges = []
    stack: list[int] = []
    for v, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Tree(len(levels), frozenset(edges))


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    """Beyer-Hedetniemi successor: next rooted level sequence, or None."""
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    gap = p - q
    for i in range(p, len(out)):
        out[i] = out[i - gap]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split at the root's second child: (first principal subtree rebased to
    level 0, root plus the remaining subtrees)."""
    m = len(levels)
    ones = [i for i, lev in enumerate(levels) if lev == 1]
    if len(ones) > 1:
        m = ones[1]
    left = [lev - 1 for lev in levels[1:m]]
    rest = [0] + levels[m:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    """Advance to the first sequence at or after `levels` that is the
    canonical centre-rooted representative of a free tree."""
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def _wrom(n: int) -> Iterator[Tree]:
    if n <= 2:
        yield _layout_to_tree(list(range(n)))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is None:
            return
        yield _layout_to_tree(levels)
        levels = _next_rooted(levels)


def all_trees(n: int, cap: int = ENUM_CAP) -> Iterator[Tree]:
    """Every tree of order n up to isomorphism, once, in canonical-code order."""
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > cap:
        raise CapExceeded(f"order {n} exceeds enumeration cap {cap}")
    keyed = sorted((canonical_code(t), t) for t in _wrom(n))
    for _, t in keyed:
        yield t


def prufer_to_tree(seq: tuple[int, ...]) -> Tree:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = (v for v in range(n) if degree[v] == 1)
    edges.append((u, w))
    return Tree(n, frozenset(edges))


def labeled_tree_classes(n: int, cap: int = PRUFER_CAP, compiled: bool = True) -> set[str]:
    """Canonical codes of all labelled trees on n vertices (via Prüfer).

    ``compiled=False`` decodes in pure Python through ``canonical_code``;
    only practical up to n = 8 or so.
    """
    if n < 1:
        raise ValueError("order must be at least 1")
    if n > cap:
        raise CapExceeded(f"order {n} exceeds Prüfer oracle cap {cap}")
    if n == 1:
        return {canonical_code(Tree(1, frozenset()))}
    if n == 2:
        return {canonical_code(Tree(2, frozenset({(0, 1)})))}
    if compiled:
        from ._prufer_kernel import code_to_text, prufer_codes

        return {code_to_text(c, n) for c in prufer_codes(n)}
    return {canonical_code(prufer_to_tree(seq)) for seq in itertools.product(range(n), repeat=n - 2)}


def count_trees_labeled_oracle(n: int, cap: int = PRUFER_CAP) -> int:
    return len(labeled_tree_classes(n, cap))
