"""Compiled Prüfer sweep: decode every sequence and collect canonical codes.

Codes are the AHU parenthesis strings of ``graph.canonical_code`` packed into
an integer, '(' as bit 0 and ')' as bit 1. Equal-length bit strings compare
like the text, so the minimum over centres and the sorted child order carry
over unchanged. Work buffers are allocated once per sweep.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _rooted_code(adj, deg, n, root, parent, order, code, length, kids, keys):
    for v in range(n):
        parent[v] = -1
    order[0] = root
    parent[root] = root
    head, tail = 0, 1
    while head < tail:
        u = order[head]
        head += 1
        for k in range(deg[u]):
            w = adj[u, k]
            if parent[w] == -1:
                parent[w] = u
                order[tail] = w
                tail += 1
    width = 2 * n
    for idx in range(n - 1, -1, -1):
        v = order[idx]
        m = 0
        for k in range(deg[v]):
            w = adj[v, k]
            if parent[w] == v and w != root:
                kk = code[w] << (width - length[w])
                # insertion by left-aligned code
                j = m - 1
                while j >= 0 and keys[j] > kk:
                    keys[j + 1] = keys[j]
                    kids[j + 1] = kids[j]
                    j -= 1
                keys[j + 1] = kk
                kids[j + 1] = w
                m += 1
        c = 0
        ln = 1
        for i in range(m):
            w = kids[i]
            c = (c << length[w]) | code[w]
            ln += length[w]
        code[v] = (c << 1) | 1
        length[v] = ln + 1
    return code[root]


@njit(cache=True)
def prufer_codes(n):
    seen = np.zeros(1 << (2 * n), np.bool_)
    seq = np.zeros(n - 2, np.int64)
    rem = np.empty(n, np.int64)
    adj = np.empty((n, n), np.int64)
    deg = np.empty(n, np.int64)
    d = np.empty(n, np.int64)
    layer = np.empty(n, np.int64)
    nxt = np.empty(n, np.int64)
    parent = np.empty(n, np.int64)
    order = np.empty(n, np.int64)
    code = np.empty(n, np.int64)
    length = np.empty(n, np.int64)
    kids = np.empty(n, np.int64)
    keys = np.empty(n, np.int64)
    while True:
        # decode
        for v in range(n):
            rem[v] = 1
            deg[v] = 0
        for x in seq:
            rem[x] += 1
        for x in seq:
            leaf = 0
            while rem[leaf] != 1:
                leaf += 1
            adj[leaf, deg[leaf]] = x
            deg[leaf] += 1
            adj[x, deg[x]] = leaf
            deg[x] += 1
            rem[leaf] -= 1
            rem[x] -= 1
        a = -1
        for v in range(n):
            if rem[v] == 1:
                if a == -1:
                    a = v
                else:
                    adj[a, deg[a]] = v
                    deg[a] += 1
                    adj[v, deg[v]] = a
                    deg[v] += 1
        # centres by leaf stripping
        m = 0
        for v in range(n):
            d[v] = deg[v]
            if d[v] <= 1:
                layer[m] = v
                m += 1
        remaining = n
        while remaining > 2:
            remaining -= m
            k = 0
            for i in range(m):
                v = layer[i]
                for j in range(deg[v]):
                    w = adj[v, j]
                    d[w] -= 1
                    if d[w] == 1:
                        nxt[k] = w
                        k += 1
            for i in range(k):
                layer[i] = nxt[i]
            m = k
        best = _rooted_code(adj, deg, n, layer[0], parent, order, code, length, kids, keys)
        if m == 2:
            other = _rooted_code(adj, deg, n, layer[1], parent, order, code, length, kids, keys)
            if other < best:
                best = other
        seen[best] = True
        # odometer increment
        i = n - 3
        while i >= 0 and seq[i] == n - 1:
            seq[i] = 0
            i -= 1
        if i < 0:
            break
        seq[i] += 1
    return np.flatnonzero(seen)


def code_to_text(code: int, n: int) -> str:
    return format(int(code), f"0{2 * n}b").replace("0", "(").replace("1", ")")
