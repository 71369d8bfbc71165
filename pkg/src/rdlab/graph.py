"""Simple graphs and trees on dense integer vertex ids.

Graphs are immutable values; adjacency and other derived data are computed
lazily and cached on the instance.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

VertexSet = frozenset


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex ids."""


class NotATreeError(GraphError):
    pass


def _normalize_edges(edges: Iterable[Sequence[int]]) -> frozenset[tuple[int, int]]:
    out = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        raw = list(self.edges)
        edges = _normalize_edges(raw)
        if len(edges) != len(raw):
            raise GraphError("duplicate edge")
        object.__setattr__(self, "edges", edges)
        if self.n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={self.n}")
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if u < 0 or v >= self.n:
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]):
        return cls(n, tuple(tuple(e) for e in edges))  # normalised (and duplicate-checked) in __post_init__

    @cached_property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def adj_mask(self) -> tuple[int, ...]:
        """Open neighbourhoods as bitmasks."""
        masks = []
        for a in self.adj:
            m = 0
            for u in a:
                m |= 1 << u
            masks.append(m)
        return tuple(masks)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adj[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def is_connected(self) -> bool:
        return len(bfs_distances(self, 0)) == self.n


@dataclass(frozen=True)
class Tree(Graph):
    """A connected acyclic graph."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if len(self.edges) != self.n - 1:
            raise NotATreeError(f"tree on {self.n} vertices needs {self.n - 1} edges, got {len(self.edges)}")
        if not self.is_connected():
            raise NotATreeError("graph is not connected")

    @classmethod
    def from_graph(cls, g: Graph) -> "Tree":
        return cls(g.n, g.edges)

    @cached_property
    def leaves(self) -> frozenset[int]:
        return frozenset(v for v in self.vertices if len(self.adj[v]) == 1)

    @cached_property
    def stems(self) -> frozenset[int]:
        return frozenset(u for v in self.leaves for u in self.adj[v])


def as_tree(g: Graph) -> Tree:
    return g if isinstance(g, Tree) else Tree.from_graph(g)


def neighbors(g: Graph, v: int) -> VertexSet:
    g._check(v)
    return frozenset(g.adj[v])


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return neighbors(g, v) | {v}


def bfs_distances(g: Graph, source: int) -> dict[int, int]:
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def distance_matrix(t: Graph) -> list[list[int]]:
    """All-pairs edge-count distances (BFS from every vertex).

    Unreachable pairs get -1, which only happens for disconnected graphs.
    """
    rows = []
    for s in t.vertices:
        d = bfs_distances(t, s)
        rows.append([d.get(v, -1) for v in t.vertices])
    return rows


def eccentricity_diameter(t: Tree) -> int:
    """Diameter by the double-BFS trick."""
    d0 = bfs_distances(t, 0)
    far = max(d0, key=lambda v: (d0[v], -v))
    d1 = bfs_distances(t, far)
    return max(d1.values())


def path_between(t: Tree, a: int, b: int) -> list[int]:
    parent = {a: None}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in t.adj[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    out = [b]
    while out[-1] != a:
        out.append(parent[out[-1]])
    return out[::-1]


@dataclass(frozen=True)
class DiametralPath:
    vertices: tuple[int, ...]

    @property
    def d(self) -> int:
        return len(self.vertices) - 1

    def __getitem__(self, i: int) -> int:
        return self.vertices[i]


def diametral_paths(t: Tree) -> list[DiametralPath]:
    """Every diametral path, once per direction."""
    dist = distance_matrix(t)
    d = max(max(row) for row in dist)
    out = []
    for a in t.vertices:
        for b in t.vertices:
            if a != b and dist[a][b] == d:
                out.append(DiametralPath(tuple(path_between(t, a, b))))
    return out


def max_penultimate_paths(t: Tree) -> list[DiametralPath]:
    """Diametral paths whose x_{d-1} has the largest possible degree, in
    tie-break order (lexicographically smallest vertex sequence first)."""
    if t.n < 2:
        raise GraphError("diametral path needs at least two vertices")
    paths = diametral_paths(t)
    best = max(len(t.adj[p[p.d - 1]]) for p in paths)
    return sorted((p for p in paths if len(t.adj[p[p.d - 1]]) == best), key=lambda p: p.vertices)


def diametral_path_max_penultimate(t: Tree) -> DiametralPath:
    """A diametral path x0..xd whose x_{d-1} has the largest degree.

    Ties go to the lexicographically smallest vertex sequence.
    """
    return max_penultimate_paths(t)[0]


@dataclass(frozen=True)
class RootedTree:
    tree: Tree
    root: int
    parent: tuple[int | None, ...]
    children: tuple[tuple[int, ...], ...]
    order: tuple[int, ...]  # BFS order from the root

    def descendants(self, v: int) -> list[int]:
        out, stack = [], list(self.children[v])
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.children[u])
        return sorted(out)

    def subtree(self, v: int) -> list[int]:
        """Vertex set of T_v: v together with its descendants."""
        return sorted([v, *self.descendants(v)])

    def depth(self, v: int) -> int:
        k = 0
        while self.parent[v] is not None:
            v = self.parent[v]
            k += 1
        return k


def root_at(t: Tree, r: int) -> RootedTree:
    t._check(r)
    parent: list[int | None] = [None] * t.n
    children: list[list[int]] = [[] for _ in range(t.n)]
    seen = {r}
    order = [r]
    queue = deque([r])
    while queue:
        u = queue.popleft()
        for w in t.adj[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
                children[u].append(w)
                order.append(w)
                queue.append(w)
    return RootedTree(t, r, tuple(parent), tuple(tuple(c) for c in children), tuple(order))


def centers(t: Tree) -> list[int]:
    """The one or two central vertices, found by stripping leaves."""
    if t.n <= 2:
        return list(t.vertices)
    deg = [len(a) for a in t.adj]
    layer = [v for v in t.vertices if deg[v] <= 1]
    remaining = t.n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in t.adj[v]:
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return sorted(layer)


def rooted_code(t: Tree, root: int) -> str:
    """AHU parenthesis code of t rooted at root."""
    rt = root_at(t, root)
    code: dict[int, str] = {}
    for v in reversed(rt.order):
        code[v] = "(" + "".join(sorted(code[c] for c in rt.children[v])) + ")"
    return code[root]


def canonical_code(t: Tree) -> str:
    return min(rooted_code(t, c) for c in centers(t))


def is_isomorphic(a: Tree, b: Tree) -> bool:
    return a.n == b.n and canonical_code(a) == canonical_code(b)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of g under the vertex map v -> perm[v]."""
    cls = type(g)
    return cls(g.n, frozenset((perm[u], perm[v]) for u, v in g.edges))


def induced_tree(t: Tree, keep: Iterable[int]) -> tuple[Tree, list[int]]:
    """Subtree induced on keep, relabelled densely; also returns new->old ids."""
    old = sorted(keep)
    new = {v: i for i, v in enumerate(old)}
    edges = frozenset((new[u], new[v]) for u, v in t.edges if u in new and v in new)
    return Tree(len(old), edges), old


# Named trees used throughout.

def path(n: int) -> Tree:
    return Tree(n, frozenset((i, i + 1) for i in range(n - 1)))


def star(t: int) -> Tree:
    """K_{1,t} with centre 0."""
    return Tree(t + 1, frozenset((0, i) for i in range(1, t + 1)))


def double_star(p: int, q: int) -> Tree:
    """DS_{p,q}: centre 0 carries leaves 2..p+1, centre 1 carries the next q."""
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(p)]
    edges += [(1, 2 + p + i) for i in range(q)]
    return Tree(p + q + 2, frozenset(edges))


def spider(t: int) -> Tree:
    """Healthy spider S_{t,t}: centre 0, leg i is 0 - (2i+1) - (2i+2)."""
    edges = []
    for i in range(t):
        edges += [(0, 2 * i + 1), (2 * i + 1, 2 * i + 2)]
    return Tree(2 * t + 1, frozenset(edges))
