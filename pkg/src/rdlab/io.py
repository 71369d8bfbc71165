"""Text formats: edge lists, graph6, and {0,1,2} assignments."""

from __future__ import annotations

from .graph import Graph, GraphError


class ParseError(ValueError):
    pass


def parse_edgelist(text: str) -> Graph:
    """Parse `n m` followed by m pairs `u v` (0-based).

    Only whitespace-separated tokens matter, so the flattened one-line form
    written by :func:`format_edgelist_line` parses too.
    """
    try:
        tokens = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise ParseError(f"non-integer token in edge list: {exc}") from None
    if len(tokens) < 2:
        raise ParseError("edge list needs a header `n m`")
    n, m = tokens[0], tokens[1]
    body = tokens[2:]
    if len(body) != 2 * m:
        raise ParseError(f"header promises {m} edges, found {len(body) / 2:g}")
    pairs = [(body[2 * i], body[2 * i + 1]) for i in range(m)]
    try:
        return Graph.from_edges(n, pairs)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edgelist(g: Graph) -> str:
    edges = g.sorted_edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def format_edgelist_line(g: Graph) -> str:
    edges = g.sorted_edges()
    return " ".join([str(g.n), str(len(edges))] + [f"{u} {v}" for u, v in edges])


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([63 + n])
    if n <= 258047:
        return bytes([126] + [63 + ((n >> s) & 63) for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("order too large for graph6")


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        chunk, rest = data[2:8], data[8:]
        if len(chunk) < 6:
            raise ParseError("truncated graph6 order")
    else:
        chunk, rest = data[1:4], data[4:]
        if len(chunk) < 3:
            raise ParseError("truncated graph6 order")
    n = 0
    for c in chunk:
        n = (n << 6) | (c - 63)
    return n, rest


def to_graph6(g: Graph) -> str:
    """graph6 encoding (no `>>graph6<<` header)."""
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(1 if (u, v) in g.edges else 0)
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + int("".join(map(str, bits[i : i + 6])), 2) for i in range(0, len(bits), 6)
    )
    return (_encode_n(g.n) + body).decode("ascii")


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = s.encode("ascii")
    if any(c < 63 or c > 126 for c in data):
        raise ParseError("graph6 bytes must lie in 63..126")
    n, body = _decode_n(data)
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise ParseError(f"expected one graph6 line, got {len(lines)}")
        return from_graph6(lines[0])
    raise ValueError(f"unknown format {fmt!r}")


def parse_assignment(text: str) -> tuple[int, ...]:
    """`n` then n labels in {0,1,2}."""
    try:
        tokens = [int(tok) for tok in text.split()]
    except ValueError as exc:
        raise ParseError(f"non-integer token in assignment: {exc}") from None
    if not tokens:
        raise ParseError("empty assignment")
    n, labels = tokens[0], tokens[1:]
    if len(labels) != n:
        raise ParseError(f"assignment header says {n} labels, found {len(labels)}")
    if any(x not in (0, 1, 2) for x in labels):
        raise ParseError("labels must be 0, 1 or 2")
    return tuple(labels)


def format_assignment(values) -> str:
    return f"{len(values)}\n" + " ".join(str(x) for x in values) + "\n"
