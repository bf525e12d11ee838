"""Edge-list and graph6 readers, and the edge-list writer."""

from __future__ import annotations

import re

from .multigraph import Multigraph


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def parse_edge_list(text: str) -> Multigraph:
    """Header ``n m`` followed by ``m`` lines ``u v`` (0-based, ``u == v`` is a loop)."""
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty input, expected header 'n m'")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError(f"malformed header {header!r}, expected 'n m'", lineno)
    n, m = int(parts[0]), int(parts[1])
    edges = []
    for lineno, body in lines[1:]:
        parts = body.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"malformed edge {body!r}, expected 'u v'", lineno)
        u, v = int(parts[0]), int(parts[1])
        for w in (u, v):
            if w >= n:
                raise ParseError(f"endpoint {w} out of range for {n} vertices", lineno)
        edges.append((u, v))
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges but {len(edges)} were given", lines[0][0])
    return Multigraph(n, edges)


def render_edge_list(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_graph6(text: str) -> Multigraph:
    """Decode one graph6 string (simple graphs only)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r} at position {i}")
    if not s:
        raise ParseError("empty graph6 string")
    data = [ord(ch) - 63 for ch in s]
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    else:
        raise ParseError("graph6 vertex counts above 258047 are not supported")
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} characters, expected {need} for n={n}")
    bits = []
    for val in body:
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Multigraph(n, edges)


def parse_graph6_lines(text: str) -> list[Multigraph]:
    graphs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.strip():
            try:
                graphs.append(parse_graph6(raw))
            except ParseError as exc:
                raise ParseError(str(exc), lineno) from None
    return graphs


_EDGE_HEADER = re.compile(r"^\s*\d+\s+\d+\s*$")


def parse_graph_file(text: str, fmt: str = "auto") -> list[Multigraph]:
    """One edge-list graph, or one graph per line for graph6 input."""
    if fmt == "auto":
        first = next((body for _, body in _content_lines(text)), "")
        fmt = "edgelist" if _EDGE_HEADER.match(first) else "graph6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    if fmt == "graph6":
        return parse_graph6_lines(text)
    raise ValueError(f"unknown input format {fmt!r}")
