"""graph6, edge-list and arc-list readers and writers."""

from __future__ import annotations

import re
from pathlib import Path

from .graph import Graph, GraphError, Orientation

GRAPH6_HEADER = ">>graph6<<"

_HEADER_N = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")


class FormatError(GraphError):
    """Raised for text that does not conform to a supported graph format."""


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n < 68719476736:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError(f"graph too large for graph6: n={n}")


def write_graph6(g: Graph) -> str:
    """graph6 encoding of ``g`` (no header, no trailing newline)."""
    bits = []
    for j in range(1, g.n):
        nbrs = g.neighbor_set(j)
        for i in range(j):
            bits.append(1 if i in nbrs else 0)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = (value << 1) | b
        body.append(chr(value + 63))
    return _encode_n(g.n) + "".join(body)


def _decode_n(data: list[int]) -> tuple[int, int]:
    if not data:
        raise FormatError("empty graph6 string")
    if data[0] != 63:
        return data[0], 1
    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise FormatError("truncated graph6 size header")
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        return n, 8
    if len(data) < 4:
        raise FormatError("truncated graph6 size header")
    n = 0
    for x in data[1:4]:
        n = (n << 6) | x
    return n, 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` prefix is accepted."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    if s.startswith(":") or s.startswith(";") or s.startswith("&"):
        raise FormatError("sparse6/digraph6 input is not graph6")
    data = []
    for ch in s:
        x = ord(ch) - 63
        if not 0 <= x < 64:
            raise FormatError(f"character {ch!r} outside the graph6 range")
        data.append(x)
    n, offset = _decode_n(data)
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    body = data[offset:]
    if len(body) != expected:
        raise FormatError(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}"
        )
    bits = []
    for x in body:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise FormatError("nonzero graph6 padding bits")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def _parse_pairs(text: str) -> tuple[int | None, list[tuple[int, int]]]:
    declared = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _HEADER_N.match(line)
            if m:
                if declared is not None:
                    raise FormatError(f"line {lineno}: repeated #n header")
                declared = int(m.group(1))
            continue
        fields = line.split()
        if len(fields) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex index")
        if u == v:
            raise FormatError(f"line {lineno}: self-loop at {u}")
        pairs.append((u, v))
    return declared, pairs


def _vertex_count(declared: int | None, pairs: list[tuple[int, int]]) -> int:
    top = max((max(p) for p in pairs), default=-1) + 1
    if declared is None:
        return top
    if top > declared:
        raise FormatError(f"vertex index {top - 1} >= declared n={declared}")
    return declared


def parse_edge_list(text: str) -> Graph:
    declared, pairs = _parse_pairs(text)
    n = _vertex_count(declared, pairs)
    seen = set()
    for u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {key}")
        seen.add(key)
    return Graph.from_edges(n, pairs)


def parse_arc_list(text: str) -> Orientation:
    declared, pairs = _parse_pairs(text)
    n = _vertex_count(declared, pairs)
    seen = set()
    for u, v in pairs:
        if (u, v) in seen:
            raise FormatError(f"duplicate arc ({u}, {v})")
        if (v, u) in seen:
            raise FormatError(f"arcs ({v}, {u}) and ({u}, {v}) make the underlying graph non-simple")
        seen.add((u, v))
    return Orientation.from_arcs(n, pairs)


def write_edge_list(g: Graph) -> str:
    lines = [f"#n={g.n}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def write_arc_list(o: Orientation) -> str:
    lines = [f"#n={o.n}"] + [f"{u} {v}" for u, v in o.sorted_arcs()]
    return "\n".join(lines) + "\n"


FORMATS = {".g6": "graph6", ".edges": "edges", ".arcs": "arcs"}


def detect_format(path: str | Path, override: str | None = None) -> str:
    if override:
        if override not in FORMATS.values():
            raise FormatError(f"unknown format {override!r}")
        return override
    suffix = Path(path).suffix
    try:
        return FORMATS[suffix]
    except KeyError:
        raise FormatError(
            f"cannot detect format of {path}; use --format graph6|edges|arcs"
        ) from None


def loads(text: str, fmt: str) -> Graph | Orientation:
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError("expected exactly one graph6 line")
        return parse_graph6(lines[0])
    if fmt == "edges":
        return parse_edge_list(text)
    if fmt == "arcs":
        return parse_arc_list(text)
    raise FormatError(f"unknown format {fmt!r}")


def dumps(obj: Graph | Orientation, fmt: str) -> str:
    if isinstance(obj, Orientation):
        if fmt != "arcs":
            raise FormatError("orientations can only be written as arc lists")
        return write_arc_list(obj)
    if fmt == "graph6":
        return write_graph6(obj) + "\n"
    if fmt == "edges":
        return write_edge_list(obj)
    raise FormatError(f"graphs cannot be written as {fmt!r}")


def load(path: str | Path, fmt: str | None = None) -> Graph | Orientation:
    return loads(Path(path).read_text(), detect_format(path, fmt))
