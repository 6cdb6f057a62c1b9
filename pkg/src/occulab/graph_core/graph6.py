"""graph6 encoding of simple graphs.

Format: a size header N(n) followed by the upper triangle of the adjacency
matrix, column by column (``(0,1), (0,2), (1,2), (0,3), ...``), packed six
bits per byte, each byte offset by 63.  ``n <= 62`` uses one header byte;
``63 <= n <= 258047`` uses ``126`` plus three bytes.
"""

from __future__ import annotations

from .graph import Graph

MAX_ORDER = 258047
HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position of the fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _value(text: str, i: int) -> int:
    c = ord(text[i])
    if not 63 <= c <= 126:
        raise Graph6Error(f"character {text[i]!r} outside graph6 range [63, 126]", i)
    return c - 63


def parse_graph6(text: str) -> Graph:
    line = text.rstrip("\r\n")
    start = len(HEADER) if line.startswith(HEADER) else 0
    if start >= len(line):
        raise Graph6Error("missing size header", start)

    first = _value(line, start)
    if first < 63:
        n, pos = first, start + 1
    else:
        if start + 4 > len(line):
            raise Graph6Error("truncated size header", len(line))
        if _value(line, start + 1) == 63:
            raise Graph6Error("eight-byte size form (n >= 258048) is not supported", start + 1)
        n = 0
        for k in range(1, 4):
            n = (n << 6) | _value(line, start + k)
        pos = start + 4

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = line[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit field: expected {nbytes} bytes, got {len(body)}", len(line))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after bit field", pos + nbytes)

    edges = []
    bit = 0
    u, v = 0, 1
    for k in range(nbytes):
        x = _value(line, pos + k)
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if x >> shift & 1:
                    raise Graph6Error("non-zero padding bits", pos + k)
                continue
            if x >> shift & 1:
                edges.append((u, v))
            bit += 1
            u += 1
            if u == v:
                u, v = 0, v + 1
    return Graph(n, edges)


def write_graph6(g: Graph) -> str:
    if g.has_loops():
        raise ValueError("graph6 cannot encode loops")
    n = g.n
    if n > MAX_ORDER:
        raise ValueError(f"order {n} exceeds {MAX_ORDER}")
    if n < 63:
        out = [chr(n + 63)]
    else:
        out = [chr(126)] + [chr(((n >> s) & 63) + 63) for s in (12, 6, 0)]

    acc = 0
    nacc = 0
    for v in range(1, n):
        row = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | (row >> u & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6_lines(lines):
    """Yield ``(line_number, Graph | Graph6Error)`` for each non-blank line."""
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6Error as exc:
            yield lineno, exc
