"""graph6 codec, restricted to single-byte headers (order <= 62).

The encoding follows the published format: one header byte n+63, then the
upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2),
x(0,3), ..., packed six bits per byte (most significant first), each chunk
offset by 63, zero-padded at the end. Multi-byte headers (orders > 62) are
rejected outright.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .graph import Graph

HEADER = ">>graph6<<"
G6_MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the fault."""

    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)


def graph6_encode(g: Graph) -> str:
    """Encode a graph as a graph6 line (without newline)."""
    n = g.n
    if n > G6_MAX_ORDER:
        raise ValueError(f"graph6 support is limited to order <= {G6_MAX_ORDER}, got {n}")
    out = [chr(n + 63)]
    buf = 0
    filled = 0
    for col in range(1, n):
        for row in range(col):
            buf = (buf << 1) | (1 if g.has_edge(row, col) else 0)
            filled += 1
            if filled == 6:
                out.append(chr(buf + 63))
                buf = 0
                filled = 0
    if filled:
        buf <<= 6 - filled
        out.append(chr(buf + 63))
    return "".join(out)


def graph6_decode(text: str | bytes) -> Graph:
    """Decode one graph6 line into a Graph.

    Tolerates (and skips) a leading '>>graph6<<' marker. Raises Graph6Error
    with the offending byte offset on malformed input.
    """
    if isinstance(text, bytes):
        s = text.decode("ascii", errors="replace")
    else:
        s = text
    s = s.rstrip("\r\n")
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    first = ord(s[0])
    if first == 126:
        raise Graph6Error("multi-byte order headers (n > 62) are not supported", base)
    if not 63 <= first <= 126:
        raise Graph6Error(f"header byte {first} outside graph6 range 63..126", base)
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated graph6 string: order {n} needs {nbytes} data bytes, got {len(body)}",
            base + len(s),
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph6 data", base + 1 + nbytes)
    bits = []
    for i, ch in enumerate(body):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6Error(f"data byte {b} outside graph6 range 63..126", base + 1 + i)
        val = b - 63
        bits.extend((val >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    pad = bits[nbits:]
    if any(pad):
        raise Graph6Error("nonzero padding bits", base + 1 + nbytes - 1)
    edges = []
    idx = 0
    for col in range(1, n):
        for row in range(col):
            if bits[idx]:
                edges.append((row, col))
            idx += 1
    return Graph.from_edges(n, edges)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Decode a stream of graph6 lines, yielding (line_number, graph).

    Blank lines are skipped; a '>>graph6<<' marker at the start of a line is
    tolerated. Parse failures raise Graph6Error annotated with the line number.
    """
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped == HEADER:
            continue
        try:
            yield lineno, graph6_decode(stripped)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc}", exc.offset) from exc
