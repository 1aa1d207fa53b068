"""graph6 reading and writing.

Only the undirected graph6 format is supported (no sparse6 / digraph6). Each
line is an independent record; an optional ``>>graph6<<`` header is skipped.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .graph import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


def _decode_size(data: bytes, pos: int) -> tuple[int, int]:
    def sixbits(i: int) -> int:
        if i >= len(data):
            raise Graph6Error("truncated vertex-count prefix", i)
        c = data[i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {chr(c)!r} outside graph6 range", i)
        return c - 63

    first = sixbits(pos)
    if first < 63:
        return first, pos + 1
    if pos + 1 < len(data) and data[pos + 1] == 126:
        n = 0
        for i in range(pos + 2, pos + 8):
            n = (n << 6) | sixbits(i)
        if n < 258048:
            raise Graph6Error("non-canonical 8-byte vertex count", pos)
        return n, pos + 8
    n = 0
    for i in range(pos + 1, pos + 4):
        n = (n << 6) | sixbits(i)
    if n < 63:
        raise Graph6Error("non-canonical 4-byte vertex count", pos)
    return n, pos + 4


def _encode_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record.

    >>> parse_graph6("C~").edges
    ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    """
    line = text.strip("\r\n")
    start = len(HEADER) if line.startswith(HEADER) else 0
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error("non-ASCII character", exc.start) from None
    if start >= len(data):
        raise Graph6Error("empty graph6 record", start)
    n, pos = _decode_size(data, start)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos < nbytes:
        raise Graph6Error(f"expected {nbytes} adjacency bytes, found {len(data) - pos}", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing characters after adjacency data", pos + nbytes)

    bits = 0
    for i in range(pos, pos + nbytes):
        c = data[i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"character {chr(c)!r} outside graph6 range", i)
        bits = (bits << 6) | (c - 63)
    pad = nbytes * 6 - nbits
    if bits & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", pos + nbytes - 1)
    bits >>= pad

    adj = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph.from_adjacency(adj)


def to_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 record (no header, no newline)."""
    if g.n < 1:
        raise ValueError("graph6 output needs at least one vertex")
    n = g.n
    out = [_encode_size(n)]
    acc = 0
    nacc = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(acc + 63))
                acc = nacc = 0
    if nacc:
        out.append(chr((acc << (6 - nacc)) + 63))
    return "".join(out)


def read_graph6_lines(lines: Iterable[str], source: str = "<input>") -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blanks and a leading header.

    Errors are re-raised as ``Graph6Error`` whose message names ``source`` and
    the 1-based line number.
    """
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line == HEADER:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"{source}:{lineno}: {exc.args[0].rsplit(' at byte', 1)[0]}", exc.offset) from None


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    with open(path, encoding="ascii", errors="replace") as fh:
        yield from read_graph6_lines(fh, str(path))


def write_graph6(graphs: Iterable[Graph], fh: TextIO, header: bool = False) -> int:
    count = 0
    if header:
        fh.write(HEADER)
    for g in graphs:
        fh.write(to_graph6(g) + "\n")
        count += 1
    return count
