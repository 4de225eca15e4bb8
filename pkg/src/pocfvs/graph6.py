"""Reading and writing the graph6 line format for small simple graphs.

Standard encoding: one graph per line, vertex count in the first byte
(value + 63), then the upper triangle of the adjacency matrix in column
order, six bits per printable byte. Only orders up to 62 are supported,
which covers everything this package enumerates.
"""

from __future__ import annotations

from .errors import InvalidInputError
from .graph import Graph

HEADER = ">>graph6<<"


def encode(g: Graph) -> str:
    if g.n > 62:
        raise InvalidInputError(f"graph6 support here stops at 62 vertices, got {g.n}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def decode(line: str) -> Graph:
    text = line.strip()
    if text.startswith(HEADER):
        text = text[len(HEADER) :].strip()
    if not text:
        raise InvalidInputError("empty graph6 line")
    first = ord(text[0]) - 63
    if first == 63:  # '~' starts the multi-byte order encodings
        raise InvalidInputError("graph6 orders beyond 62 vertices are not supported")
    if not (0 <= first <= 62):
        raise InvalidInputError(f"invalid graph6 order byte {text[0]!r}")
    n = first
    need = (n * (n - 1) // 2 + 5) // 6
    body = text[1 : 1 + need]
    if len(body) < need:
        raise InvalidInputError("graph6 line is truncated")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not (0 <= val < 64):
            raise InvalidInputError(f"invalid graph6 byte {ch!r}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def read_file(path: str) -> list[Graph]:
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line or line == HEADER:
                continue
            out.append(decode(line))
    return out
