"""Strict graph6 encoding and decoding.

graph6 packs a graph into printable ASCII: the vertex count, then the upper
adjacency triangle read column by column (bit k of the stream is pair (i,j),
j = 1..n-1, i = 0..j-1), split into 6-bit chunks (first bit highest), each
chunk + 63.  Vertex counts 0..62 are one byte n + 63; 63..64 (our capacity)
use the long form: byte 126 then three bytes carrying an 18-bit big-endian
value, 6 bits per byte, each + 63.

Decoding is strict: every byte must be in 63..126, the payload must have
exactly ceil(n(n-1)/2 / 6) bytes, and padding bits must be zero.  Errors
carry the byte offset of the first offending byte.
"""

from __future__ import annotations

from .graphs import CapacityError, Graph, MAX_VERTICES

_HEADER = ">>graph6<<"


class Graph6ParseError(ValueError):
    """Malformed graph6 input; `offset` is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def read_graph6(line: str) -> Graph:
    """Decode one graph6 line (optional >>graph6<< header tolerated)."""
    s = line.rstrip("\r\n")
    base = 0
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
        base = len(_HEADER)
    if not s:
        raise Graph6ParseError("empty graph6 line", base)

    data = []
    for k, ch in enumerate(s):
        b = ord(ch)
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"byte {b} outside graph6 range 63..126", base + k)
        data.append(b - 63)

    if data[0] == 63:  # long-form vertex count marker (byte 126)
        if len(data) < 4:
            raise Graph6ParseError("long-form vertex count truncated", base + len(s))
        if data[1] == 63:
            raise Graph6ParseError(
                "very-long form (n >= 258048) exceeds 64-vertex capacity", base + 1
            )
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body_start = 4
    else:
        n = data[0]
        body_start = 1
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} exceeds capacity {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[body_start:]
    if len(body) != nbytes:
        raise Graph6ParseError(
            f"payload has {len(body)} bytes, expected {nbytes} for n={n}",
            base + body_start + min(len(body), nbytes),
        )

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            bit = (body[k // 6] >> (5 - k % 6)) & 1
            if bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbytes and nbits % 6:
        pad = body[-1] & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6ParseError(
                "nonzero padding bits in final byte", base + body_start + nbytes - 1
            )
    return Graph(n, adj, _validate=False)


def write_graph6(g: Graph) -> str:
    """Encode as a short-form graph6 line (no trailing newline); needs n <= 62."""
    if g.n > 62:
        raise CapacityError(
            f"short-form graph6 writes at most 62 vertices, got {g.n}"
        )
    out = [chr(g.n + 63)]
    acc = 0
    filled = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(chr(acc + 63))
                acc = filled = 0
    if filled:
        out.append(chr((acc << (6 - filled)) + 63))
    return "".join(out)


def read_graph6_file(text: str) -> list[Graph]:
    """Decode a whole file: one graph per nonempty line."""
    return [read_graph6(line) for line in text.splitlines() if line.strip()]


def write_graph6_file(graphs) -> str:
    """One graph per line, newline-terminated."""
    return "".join(write_graph6(g) + "\n" for g in graphs)
