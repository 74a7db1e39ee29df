"""Bit-exact graph serialization: graph6 and DIMACS edge format.

graph6 packs the upper adjacency triangle column-major, six bits per
printable character (value + 63), after a size header N(n): one character
for n <= 62, '~' plus three characters for larger n, '~~' plus six beyond
258047.  Padding bits are zero on encode and ignored on decode.
"""

from __future__ import annotations

from sfcheck.graphs import Graph

_HEADER = ">>graph6<<"


class Graph6ParseError(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def encode_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    elif n <= 68719476735:
        out = ["~", "~"]
        out.extend(chr(((n >> shift) & 63) + 63) for shift in range(30, -1, -6))
    else:
        raise ValueError(f"graph too large for graph6: n={n}")
    acc = 0
    nbits = 0
    for j in range(1, n):
        col = g.rows[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    base = len(_HEADER) if text.startswith(_HEADER) else 0
    end = len(text)
    while end > base and text[end - 1] in "\r\n \t":
        end -= 1
    body = text[base:end]
    if not body:
        raise Graph6ParseError("empty graph6 string", base)

    vals = []
    for k, ch in enumerate(body):
        o = ord(ch)
        if o < 63 or o > 126:
            raise Graph6ParseError(f"invalid graph6 character {ch!r}", base + k)
        vals.append(o - 63)

    if vals[0] < 63:
        n = vals[0]
        pos = 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6ParseError("truncated size header", base + len(body))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    else:
        if len(vals) < 8:
            raise Graph6ParseError("truncated size header", base + len(body))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8

    nbits = n * (n - 1) // 2
    ndata = (nbits + 5) // 6
    have = len(vals) - pos
    if have < ndata:
        raise Graph6ParseError(
            f"truncated edge data: need {ndata} characters, have {have}", base + len(body)
        )
    if have > ndata:
        raise Graph6ParseError("trailing characters after edge data", base + pos + ndata)

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (vals[pos + k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def encode_dimacs(g: Graph) -> str:
    """DIMACS edge format: "p edge n m" then 1-indexed "e u v" lines, u < v,
    in lexicographic order."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
