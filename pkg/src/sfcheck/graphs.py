"""Immutable dense graphs and the algebra used to assemble composite builds.

Vertices are the integers 0..n-1 and adjacency is one bitmask per vertex,
so equality of two graphs is bit-identity and every operation here defines
its output vertex order deterministically (first operand first, copy-major
for products).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

PRIMITIVE_KINDS = ("complete", "empty", "path", "cycle")
COMBINE_OPS = ("disjoint_union", "join")
PRODUCT_KINDS = ("cartesian", "tensor", "lexicographic")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph; ``rows[i]`` is the neighbor bitmask of i.

    Construction validates symmetry and the absence of self-loops, so every
    Graph value in the system satisfies both invariants by construction.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        if len(self.rows) != self.n:
            raise ValueError("rows length must equal vertex count")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} addresses vertices outside 0..{self.n - 1}")
            if (row >> i) & 1:
                raise ValueError(f"self-loop at vertex {i}")
            mask = row
            while mask:
                j = (mask & -mask).bit_length() - 1
                mask &= mask - 1
                if not (self.rows[j] >> i) & 1:
                    raise ValueError(f"asymmetric adjacency between {i} and {j}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.rows) // 2

    def has_edge(self, i: int, j: int) -> bool:
        if not (0 <= i < self.n and 0 <= j < self.n):
            raise ValueError(f"vertex pair ({i}, {j}) out of range for n={self.n}")
        return bool((self.rows[i] >> j) & 1)

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")
        return self.rows[v].bit_count()

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for i in range(self.n):
            mask = self.rows[i] >> (i + 1)
            j = i + 1
            while mask:
                step = (mask & -mask).bit_length() - 1
                j += step
                yield (i, j)
                mask >>= step + 1
                j += 1


def as_vertex_set(g: Graph, members: Iterable[int]) -> tuple[int, ...]:
    """Normalize to a sorted tuple; rejects duplicates and out-of-range ids."""
    vs = tuple(sorted(members))
    if len(set(vs)) != len(vs):
        raise ValueError("vertex set contains duplicates")
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    return vs


def primitive(kind: str, n: int) -> Graph:
    """Build one of the four primitive families: complete, empty, path, cycle."""
    if kind not in PRIMITIVE_KINDS:
        raise ValueError(f"unknown primitive kind {kind!r}")
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if kind == "empty":
        return Graph(n, (0,) * n)
    if kind == "complete":
        full = (1 << n) - 1
        return Graph(n, tuple(full & ~(1 << i) for i in range(n)))
    if kind == "path":
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if n < 3:
        raise ValueError("cycle requires at least 3 vertices")
    edges = [(i, i + 1) for i in range(n - 1)]
    edges.append((n - 1, 0))
    return Graph.from_edges(n, edges)


def complete(n: int) -> Graph:
    return primitive("complete", n)


def empty(n: int) -> Graph:
    return primitive("empty", n)


def path(n: int) -> Graph:
    return primitive("path", n)


def cycle(n: int) -> Graph:
    return primitive("cycle", n)


def complement(g: Graph) -> Graph:
    """Edge present iff absent in the input; the diagonal stays clear."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full & ~row) & ~(1 << i) for i, row in enumerate(g.rows)))


def combine(a: Graph, b: Graph, op: str) -> Graph:
    """Disjoint union or join; a keeps indices [0, a.n), b gets [a.n, a.n+b.n)."""
    if op not in COMBINE_OPS:
        raise ValueError(f"unknown combine op {op!r}")
    cross_b = (((1 << b.n) - 1) << a.n) if op == "join" else 0
    cross_a = ((1 << a.n) - 1) if op == "join" else 0
    rows = [row | cross_b for row in a.rows]
    rows.extend((row << a.n) | cross_a for row in b.rows)
    return Graph(a.n + b.n, tuple(rows))


def product(a: Graph, b: Graph, kind: str) -> Graph:
    """Cartesian, tensor, or lexicographic product; (i, j) -> i*b.n + j."""
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product kind {kind!r}")
    n = a.n * b.n
    full_b = (1 << b.n) - 1
    rows = [0] * n
    for i in range(a.n):
        arow = a.rows[i]
        for j in range(b.n):
            u = i * b.n + j
            mask = 0
            if kind == "cartesian":
                mask |= b.rows[j] << (i * b.n)
                m = arow
                while m:
                    i2 = (m & -m).bit_length() - 1
                    m &= m - 1
                    mask |= 1 << (i2 * b.n + j)
            elif kind == "tensor":
                m = arow
                while m:
                    i2 = (m & -m).bit_length() - 1
                    m &= m - 1
                    mask |= b.rows[j] << (i2 * b.n)
            else:
                mask |= b.rows[j] << (i * b.n)
                m = arow
                while m:
                    i2 = (m & -m).bit_length() - 1
                    m &= m - 1
                    mask |= full_b << (i2 * b.n)
            rows[u] = mask
    return Graph(n, tuple(rows))


def induced(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph on ``members``, renumbered in increasing original order."""
    vs = as_vertex_set(g, members)
    k = len(vs)
    rows = [0] * k
    for p in range(k):
        rp = g.rows[vs[p]]
        for q in range(p + 1, k):
            if (rp >> vs[q]) & 1:
                rows[p] |= 1 << q
                rows[q] |= 1 << p
    return Graph(k, tuple(rows))


def random_graph(n: int, edge_probability: float, rng: random.Random) -> Graph:
    """G(n, p) sample; edge draws follow (i, j) lexicographic order."""
    if n < 0:
        raise ValueError("vertex count must be nonnegative")
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rows = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < edge_probability:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))
