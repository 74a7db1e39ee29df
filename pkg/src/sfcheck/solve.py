"""Exact maximum clique, independent set, and single-label clique solvers.

max_clique is a branch-and-bound search: a greedy clique seeds the lower
bound, root vertices are processed in degeneracy order, and inside the tree
candidate sets are bounded by a greedy coloring.  oracle_max_clique is a
deliberately plain clique enumeration kept independent of the main solver
so the two can cross-check each other on small graphs.

All searches are single-threaded and fully deterministic (ties break toward
the lowest vertex index), so sizes, witnesses, and node counts reproduce
across runs.  The ``deterministic`` flag is part of the solver interface
for callers that must insist on reproducible witnesses; it never changes
behavior here because no parallel mode is implemented.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from sfcheck.construct import LabeledGraph
from sfcheck.graphs import Graph, as_vertex_set, complement, induced

ORACLE_MAX_N = 24


@dataclass(frozen=True)
class CliqueResult:
    """Optimum size, a verified witness, and search statistics."""

    size: int
    witness: tuple[int, ...]
    nodes_explored: int
    elapsed: float


def verify_witness(g: Graph, members, mode: str) -> bool:
    """O(k^2) pairwise re-check that ``members`` is a clique / independent set.

    Independent of the solvers; every witness that leaves this module has
    passed it, and reports re-run it on load.
    """
    if mode not in ("clique", "independent"):
        raise ValueError(f"unknown witness mode {mode!r}")
    vs = as_vertex_set(g, members)
    want = mode == "clique"
    for a, b in combinations(vs, 2):
        if g.has_edge(a, b) != want:
            return False
    return True


def _degeneracy_order(rows: tuple[int, ...], n: int) -> list[int]:
    """Repeatedly remove a minimum-degree vertex, lowest index first."""
    remaining = (1 << n) - 1
    deg = [rows[v].bit_count() for v in range(n)]
    order = []
    for _ in range(n):
        best_v = -1
        best_d = n + 1
        m = remaining
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if deg[v] < best_d:
                best_d = deg[v]
                best_v = v
        order.append(best_v)
        remaining &= ~(1 << best_v)
        m = rows[best_v] & remaining
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            deg[w] -= 1
    return order


def _greedy_clique(rows: tuple[int, ...], n: int) -> list[int]:
    """Grow a clique by repeatedly taking the candidate with most candidate
    neighbors (ties to the lowest index); used as the initial bound."""
    cand = (1 << n) - 1
    clique: list[int] = []
    while cand:
        best_v = -1
        best_d = -1
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (rows[v] & cand).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        clique.append(best_v)
        cand &= rows[best_v]
    return clique


def max_clique(g: Graph, *, deterministic: bool = True) -> CliqueResult:
    """Exact maximum clique by branch and bound with a greedy-coloring bound."""
    start = time.perf_counter()
    n = g.n
    rows = g.rows
    nodes = 0

    seed = _greedy_clique(rows, n)
    best_size = len(seed)
    best_witness = tuple(sorted(seed))

    def expand(base: list[int], cand: int) -> None:
        nonlocal nodes, best_size, best_witness
        nodes += 1
        if cand == 0:
            if len(base) > best_size:
                best_size = len(base)
                best_witness = tuple(sorted(base))
            return
        # Greedy coloring: peel independent classes; a vertex in class c can
        # extend the clique to at most len(base) + c.
        classes: list[int] = []
        rest = cand
        while rest:
            avail = rest
            cls = 0
            while avail:
                v = (avail & -avail).bit_length() - 1
                cls |= 1 << v
                avail &= ~(rows[v] | (1 << v))
            classes.append(cls)
            rest &= ~cls
        cur = cand
        for color in range(len(classes), 0, -1):
            cls = classes[color - 1]
            while True:
                if len(base) + color <= best_size:
                    return
                rem = cls & cur
                if rem == 0:
                    break
                v = (rem & -rem).bit_length() - 1
                cur &= ~(1 << v)
                base.append(v)
                expand(base, cur & rows[v])
                base.pop()

    order = _degeneracy_order(rows, n)
    remaining = (1 << n) - 1
    for v in order:
        remaining &= ~(1 << v)
        cand = rows[v] & remaining
        if 1 + cand.bit_count() <= best_size:
            continue
        expand([v], cand)

    if not verify_witness(g, best_witness, "clique"):
        raise AssertionError("solver produced an invalid clique witness")
    return CliqueResult(best_size, best_witness, nodes, time.perf_counter() - start)


def max_independent_set(g: Graph, *, deterministic: bool = True) -> CliqueResult:
    """Exact maximum independent set via the complement's maximum clique."""
    start = time.perf_counter()
    res = max_clique(complement(g), deterministic=deterministic)
    if not verify_witness(g, res.witness, "independent"):
        raise AssertionError("solver produced an invalid independent-set witness")
    return CliqueResult(res.size, res.witness, res.nodes_explored, time.perf_counter() - start)


def max_mono_clique(lg: LabeledGraph, *, deterministic: bool = True) -> CliqueResult:
    """Largest clique whose vertices all carry one label.

    Solves each label class on its induced subgraph; the witness is reported
    in the original vertex numbering and carries a single label.
    """
    start = time.perf_counter()
    g = lg.graph
    best_size = 0
    best_witness: tuple[int, ...] = ()
    nodes = 0
    for label in (1, 2):
        members = lg.vertices_with_label(label)
        res = max_clique(induced(g, members), deterministic=deterministic)
        nodes += res.nodes_explored
        if res.size > best_size:
            best_size = res.size
            best_witness = tuple(members[i] for i in res.witness)
    if not verify_witness(g, best_witness, "clique"):
        raise AssertionError("solver produced an invalid single-label witness")
    return CliqueResult(best_size, best_witness, nodes, time.perf_counter() - start)


def oracle_max_clique(g: Graph) -> int:
    """Exact clique number by straightforward clique enumeration.

    Capped at n <= 24 so the worst case stays around 2^24 subsets.  No
    coloring, no degeneracy order; independent of max_clique by design.
    """
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"oracle refuses n={g.n} > {ORACLE_MAX_N}")
    rows = g.rows
    best = 0

    def extend(size: int, cand: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand and size + cand.bit_count() > best:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            extend(size + 1, cand & rows[v])

    extend(0, (1 << g.n) - 1)
    return best
