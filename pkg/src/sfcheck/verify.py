"""Claim checking: CONFIRMED/REFUTED verdicts with certificates.

The harness is claim-neutral.  Verdicts come from exact solver output and
are never assumed: several interpretation profiles are expected to refute
the claims, and a refutation ships the violating witness.

Claim T1.1: the largest single-label clique in F(r) has size ceil(r/2).
Claim T1.2: SF(r+1) contains neither a clique nor an independent set on
r+1 vertices.  When T1.2 holds, SF(t) with t = r+1 is a Ramsey witness and
implies R(t) > n; the one diagonal Ramsey value small enough to re-derive
at desk scale, R(3) = 6, is established exhaustively by confirm_R3 and
used to flag contradictory implications.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from sfcheck.construct import DEFAULT_PROFILE, InterpretationProfile, build_F, build_SF
from sfcheck.graphs import Graph, cycle
from sfcheck.solve import (
    max_clique,
    max_independent_set,
    max_mono_clique,
    verify_witness,
)

# Reference metadata only: shipped for report annotations, never consulted
# by any pass/fail decision.  R(3) = 6 is additionally re-derived from
# scratch by confirm_R3.
KNOWN_DIAGONAL_RAMSEY = {3: 6, 4: 18}

_R3_CACHE: bool | None = None


@dataclass(frozen=True)
class TheoremCheck:
    """One claim instance: what was claimed, what was computed, verdict."""

    theorem_id: str
    r: int
    profile: InterpretationProfile
    claimed: object
    computed: dict
    status: str
    witness: tuple[int, ...]
    witness_mode: str
    solver_stats: dict


@dataclass(frozen=True)
class RamseyCheck:
    """Whether a graph witnesses R(s, t) > n, with the violation if not."""

    ok: bool
    s: int
    t: int
    omega: int
    alpha: int
    violating_witness: tuple[int, ...] | None
    violating_mode: str | None
    nodes_explored: int


@dataclass(frozen=True)
class BoundReport:
    """The Ramsey implication of one SF(t) build."""

    t: int
    n: int
    witness_ok: bool
    implied: str | None
    contradiction: str | None
    reference: str | None


def check_theorem_1_1(
    r: int,
    profile: InterpretationProfile = DEFAULT_PROFILE,
    *,
    deterministic: bool = True,
) -> TheoremCheck:
    """Compare the largest single-label clique of F(r) against ceil(r/2)."""
    if r < 3:
        raise ValueError(f"claim T1.1 needs r >= 3, got {r}")
    lg = build_F(r, profile)
    res = max_mono_clique(lg, deterministic=deterministic)
    claimed = (r + 1) // 2
    status = "CONFIRMED" if res.size == claimed else "REFUTED"
    if res.witness and len({lg.labels[v] for v in res.witness}) != 1:
        raise AssertionError("single-label witness spans both labels")
    return TheoremCheck(
        theorem_id="T1_1",
        r=r,
        profile=profile,
        claimed=claimed,
        computed={"mono_clique": res.size},
        status=status,
        witness=res.witness,
        witness_mode="clique",
        solver_stats={"mono_nodes": res.nodes_explored},
    )


def check_theorem_1_2(
    r: int,
    profile: InterpretationProfile = DEFAULT_PROFILE,
    *,
    deterministic: bool = True,
    graph_override: Graph | None = None,
) -> TheoremCheck:
    """Check that SF(r+1) has no clique or independent set on r+1 vertices.

    ``graph_override`` substitutes the graph under test (seeded-fault tests
    and callers that already built SF(r+1)); the claim thresholds stay r.
    """
    if r < 2:
        raise ValueError(f"claim T1.2 needs r >= 2, got {r}")
    g = graph_override if graph_override is not None else build_SF(r + 1, profile).graph
    omega = max_clique(g, deterministic=deterministic)
    alpha = max_independent_set(g, deterministic=deterministic)
    confirmed = omega.size <= r and alpha.size <= r
    if not confirmed:
        if omega.size > r:
            witness, mode = omega.witness, "clique"
        else:
            witness, mode = alpha.witness, "independent"
    else:
        witness, mode = omega.witness, "clique"
    if not verify_witness(g, witness, mode):
        raise AssertionError("verdict witness failed re-verification")
    return TheoremCheck(
        theorem_id="T1_2",
        r=r,
        profile=profile,
        claimed=f"omega(SF({r + 1})) <= {r} and alpha(SF({r + 1})) <= {r}",
        computed={"omega": omega.size, "alpha": alpha.size},
        status="CONFIRMED" if confirmed else "REFUTED",
        witness=witness,
        witness_mode=mode,
        solver_stats={
            "omega_nodes": omega.nodes_explored,
            "alpha_nodes": alpha.nodes_explored,
        },
    )


def ramsey_witness(g: Graph, s: int, t: int, *, deterministic: bool = True) -> RamseyCheck:
    """True iff omega(g) < s and alpha(g) < t; otherwise carries the violation."""
    if s < 1 or t < 1:
        raise ValueError("clique and independence thresholds must be >= 1")
    omega = max_clique(g, deterministic=deterministic)
    alpha = max_independent_set(g, deterministic=deterministic)
    ok = omega.size < s and alpha.size < t
    witness: tuple[int, ...] | None = None
    mode: str | None = None
    if not ok:
        if omega.size >= s:
            witness, mode = omega.witness, "clique"
        else:
            witness, mode = alpha.witness, "independent"
        if not verify_witness(g, witness, mode):
            raise AssertionError("violating witness failed re-verification")
    return RamseyCheck(
        ok=ok,
        s=s,
        t=t,
        omega=omega.size,
        alpha=alpha.size,
        violating_witness=witness,
        violating_mode=mode,
        nodes_explored=omega.nodes_explored + alpha.nodes_explored,
    )


def bound_report_from_counts(t: int, n: int, omega: int, alpha: int) -> BoundReport:
    """Assemble the implication from already-computed exact counts."""
    witness_ok = omega < t and alpha < t
    implied = f"R({t}) > {n}" if witness_ok else None
    contradiction = None
    if witness_ok and t == 3 and n >= 6 and confirm_R3():
        contradiction = (
            f"implication R(3) > {n} contradicts R(3) = 6, which confirm_R3 "
            "establishes by exhaustive enumeration"
        )
    reference = None
    if t in KNOWN_DIAGONAL_RAMSEY:
        reference = (
            f"known value R({t}) = {KNOWN_DIAGONAL_RAMSEY[t]} "
            "(reference annotation only; verdicts never consult it)"
        )
    return BoundReport(
        t=t,
        n=n,
        witness_ok=witness_ok,
        implied=implied,
        contradiction=contradiction,
        reference=reference,
    )


def implied_bound(
    t: int,
    profile: InterpretationProfile = DEFAULT_PROFILE,
    *,
    deterministic: bool = True,
    graph: Graph | None = None,
) -> BoundReport:
    """State the Ramsey implication of SF(t) (or of an injected test graph)."""
    if t < 3:
        raise ValueError(f"implied bound needs t >= 3, got {t}")
    g = graph if graph is not None else build_SF(t, profile).graph
    rc = ramsey_witness(g, t, t, deterministic=deterministic)
    return bound_report_from_counts(t, g.n, rc.omega, rc.alpha)


def confirm_R3() -> bool:
    """Re-derive R(3) = 6 from scratch.

    Enumerates all 2^15 red/blue colorings of K_6's edges and confirms each
    contains a monochromatic triangle, then confirms the 5-cycle coloring of
    K_5 contains none.  The result is cached after the first call.
    """
    global _R3_CACHE
    if _R3_CACHE is not None:
        return _R3_CACHE

    pairs = list(combinations(range(6), 2))
    index = {p: i for i, p in enumerate(pairs)}
    triangle_masks = []
    for a, b, c in combinations(range(6), 3):
        triangle_masks.append(
            (1 << index[(a, b)]) | (1 << index[(a, c)]) | (1 << index[(b, c)])
        )

    k6_forced = True
    for coloring in range(1 << 15):
        for mask in triangle_masks:
            hit = coloring & mask
            if hit == mask or hit == 0:
                break
        else:
            k6_forced = False
            break

    c5 = cycle(5)
    k5_free = True
    for a, b, c in combinations(range(5), 3):
        red = int(c5.has_edge(a, b)) + int(c5.has_edge(a, c)) + int(c5.has_edge(b, c))
        if red in (0, 3):
            k5_free = False
            break

    _R3_CACHE = k6_forced and k5_free
    return _R3_CACHE
