"""Command-line front end.

Exit codes: 0 success, 1 when a REFUTED verdict (or an oracle disagreement)
is present, 2 on usage or build errors.  RF_THREADS caps how many sweep
jobs run in parallel; each job's solver stays single-threaded, so results
are identical at any thread count.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from sfcheck.construct import DEFAULT_PROFILE, InterpretationProfile
from sfcheck.formats import encode_dimacs, encode_graph6
from sfcheck.graphs import complement, random_graph
from sfcheck.report import build_target, run_verification, write_report
from sfcheck.solve import max_clique, max_independent_set, oracle_max_clique

_SUM_FLAGS = {"union": "disjoint_union", "join": "join"}
_PROD_FLAGS = {"lex": "lexicographic", "cart": "cartesian", "tensor": "tensor"}
_BASE_FLAGS = {"explicit": "explicit_path", "general": "general"}

NAMED_PROFILES = {"default": DEFAULT_PROFILE}


def _add_profile_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--profile", choices=sorted(NAMED_PROFILES), default="default",
                        help="named profile to start from")
    parser.add_argument("--sum", choices=sorted(_SUM_FLAGS), help="reading of the block combination")
    parser.add_argument("--prod", choices=sorted(_PROD_FLAGS), help="reading of the copy product")
    parser.add_argument("--base", choices=sorted(_BASE_FLAGS), help="stage-3 base case")
    parser.add_argument("--y-label", dest="y_label", type=int, choices=(1, 2),
                        help="label of base-path vertex y")


def _profile_from_args(args: argparse.Namespace) -> InterpretationProfile:
    profile = NAMED_PROFILES[args.profile]
    updates = {}
    if args.sum is not None:
        updates["sum"] = _SUM_FLAGS[args.sum]
    if args.prod is not None:
        updates["prod"] = _PROD_FLAGS[args.prod]
    if args.base is not None:
        updates["base_case"] = _BASE_FLAGS[args.base]
    if args.y_label is not None:
        updates["y_label"] = args.y_label
    return dataclasses.replace(profile, **updates) if updates else profile


def _rf_threads() -> int:
    raw = os.environ.get("RF_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        print(f"warning: ignoring non-integer RF_THREADS={raw!r}", file=sys.stderr)
        return 1


def _check_summary(report: dict) -> str:
    check = report["checks"][0]
    kind = report["target"]["kind"]
    param = report["target"]["param"]
    claimed = check["claimed"]
    computed = check["computed"]
    return (
        f"{check['theorem_id']} r={check['r']} on {kind}({param}) "
        f"[n={report['graph_stats']['n']}]: {check['status']} "
        f"(claimed {claimed!r}, computed {computed})"
    )


def _cmd_build(args: argparse.Namespace) -> int:
    profile = _profile_from_args(args)
    lg = build_target(args.kind, args.param, profile)
    text = encode_graph6(lg.graph) + "\n" if args.format == "graph6" else encode_dimacs(lg.graph)
    with open(args.out, "w") as fh:
        fh.write(text)
    print(f"{args.kind}({args.param}): n={lg.graph.n} m={lg.graph.m} -> {args.out} [{args.format}]")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    profile = _profile_from_args(args)
    report = run_verification(args.theorem, args.r, profile, deterministic=True)
    write_report(args.report, report)
    print(_check_summary(report))
    if report["bound"] is not None:
        bound = report["bound"]
        print(f"bound: witness_ok={bound['witness_ok']} implied={bound['implied']!r}")
    return 1 if report["checks"][0]["status"] == "REFUTED" else 0


def _sweep_job(job: tuple) -> tuple[str, dict]:
    theorem, r, profile_dict, deterministic = job
    profile = InterpretationProfile.from_dict(profile_dict)
    report = run_verification(theorem, r, profile, deterministic=deterministic)
    name = f"t{theorem.replace('.', '')}_r{r}.json"
    return name, report


def _cmd_sweep(args: argparse.Namespace) -> int:
    if args.t_max < 3:
        print("error: --t-max must be >= 3", file=sys.stderr)
        return 2
    profile = _profile_from_args(args)
    jobs = [("1.1", r, profile.to_dict(), True) for r in range(3, args.t_max + 1)]
    jobs += [("1.2", r, profile.to_dict(), True) for r in range(2, args.t_max)]
    workers = min(_rf_threads(), len(jobs))
    os.makedirs(args.report_dir, exist_ok=True)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_job, jobs))
    else:
        results = [_sweep_job(job) for job in jobs]
    refuted = False
    for name, report in results:
        write_report(os.path.join(args.report_dir, name), report)
        print(_check_summary(report))
        refuted = refuted or report["checks"][0]["status"] == "REFUTED"
    print(f"sweep: {len(results)} reports -> {args.report_dir}")
    return 1 if refuted else 0


def _cmd_oracle_check(args: argparse.Namespace) -> int:
    if args.max_n > 24:
        print("error: --max-n above the oracle cap of 24", file=sys.stderr)
        return 2
    rng = random.Random(args.seed)
    densities = (0.2, 0.5, 0.8)
    failures = 0
    for trial in range(args.trials):
        density = densities[trial % len(densities)]
        n = rng.randint(1, args.max_n)
        g = random_graph(n, density, rng)
        solver_omega = max_clique(g).size
        oracle_omega = oracle_max_clique(g)
        solver_alpha = max_independent_set(g).size
        oracle_alpha = oracle_max_clique(complement(g))
        if solver_omega != oracle_omega or solver_alpha != oracle_alpha:
            failures += 1
            print(
                f"disagreement on trial {trial} (n={n}, density={density}): "
                f"clique {solver_omega} vs {oracle_omega}, "
                f"independent {solver_alpha} vs {oracle_alpha}: {encode_graph6(g)}",
                file=sys.stderr,
            )
    print(
        f"oracle-check: {args.trials - failures}/{args.trials} agreements "
        f"(max n {args.max_n}, densities {densities}, seed {args.seed})"
    )
    return 0 if failures == 0 else 1


def _make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sfcheck",
        description="Build the layered two-label graphs F(r)/SF(t) and verify their claimed properties exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct a graph and write it to a file")
    p_build.add_argument("--kind", choices=("F", "SF"), required=True)
    p_build.add_argument("--r", "--t", dest="param", type=int, required=True,
                         help="stage parameter r (kind F) or stack parameter t (kind SF)")
    _add_profile_args(p_build)
    p_build.add_argument("--format", choices=("graph6", "dimacs"), default="graph6")
    p_build.add_argument("--out", required=True)
    p_build.set_defaults(func=_cmd_build)

    p_verify = sub.add_parser("verify", help="check one claim instance and write a JSON report")
    p_verify.add_argument("--theorem", choices=("1.1", "1.2"), required=True)
    p_verify.add_argument("--r", type=int, required=True)
    _add_profile_args(p_verify)
    p_verify.add_argument("--report", required=True)
    p_verify.add_argument("--deterministic", action="store_true",
                          help="force reproducible witnesses (always on; accepted for compatibility)")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="run all claim checks up to --t-max")
    p_sweep.add_argument("--t-max", dest="t_max", type=int, required=True)
    _add_profile_args(p_sweep)
    p_sweep.add_argument("--report-dir", dest="report_dir", required=True)
    p_sweep.add_argument("--deterministic", action="store_true",
                         help="force reproducible witnesses (always on; accepted for compatibility)")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_oracle = sub.add_parser("oracle-check", help="cross-check the solver against the enumeration oracle")
    p_oracle.add_argument("--trials", type=int, default=200)
    p_oracle.add_argument("--max-n", dest="max_n", type=int, default=12)
    p_oracle.add_argument("--seed", type=int, default=7)
    p_oracle.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = _make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
