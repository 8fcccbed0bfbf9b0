"""Command-line front end.

Subcommands
    radii   hierarchy R_1..R_T of a code file, optional cross-checking
    weights generalized weights d_t and packing radii delta_t
    ball    block-metric ball volume
    bounds  sample the binary t=2 bound curves to CSV
    plan    column plan for a syndrome batch
    ops     apply a code operation, optionally checking the radii laws
    mc      randomized covering experiments

Exit codes: 0 ok, 1 usage, 2 bad input, 3 infeasible at the configured caps,
4 property violation or method disagreement.  The environment variable
GENCOVER_STATE_CAP (an integer number of states) overrides every enumeration
cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bounds as bounds_mod
from . import code as code_mod
from . import montecarlo as mc_mod
from . import planner as planner_mod
from . import radii as radii_mod
from . import weights as weights_mod
from .errors import (
    DomainError,
    GencoverError,
    InputFormatError,
    MethodDisagreement,
    MethodInfeasible,
    SearchTooLarge,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_VIOLATION = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _compact(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _caps() -> dict:
    raw = os.environ.get("GENCOVER_STATE_CAP")
    if raw is None:
        return {}
    try:
        cap = int(raw)
    except ValueError as exc:
        raise InputFormatError(f"GENCOVER_STATE_CAP={raw!r} is not an integer") from exc
    return {"state_cap": cap, "span_cap": cap, "ball_work_cap": cap}


_METHODS = {"lifted": "lifted", "span": "span_cover", "ball": "ball_cover", "all": "all"}


def _cmd_radii(args) -> int:
    C = code_mod.load_code(args.code)
    report = radii_mod.radii_hierarchy(C, args.t_max, _METHODS[args.method], **_caps())
    if args.json:
        print(json.dumps(report.to_dict(), indent=2, sort_keys=True))
        return EXIT_OK
    print(" ".join(f"R_{e.t}={e.value}" for e in report.entries))
    for e in report.entries:
        line = f"t={e.t} R={e.value} method={e.method}"
        if e.witness_columns is not None:
            line += f" columns={_compact(list(e.witness_columns))}"
            line += f" syndromes={_compact([list(s) for s in e.witness_syndromes])}"
        print(line)
    return EXIT_OK


def _cmd_weights(args) -> int:
    C = code_mod.load_code(args.code)
    tmax = min(args.t_max, C.k)
    ds = [weights_mod.generalized_weight(C, t) for t in range(1, tmax + 1)]
    print(" ".join(f"d_{t}={d}" for t, d in enumerate(ds, start=1)))
    print(" ".join(f"delta_{t}={(d - 1) // 2}" for t, d in enumerate(ds, start=1)))
    return EXIT_OK


def _cmd_ball(args) -> int:
    print(radii_mod.ball_volume(args.t, args.r, args.n, args.q))
    return EXIT_OK


def _cmd_bounds(args) -> int:
    points = bounds_mod.emit_curve(args.rho_min, args.rho_max, args.step)
    text = bounds_mod.curve_to_csv(points)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_plan(args) -> int:
    C = code_mod.load_code(args.code)
    syndromes = planner_mod.load_syndromes(args.syndromes, C.field, C.n - C.k)
    if not syndromes:
        raise InputFormatError("syndrome file holds no syndromes")
    if args.method == "exact":
        plan = planner_mod.plan_exact(C.H, syndromes)
    else:
        plan = planner_mod.plan_greedy(C.H, syndromes)
    if args.json:
        print(json.dumps(plan.to_dict(), indent=2, sort_keys=True))
        return EXIT_OK
    print(f"size={plan.size} method={plan.method} columns={_compact(list(plan.columns))}")
    for i, s in enumerate(syndromes):
        print(
            f"syndrome={_compact(list(s))} coeffs={_compact(list(plan.coefficients.row(i)))}"
        )
    return EXIT_OK


def _radii_values(C, t_max) -> list[int]:
    report = radii_mod.radii_hierarchy(C, t_max, "lifted", **_caps())
    return list(report.values())


def _cmd_ops(args) -> int:
    C = code_mod.load_code(args.code)
    needs_pos = args.op in ("puncture", "shorten")
    if needs_pos and args.at is None:
        raise _UsageError(f"--at is required for {args.op}")
    needs_two = args.op in ("uuv", "dsum")
    C2 = code_mod.load_code(args.code2) if args.code2 else None
    if needs_two and C2 is None:
        raise _UsageError(f"--code2 is required for {args.op}")

    if args.op == "puncture":
        result = code_mod.puncture(C, args.at)
    elif args.op == "extend":
        result = code_mod.extend(C)
    elif args.op == "shorten":
        result = code_mod.shorten(C, args.at)
    elif args.op == "uuv":
        result = code_mod.u_uplusv(C, C2)
    else:
        result = code_mod.direct_sum(C, C2)

    sys.stdout.write(code_mod.format_code(result))

    if args.check_radii is None:
        return EXIT_OK
    t_max = args.check_radii
    before = _radii_values(C, t_max)
    after = _radii_values(result, t_max)
    before2 = _radii_values(C2, t_max) if needs_two else None
    violated = False
    for t in range(1, t_max + 1):
        if args.op == "puncture":
            ok = after[t - 1] in (before[t - 1], before[t - 1] - 1)
            law = "R_t(C*) in {R_t, R_t-1}"
        elif args.op == "extend":
            ok = after[t - 1] in (before[t - 1], before[t - 1] + 1)
            law = "R_t(C^) in {R_t, R_t+1}"
        elif args.op == "uuv":
            ok = after[t - 1] <= before[t - 1] + before2[t - 1]
            law = "R_t(C) <= R_t(C1)+R_t(C2)"
        elif args.op == "dsum":
            ok = after[t - 1] == before[t - 1] + before2[t - 1]
            law = "R_t(C1+C2) == R_t(C1)+R_t(C2)"
        else:  # shorten carries no general law
            print(f"t={t} before={before[t - 1]} after={after[t - 1]} (no law checked)")
            continue
        print(
            f"t={t} before={before[t - 1]}"
            + (f"+{before2[t - 1]}" if before2 else "")
            + f" after={after[t - 1]} {law}: {'OK' if ok else 'VIOLATED'}"
        )
        violated |= not ok
    return EXIT_VIOLATION if violated else EXIT_OK


def _cmd_mc(args) -> int:
    if args.xv:
        r = int(args.rho * args.n)
        from .fqlinalg import GFMatrix
        from .gf import field_create

        v = GFMatrix.zeros(field_create(2, 1), 2, args.n)
        s = mc_mod.xv_experiment(args.n, args.k, r, v, args.trials, args.seed)
        print(
            f"r={r} exact={s.exact_expectation:.6f} empirical={s.mean_xv:.6f} "
            f"bracket=({s.ebound_low:.6f},{s.ebound_high:.6f})"
        )
        return EXIT_OK
    summary = mc_mod.estimate_r2_success(args.n, args.k, args.rho, args.trials, args.seed)
    print(
        f"trials={summary.trials} seed={summary.seed} fraction={summary.success_fraction:.6f}"
    )
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="gencover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("radii", help="covering-radius hierarchy of a code file")
    p.add_argument("--code", required=True)
    p.add_argument("--t-max", dest="t_max", type=int, required=True)
    p.add_argument("--method", choices=sorted(_METHODS), default="lifted")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_radii)

    p = sub.add_parser("weights", help="generalized weights and packing radii")
    p.add_argument("--code", required=True)
    p.add_argument("--t-max", dest="t_max", type=int, required=True)
    p.set_defaults(func=_cmd_weights)

    p = sub.add_parser("ball", help="block-metric ball volume")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_ball)

    p = sub.add_parser("bounds", help="emit the bound curves as CSV")
    p.add_argument("--rho-min", dest="rho_min", type=float, required=True)
    p.add_argument("--rho-max", dest="rho_max", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("plan", help="column plan for a syndrome batch")
    p.add_argument("--code", required=True)
    p.add_argument("--syndromes", required=True)
    p.add_argument("--method", choices=["exact", "greedy"], default="exact")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("ops", help="apply a code operation")
    p.add_argument("--code", required=True)
    p.add_argument("--code2")
    p.add_argument(
        "--op", choices=["puncture", "extend", "shorten", "uuv", "dsum"], required=True
    )
    p.add_argument("--at", type=int)
    p.add_argument("--check-radii", dest="check_radii", type=int)
    p.set_defaults(func=_cmd_ops)

    p = sub.add_parser("mc", help="randomized covering experiments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--xv", action="store_true")
    p.set_defaults(func=_cmd_mc)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InputFormatError, FileNotFoundError, IsADirectoryError, DomainError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MethodDisagreement as exc:
        print(f"method disagreement: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (MethodInfeasible, SearchTooLarge) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except GencoverError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
