"""Command-line front end.

Exit codes: 0 success, 1 a checked identity failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations

import mpmath

from . import duality, oracle, parlin, quot, schur, verlinde
from .cyclo import CycloError
from .diagrams import DiagramError, WeightSystem, all_diagrams, parse_diagram, parse_weights

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
INPUT_ERRORS = (
    DiagramError,
    verlinde.VerlindeError,
    quot.QuotError,
    duality.DualityError,
    schur.SchurError,
    CycloError,
    json.JSONDecodeError,
)
LARGE_N_WARNING = 24


class InputError(ValueError):
    pass


@dataclass
class JobSpec:
    subcommand: str
    params: dict = field(default_factory=dict)
    weights: object = None
    format: str = "json"
    precision: int = oracle.DEFAULT_DPS

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "JobSpec":
        return cls(**json.loads(text))


def _emit(obj: dict) -> None:
    print(json.dumps(obj))


def _load_weights(text: str, r: int, l: int) -> WeightSystem:
    try:
        return parse_weights(text, r, l)
    except json.JSONDecodeError as exc:
        raise InputError(f"weights are not valid JSON: {exc}") from exc


def _warn_large(N: int) -> None:
    if N > LARGE_N_WARNING:
        print(f"warning: r + l = {N} > {LARGE_N_WARNING}; subset enumeration may be slow",
              file=sys.stderr)


def _oracle_fields(exact: int, approx) -> tuple[dict, bool]:
    gap = oracle.discrepancy(exact, approx)
    ok = int(mpmath.nint(approx.real)) == exact and gap < mpmath.mpf("0.5")
    return {
        "oracle_value": mpmath.nstr(approx.real, 30),
        "oracle_discrepancy": mpmath.nstr(gap, 5),
        "oracle_ok": ok,
    }, ok


def cmd_verlinde(args) -> int:
    weights = _load_weights(args.weights, args.r, args.l)
    inst = verlinde.VerlindeInstance(args.r, args.l, args.g, weights)
    _warn_large(inst.N)
    start = time.perf_counter()
    value = verlinde.verlinde(inst, args.variant)
    elapsed = (time.perf_counter() - start) * 1000
    subset_count = sum(1 for _ in verlinde.subsets(inst.N, inst.r))
    status = EXIT_OK
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["r", "l", "g", "n", "d", "dd", "total_weight", "variant", "value"])
        w.writerow([inst.r, inst.l, inst.g, inst.n, 0, 0, inst.total_weight, args.variant, value])
        sys.stdout.write(buf.getvalue())
        return status
    out = {
        "variant": args.variant,
        "r": inst.r,
        "l": inst.l,
        "g": inst.g,
        "n": inst.n,
        "total_weight": inst.total_weight,
        "value": str(value),
        "subset_count": subset_count,
    }
    if args.oracle:
        approx = oracle.verlinde_numeric(inst.r, inst.l, inst.g, weights, args.variant, args.precision)
        extra, ok = _oracle_fields(value, approx)
        out.update(extra)
        status = EXIT_OK if ok else EXIT_FAIL
    if args.timing:
        out["elapsed_ms"] = round(elapsed, 3)
    _emit(out)
    return status


def cmd_vi(args) -> int:
    mu = _load_weights(args.mu, args.r, args.l)
    if args.n is not None and args.n != mu.n:
        raise InputError(f"--n {args.n} but {mu.n} diagrams given")
    inst = quot.IntersectionInstance(args.r, args.l, args.g, args.d, mu)
    _warn_large(inst.N)
    value = quot.intersection_number(inst)
    out = {
        "r": inst.r,
        "l": inst.l,
        "g": inst.g,
        "n": inst.n,
        "d": inst.d,
        "quot_dimension": quot.quot_dimension(inst.r, inst.l, inst.g, inst.n, inst.d),
        "value": str(value),
    }
    status = EXIT_OK
    if args.oracle:
        approx = oracle.intersection_numeric(inst.r, inst.l, inst.g, mu, args.precision)
        extra, ok = _oracle_fields(value, approx)
        out.update(extra)
        status = EXIT_OK if ok else EXIT_FAIL
    _emit(out)
    return status


def random_admissible(rng: random.Random, r_max: int, l_max: int, g_max: int,
                      deg_max: int, n_max: int) -> duality.DualityInstance:
    """Rejection-sample an admissible duality instance."""
    while True:
        r, l = rng.randint(1, r_max), rng.randint(1, l_max)
        g, n = rng.randint(0, g_max), rng.randint(0, n_max)
        pool = list(all_diagrams(r, l))
        ws = WeightSystem(tuple(rng.choice(pool) for _ in range(n)), r, l)
        inst = duality.DualityInstance(
            r, l, g, rng.randint(-deg_max, deg_max), rng.randint(-deg_max, deg_max), ws
        )
        if inst.residue() == 0:
            return inst


def cmd_vi_check(args) -> int:
    rng = random.Random(args.seed)
    failures = 0
    rows = []
    for _ in range(args.count):
        inst = random_admissible(rng, args.max_rank, args.max_rank, args.max_genus, 3, 3)
        out, _plan = duality.normalize(inst)
        rep = quot.vi_equals_verlinde(out.r, out.l, out.g, out.n, out.d, out.weights)
        failures += not rep.ok
        rows.append({
            "instance": inst.to_dict(),
            "intersection": str(rep.intersection),
            "verlinde": str(rep.verlinde),
            "ok": rep.ok,
        })
    _emit({"count": args.count, "failures": failures, "results": rows})
    return EXIT_FAIL if failures else EXIT_OK


def cmd_symmetry(args) -> int:
    N = args.N
    if N < 2:
        raise InputError("--N must be at least 2")
    _warn_large(N)
    rec_total = rec_fail = 0
    for r in range(1, N):
        l = N - r
        for lam in all_diagrams(r, l):
            for S in combinations(range(N), r):
                rec_total += 1
                rec_fail += not schur.reciprocity_check(lam, S).ok
    rng = random.Random(args.seed)
    rl_total = rl_fail = 0
    for r in range(1, N):
        l = N - r
        pool = list(all_diagrams(r, l))
        systems = []
        if args.exhaustive:
            for n in range(args.max_points + 1):
                for combo in combinations(range(len(pool)), n) if n else [()]:
                    systems.append(tuple(pool[i] for i in combo))
        else:
            for _ in range(args.count):
                n = rng.randint(0, args.max_points)
                systems.append(tuple(rng.choice(pool) for _ in range(n)))
        for ds in systems:
            ws = WeightSystem(ds, r, l)
            if ws.total_size % (r * l):
                continue
            for g in range(args.max_genus + 1):
                rep = verlinde.check_rank_level(verlinde.VerlindeInstance(r, l, g, ws))
                rl_total += 1
                rl_fail += not rep.ok
    ok = rec_fail == 0 and rl_fail == 0
    _emit({
        "N": N,
        "reciprocity": {"checked": rec_total, "failures": rec_fail},
        "rank_level": {"checked": rl_total, "failures": rl_fail},
        "pass": ok,
    })
    return EXIT_OK if ok else EXIT_FAIL


def _instance_from_args(args) -> duality.DualityInstance:
    if args.instance:
        return duality.instance_from_json(args.instance)
    missing = [k for k in ("r", "l", "g") if getattr(args, k) is None]
    if missing:
        raise InputError(f"missing --{', --'.join(missing)} (or pass --instance)")
    weights = _load_weights(args.weights, args.r, args.l)
    return duality.DualityInstance(args.r, args.l, args.g, args.d, args.dd, weights)


def cmd_normalize(args) -> int:
    inst = _instance_from_args(args)
    out, plan = duality.normalize(inst, args.threshold)
    post = duality.check_postconditions(out, args.threshold)
    replay_ok = duality.replay(inst, plan) == out
    _emit({
        "input": inst.to_dict(),
        "plan": plan.to_dict(),
        "normalized": out.to_dict(),
        "postconditions": {k: v for k, v in asdict(post).items()},
        "replay_ok": replay_ok,
    })
    return EXIT_OK if post.ok and replay_ok else EXIT_FAIL


def cmd_verdict(args) -> int:
    inst = _instance_from_args(args)
    v = duality.dimension_verdict(inst, args.threshold)
    _emit(v.to_dict())
    return EXIT_OK if v.equal else EXIT_FAIL


def cmd_schur_eval(args) -> int:
    N = args.N if args.N is not None else args.r + args.l
    lam = parse_diagram(args.diagram, args.r, args.l)
    try:
        subset = [int(x) for x in args.subset.split(",") if x.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse subset {args.subset!r}") from exc
    value = schur.schur_eval(lam, schur.EvalPoint.of(N, subset))
    _emit({
        "diagram": lam.to_text(),
        "N": N,
        "subset": subset,
        "value": repr(value),
        "coeffs": [str(c) for c in value.coeffs],
    })
    return EXIT_OK


def cmd_parlin_check(args) -> int:
    rows = []
    failures = 0
    m = args.exhaustive_max
    for r in range(1, m + 1):
        for l in range(1, m + 1):
            for lam in all_diagrams(r, l):
                rep = parlin.check_diagram(lam)
                failures += not rep.ok
                rows.append(("standard", r, l, lam.to_text(), rep.ok))
    rng = random.Random(args.seed)
    for k in range(args.random_seeds):
        r, l = rng.randint(1, args.random_max), rng.randint(1, args.random_max)
        lam = rng.choice(list(all_diagrams(r, l)))
        rep = parlin.check_diagram(lam, seed=rng.randrange(1 << 30))
        failures += not rep.ok
        rows.append((f"random#{k}", r, l, lam.to_text(), rep.ok))
    if args.format == "json":
        _emit({
            "checked": len(rows),
            "failures": failures,
            "rows": [dict(zip(("flags", "r", "l", "diagram", "ok"), row)) for row in rows],
        })
    else:
        print(f"{'flags':<12}{'r':>3}{'l':>3}  {'diagram':<14}result")
        for flags, r, l, text, ok in rows:
            print(f"{flags:<12}{r:>3}{l:>3}  {text:<14}{'pass' if ok else 'FAIL'}")
        print(f"{len(rows)} checked, {failures} failed")
    return EXIT_FAIL if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rankdual", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
        sp.add_argument("--precision", type=int, default=oracle.DEFAULT_DPS,
                        help="digits for --oracle")

    sp = sub.add_parser("verlinde", help="SL, GL or twisted Verlinde number")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--weights", default="[]", help="JSON array of diagram strings or object")
    sp.add_argument("--variant", choices=verlinde.VARIANTS, default="sl")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--oracle", action="store_true", help="also evaluate in floating point")
    sp.add_argument("--timing", action="store_true", help="add elapsed_ms (not reproducible)")
    common(sp)
    sp.set_defaults(func=cmd_verlinde)

    sp = sub.add_parser("vi", help="Vafa-Intriligator intersection number")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--g", type=int, required=True)
    sp.add_argument("--n", type=int, default=None)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--mu", default="[]")
    sp.add_argument("--oracle", action="store_true")
    common(sp)
    sp.set_defaults(func=cmd_vi)

    sp = sub.add_parser("vi-check", help="random normalized instances: VI against twisted Verlinde")
    sp.add_argument("--count", type=int, default=30)
    sp.add_argument("--max-rank", type=int, default=3)
    sp.add_argument("--max-genus", type=int, default=2)
    common(sp)
    sp.set_defaults(func=cmd_vi_check)

    sp = sub.add_parser("symmetry", help="reciprocity and rank-level checks at one N = r + l")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--exhaustive", action="store_true",
                    help="all weight systems up to --max-points instead of --count samples")
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--max-points", type=int, default=2)
    sp.add_argument("--max-genus", type=int, default=2)
    common(sp)
    sp.set_defaults(func=cmd_symmetry)

    for name, func, helptext in (
        ("normalize", cmd_normalize, "normalize a duality instance and print the plan"),
        ("verdict", cmd_verdict, "twisted numbers on both sides after normalization"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--instance", help='JSON {"r","l","g","d","dd","weights"}')
        sp.add_argument("--r", type=int)
        sp.add_argument("--l", type=int)
        sp.add_argument("--g", type=int)
        sp.add_argument("--d", type=int, default=0)
        sp.add_argument("--dd", type=int, default=0)
        sp.add_argument("--weights", default="[]")
        sp.add_argument("--threshold", type=int, default=1)
        common(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("schur-eval", help="exact Schur value at roots of unity")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--diagram", required=True, help='e.g. "2,1"')
    sp.add_argument("--subset", required=True, help='exponents, e.g. "0,1"')
    sp.add_argument("--N", type=int, default=None, help="root order (default r + l)")
    common(sp)
    sp.set_defaults(func=cmd_schur_eval)

    sp = sub.add_parser("parlin-check", help="parabolic linear-algebra identities")
    sp.add_argument("--exhaustive-max", type=int, default=3)
    sp.add_argument("--random-seeds", type=int, default=100)
    sp.add_argument("--random-max", type=int, default=5)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    common(sp)
    sp.set_defaults(func=cmd_parlin_check)
    return p


def job_from_args(args) -> JobSpec:
    params = {k: v for k, v in vars(args).items() if k not in ("func", "command")}
    weights = params.pop("weights", None) or params.pop("mu", None)
    fmt = params.pop("format", "json")
    precision = params.pop("precision", oracle.DEFAULT_DPS)
    return JobSpec(args.command, params, weights, fmt, precision)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, *INPUT_ERRORS) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except verlinde.IntegralityError as exc:
        print(f"identity failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
