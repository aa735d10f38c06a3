"""Command-line surface: orbit, verify, count-fp, densities, genus0, survey.

stdout carries data only (JSON, or CSV with --csv) and is byte-identical for
identical inputs and seed; progress and timing go to stderr.  Exit codes:
0 success, 2 validation failure, 3 budget exhaustion.
"""

import argparse
import json
import sys
import time

from . import densities, finite_fields, search
from .forms import BinaryForm, discriminant
from .orbits import CurvePoint, SymmetricPair, invariant_form, pair_from_point, x_minus_T
from .rings import algebra_norm
from .search import DescentBudgetError

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_BUDGET = 3


class CliValidationError(Exception):
    pass


def _parse_form(text: str) -> BinaryForm:
    try:
        coeffs = tuple(int(t) for t in text.split(","))
        return BinaryForm(coeffs)
    except ValueError as exc:
        raise CliValidationError(f"bad form {text!r}: {exc}")


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return EXIT_VALIDATION


def _emit(command: str, inputs: dict, payload, seed: int | None, csv_lines: list[str] | None = None, csv: bool = False):
    if csv and csv_lines is not None:
        sys.stdout.write("\n".join(csv_lines) + "\n")
        return
    record = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "seed": seed,
        "payload": payload,
    }
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def _cmd_orbit(args) -> int:
    f = _parse_form(args.form)
    if f.degree != args.n:
        return _fail(f"form has degree {f.degree}, expected {args.n}")
    try:
        x0, y0, z0 = (int(t) for t in args.point.split(","))
        P = CurvePoint(x0, y0, z0)
    except ValueError as exc:
        return _fail(f"bad point: {exc}")
    if discriminant(f) == 0:
        return _fail("form is degenerate (Disc = 0)")
    if not P.on_curve(f):
        return _fail("point is not on z^2 = f(x, y)")
    v = pair_from_point(f, P)
    payload = {
        "A": [list(r) for r in v.A],
        "B": [list(r) for r in v.B],
        "invariant_form": [str(c) for c in invariant_form(v).coeffs],
        "det_identity_holds": invariant_form(v) == f,
    }
    if P.z0 != 0:
        el = x_minus_T(f, P)
        payload["x_minus_T_norm_times_f0"] = str(algebra_norm(el) * f.coeffs[0])
        payload["z0_squared"] = str(P.z0**2)
    _emit("orbit", {"n": args.n, "form": args.form, "point": args.point}, payload, None)
    return EXIT_OK


def _cmd_verify(args) -> int:
    f = _parse_form(args.form)
    try:
        pair = SymmetricPair.from_json(args.pair)
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        return _fail(f"bad pair: {exc}")
    fv = invariant_form(pair)
    payload = {
        "invariant_form": [str(c) for c in fv.coeffs],
        "matches_form": fv == f,
    }
    _emit("verify", {"form": args.form}, payload, None)
    return EXIT_OK if fv == f else EXIT_VALIDATION


def _cmd_count_fp(args) -> int:
    f = _parse_form(args.form)
    if f.degree != args.n:
        return _fail(f"form has degree {f.degree}, expected {args.n}")
    try:
        stats = finite_fields.count_pairs_with_form(f, args.p)
    except finite_fields.BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    payload = {
        "p": stats.p,
        "form_mod_p": list(stats.form),
        "total_elements": stats.total_elements,
        "orbit_count": stats.orbit_count,
        "stabilizer_sizes": list(stats.stabilizer_sizes),
        "square_point_count": stats.square_point_count,
        "sl_n_order": finite_fields.sl_n_order(args.n, args.p),
    }
    _emit("count-fp", {"n": args.n, "p": args.p, "form": args.form}, payload, None)
    return EXIT_OK


def _cmd_densities(args) -> int:
    if args.genus < 0:
        return _fail("genus must be >= 0")
    reports = []
    for g in range(args.genus, args.genus + args.genus_count):
        if args.samples > 0:
            rep = densities.density_bound(g, args.primes, args.samples, args.seed, jobs=args.jobs)
            reports.append(rep.to_jsonable())
        else:
            # no sampling requested: report the closed parts and the exact
            # archimedean weight identity value for g <= 1
            n = 2 * g + 2
            reports.append(
                {
                    "genus": g,
                    "degree": n,
                    "archimedean_factor": 1.0 if g <= 1 else None,
                    "two_adic_factor": float(densities.two_adic_factor(n)),
                    "truncation_prime": args.primes,
                    "samples": 0,
                }
            )
    csv_lines = ["genus,bound,bound_conservative"]
    for rep in reports:
        csv_lines.append(
            f"{rep['genus']},{rep.get('bound', '')},{rep.get('bound_conservative', '')}"
        )
    _emit(
        "densities",
        {"genus": args.genus, "primes": args.primes, "samples": args.samples},
        reports,
        args.seed,
        csv_lines=csv_lines,
        csv=args.csv,
    )
    return EXIT_OK


def _cmd_genus0(args) -> int:
    val = densities.genus0_product(args.primes)
    payload = {
        "truncation_prime": args.primes,
        "product": f"{val.numerator}/{val.denominator}",
        "float": float(val),
        "log10": _log10_fraction(val),
    }
    _emit("genus0", {"primes": args.primes}, payload, None)
    return EXIT_OK


def _log10_fraction(x) -> float:
    import math

    return math.log10(x.numerator) - math.log10(x.denominator) if x > 0 else float("-inf")


def _cmd_survey(args) -> int:
    try:
        records, agg = search.survey(args.n, args.height, args.point_bound, args.count, args.seed, jobs=args.jobs)
    except DescentBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.csv:
        lines = ["coeffs;genus;locally_soluble;point"]
        for r in records:
            pt = ":".join(str(c) for c in r.point) if r.point else ""
            lines.append(f"{','.join(str(c) for c in r.coeffs)};{r.genus};{int(r.locally_soluble_overall)};{pt}")
        lines.append(f"# aggregate;{agg.count};{agg.locally_soluble};{agg.with_point}")
        sys.stdout.write("\n".join(lines) + "\n")
        return EXIT_OK
    for r in records:
        sys.stdout.write(json.dumps({"schema_version": SCHEMA_VERSION, "record": r.to_jsonable()}, sort_keys=True) + "\n")
    _emit(
        "survey",
        {"n": args.n, "height": args.height, "point_bound": args.point_bound, "count": args.count},
        agg.to_jsonable(),
        args.seed,
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pencilorbits", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="pair (A, B) from a form and a point on z^2 = f")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--form", required=True, help="comma-separated f0,...,fn")
    p.add_argument("--point", required=True, help="x0,y0,z0")
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("verify", help="check a pair against a form")
    p.add_argument("--form", required=True)
    p.add_argument("--pair", required=True, help='JSON {"A": [[...]], "B": [[...]]}')
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("count-fp", help="orbit statistics over F_p")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--form", required=True)
    p.set_defaults(func=_cmd_count_fp)

    p = sub.add_parser("densities", help="density bound report per genus")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--genus-count", type=int, default=1, help="number of consecutive genera")
    p.add_argument("--primes", type=int, default=1000, help="truncation prime P")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker shards; output bytes do not depend on this")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_densities)

    p = sub.add_parser("genus0", help="exact genus-0 Euler product")
    p.add_argument("--primes", type=int, default=10_000)
    p.set_defaults(func=_cmd_genus0)

    p = sub.add_parser("survey", help="local solubility / point survey")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--height", type=int, required=True)
    p.add_argument("--point-bound", type=int, default=16)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1, help="worker shards; output bytes do not depend on this")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=_cmd_survey)
    return ap


def run(argv: list[str]) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_VALIDATION if exc.code not in (0, None) else 0
    t0 = time.time()
    try:
        code = args.func(args)
    except CliValidationError as exc:
        return _fail(str(exc))
    except DescentBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    print(f"[{args.command}] elapsed {time.time() - t0:.3f} s", file=sys.stderr)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
