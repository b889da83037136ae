"""Command-line front end.

Subcommands: bound, count, enumerate, search, quantum, asymptotic, selftest.
Output is plain ``key=value`` text (or one JSON object with ``--json``) and
is byte-identical across runs for identical argv, seeds included.

Exit codes: 0 success / condition holds; 1 usage or validation error;
2 resource cap or infeasible parameters; 3 search exhausted, or condition
fails under ``--strict``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import census, counting, quantum, search, symplectic
from .errors import CapExceededError, InfeasibleError
from .field import Field

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_EXHAUSTED = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _field_from_args(args) -> Field:
    modulus = None
    if getattr(args, "modulus", None):
        modulus = [int(t) for t in args.modulus.split(",")]
    return Field.from_order(args.q, modulus)


def _fraction_str(value) -> str:
    frac = Fraction(value)
    if frac.denominator == 1:
        return str(frac.numerator)
    return f"{frac.numerator}/{frac.denominator}"


def _emit(args, text_lines: list[str], json_obj: dict) -> None:
    if args.json:
        print(json.dumps(json_obj))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_bound(args) -> int:
    v = counting.verdict(args.q, args.n, args.k, args.d, args.which)
    _emit(args, [v.text()], v.to_json_dict())
    if args.strict and not v.holds:
        return EXIT_EXHAUSTED
    return EXIT_OK


def _cmd_count(args) -> int:
    what = args.what
    if what == "sphere":
        if args.d is None:
            raise ValueError("--d is required for --what sphere")
        value = counting.sphere_volume(args.q, args.n, args.d)
    else:
        if args.k is None:
            raise ValueError(f"--k is required for --what {what}")
        func = {
            "codes": counting.count_self_orthogonal,
            "containing": counting.count_containing,
            "dual-containing": counting.count_dual_containing,
            "dual-containing-bound": counting.count_dual_containing_bound,
        }[what]
        value = func(args.q, args.n, args.k, args.variant)
    frac = Fraction(value)
    _emit(args, [f"value={_fraction_str(frac)}"],
          {"what": what, "q": args.q, "n": args.n, "k": args.k, "d": args.d,
           "variant": args.variant if what != "sphere" else None,
           "value_num": frac.numerator, "value_den": frac.denominator})
    return EXIT_OK


def _cmd_enumerate(args) -> int:
    field = _field_from_args(args)
    fixed = []
    if args.fix_u:
        u = symplectic.SympVector.parse(field, args.fix_u)
        if u.n != args.n:
            raise ValueError(f"--fix-u has n={u.n}, expected n={args.n}")
        fixed.append(u)
    report = census.enumerate_so_codes(
        field, args.n, args.k, census_cap=args.max_census,
        fixed_vectors=fixed, want_codes=args.list is not None)
    if args.list is not None:
        with open(args.list, "w", encoding="utf-8") as fh:
            fh.write("\n".join(symplectic.code_to_text(c) for c in report.codes))
    lines = [f"total={report.total}"]
    obj = {"q": args.q, "n": args.n, "k": args.k, "total": report.total}
    if fixed:
        containing, dual_containing = report.per_vector_counts[fixed[0]]
        lines.append(f"containing={containing}")
        lines.append(f"dual_containing={dual_containing}")
        obj["fix_u"] = fixed[0].render()
        obj["containing"] = containing
        obj["dual_containing"] = dual_containing
    _emit(args, lines, obj)
    return EXIT_OK


def _cmd_search(args) -> int:
    field = _field_from_args(args)
    config = search.SearchConfig(field=field, n=args.n, k=args.k, d=args.d,
                                 trials=args.trials, seed=args.seed,
                                 strategy=args.strategy, mode=args.mode)
    outcome = search.search_witness(config, codeword_cap=args.max_enum)
    found = outcome.found is not None
    lines = [f"found={'true' if found else 'false'}",
             f"trials_used={outcome.trials_used}"]
    obj = {"found": found, "trials_used": outcome.trials_used,
           "mode": outcome.mode, "certified_distance": outcome.certified_distance,
           "verdict": outcome.verdict_context.to_json_dict(), "generators": None}
    if found:
        lines.append(f"certified_distance={outcome.certified_distance}")
        obj["generators"] = [[int(x) for x in row]
                             for row in outcome.found.generators]
        if args.mode == "dual":
            params = quantum.QuantumParams(
                n=args.n, logical=args.n - args.k,
                d=outcome.certified_distance, q=field.q)
            lines.append(f"quantum={params.render()}")
            obj["quantum"] = params.render()
        if args.out:
            symplectic.write_code(outcome.found, args.out)
    lines.append("verdict: " + outcome.verdict_context.text())
    _emit(args, lines, obj)
    return EXIT_OK if found else EXIT_EXHAUSTED


def _cmd_quantum(args) -> int:
    code = symplectic.read_code(getattr(args, "in"))
    params = quantum.to_quantum_params(code, cap=args.max_enum)
    lines = [params.render()]
    obj = {"q": params.q, "n": params.n, "logical": params.logical,
           "d": params.d, "params": params.render()}
    if args.labels:
        labels = quantum.stabilizer_labels(code)
        lines.extend(labels)
        obj["labels"] = labels
    _emit(args, lines, obj)
    return EXIT_OK


def _cmd_asymptotic(args) -> int:
    if args.points < 1:
        raise ValueError("--points must be >= 1")
    rows = []
    for i in range(args.points + 1):
        delta = i / args.points
        rows.append((delta, quantum.asymptotic_rate(args.q, delta).rate))
    csv_text = "delta,rate\n" + "".join(f"{d:.6f},{r:.6f}\n" for d, r in rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
    obj = {"q": args.q, "points": args.points,
           "curve": [[round(d, 6), round(r, 6)] for d, r in rows]}
    lines = [] if args.out else [csv_text.rstrip("\n")]
    if args.delta0:
        d0 = quantum.delta_zero(args.q)
        lines.append(f"delta0={d0:.9f}")
        obj["delta0"] = round(d0, 9)
    _emit(args, lines, obj)
    return EXIT_OK


def _selftest_checks() -> list[tuple[str, bool, str]]:
    checks = []

    def run(name, got, expected):
        checks.append((name, got == expected, f"expected {expected}, got {got}"))

    gf2 = Field(2)
    gf3 = Field(3)
    for n, k, expected in [(2, 1, 15), (2, 2, 15), (3, 3, 135)]:
        total = census.enumerate_so_codes(gf2, n, k).total
        run(f"census q=2 n={n} k={k}", total, expected)
        run(f"closed form q=2 n={n} k={k}",
            counting.count_self_orthogonal(2, n, k), expected)

    u = symplectic.SympVector.parse(gf2, "1,0|0,0")
    run("containing count q=2 n=2 k=2",
        census.oracle_count_containing(gf2, 2, 2, u), 3)
    run("dual-containing count q=2 n=2 k=1",
        census.oracle_count_dual_containing(gf2, 2, 1, u), 7)
    run("dual-containing count q=2 n=2 k=2",
        census.oracle_count_dual_containing(gf2, 2, 2, u), 3)

    run("census q=3 n=2 k=2 (projective convention)",
        census.enumerate_so_codes(gf3, 2, 2).total,
        counting.count_self_orthogonal(3, 2, 2, "projective"))
    run("variant ratio q=3 n=2 k=2",
        counting.count_self_orthogonal(3, 2, 2, "paper"), 80)

    lo = quantum.asymptotic_rate(2, 0.185).rate
    hi = quantum.asymptotic_rate(2, 0.1893).rate
    checks.append(("rate sign bracket at q=2", lo > 0.0 > hi,
                   f"rate(0.185)={lo}, rate(0.1893)={hi}"))
    d0 = quantum.delta_zero(2)
    checks.append(("delta0(2) in [0.188, 0.190]", 0.188 <= d0 <= 0.190,
                   f"delta0={d0}"))
    return checks


def _cmd_selftest(args) -> int:
    checks = _selftest_checks()
    passed = sum(1 for _, ok, _ in checks if ok)
    lines = []
    for name, ok, detail in checks:
        lines.append(f"PASS {name}" if ok else f"FAIL {name} ({detail})")
    lines.append(f"selftest: {passed}/{len(checks)} passed")
    obj = {"passed": passed, "total": len(checks), "ok": passed == len(checks),
           "checks": [{"name": name, "ok": ok} for name, ok, _ in checks]}
    _emit(args, lines, obj)
    return EXIT_OK if passed == len(checks) else EXIT_USAGE


# ---------------------------------------------------------------------------
# parser assembly
# ---------------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="sympgv",
                     description="Symplectic self-orthogonal codes: exact "
                                 "counts, existence bounds, witness search, "
                                 "quantum stabilizer parameters.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true",
                       help="emit one JSON object instead of text")

    p = sub.add_parser("bound", help="evaluate an existence condition exactly")
    p.add_argument("--which", required=True,
                   choices=["primal", "dual", "quantum", "thm34", "cor37", "cor43"],
                   help="condition: code distance (primal/thm34), dual "
                        "distance (dual/cor37), quantum parameters "
                        "(quantum/cor43)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--strict", action="store_true",
                   help="exit 3 when the condition fails")
    add_common(p)
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("count", help="evaluate a counting formula exactly")
    p.add_argument("--what", required=True,
                   choices=["codes", "containing", "dual-containing",
                            "dual-containing-bound", "sphere"])
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int, help="distance (for --what sphere)")
    p.add_argument("--variant", default="paper",
                   choices=["paper", "projective"])
    add_common(p)
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("enumerate",
                       help="exhaustively enumerate self-orthogonal codes")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--modulus", help="comma-separated coefficients, low degree "
                                     "first (extension fields)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--list", metavar="FILE",
                   help="write every code to FILE (sympcode v1 blocks, sorted)")
    p.add_argument("--fix-u", metavar="VEC",
                   help="also count codes containing / dual-containing VEC, "
                        "format 'a1,..,an|b1,..,bn'")
    p.add_argument("--max-census", type=int, default=census.DEFAULT_CENSUS_CAP,
                   help="abort if the census would exceed this many codes")
    p.add_argument("--threads", type=int, default=1,
                   help="cap on parallel workers (current kernels use one)")
    add_common(p)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("search", help="randomized witness search")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--modulus")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", required=True, choices=["primal", "dual"])
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--strategy", default="random", choices=["random", "greedy"])
    p.add_argument("--out", metavar="FILE", help="write the witness code here")
    p.add_argument("--max-enum", type=int, default=symplectic.DEFAULT_CODEWORD_CAP,
                   help="codeword cap for exhaustive distance checks")
    p.add_argument("--threads", type=int, default=1,
                   help="cap on parallel workers (current kernels use one)")
    add_common(p)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("quantum",
                       help="quantum stabilizer parameters of a stored code")
    p.add_argument("--in", required=True, metavar="FILE",
                   help="code file in sympcode v1 format")
    p.add_argument("--labels", action="store_true",
                   help="also print one stabilizer generator label per row")
    p.add_argument("--max-enum", type=int, default=symplectic.DEFAULT_CODEWORD_CAP)
    add_common(p)
    p.set_defaults(func=_cmd_quantum)

    p = sub.add_parser("asymptotic", help="rate-vs-distance lower bound curve")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--points", type=int, required=True,
                   help="emit points+1 rows at delta = i/points")
    p.add_argument("--out", metavar="FILE", help="write CSV here instead of stdout")
    p.add_argument("--delta0", action="store_true",
                   help="also print the zero crossing of the bound")
    add_common(p)
    p.set_defaults(func=_cmd_asymptotic)

    p = sub.add_parser("selftest", help="run the embedded consistency checks")
    add_common(p)
    p.set_defaults(func=_cmd_selftest)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "threads", 1) is not None and getattr(args, "threads", 1) < 1:
            raise ValueError("--threads must be >= 1")
        return args.func(args)
    except (InfeasibleError, CapExceededError) as exc:
        print(f"sympgv: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"sympgv: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
