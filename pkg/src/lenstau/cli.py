"""Command-line front end.

Commands: tau-prime, xi, ohtsuki, dedekind, jacobi, gauss, cf, oracle,
verify.  Exact values are printed losslessly (rationals as
numerator/denominator pairs, cyclotomic values as {order, coeffs});
numeric values carry the tolerance in force.  Identical flags produce
byte-identical JSON.

Exit codes: 0 success, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import lens_invariants as li
from . import ohtsuki as oh
from . import rt_oracle as rt
from .cyclotomic import Cyclotomic, gauss_sum
from .number_theory import dedekind_sum, jacobi_symbol

EMBED_TOL = 1e-12  # double-precision embedding error bound at desk scale


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; the CLI contract wants 1."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _complex_dict(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def _rational_pair(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def _emit(record: dict, fmt: str, plain_lines) -> None:
    if fmt == "json":
        print(json.dumps(record, sort_keys=True))
    else:
        for line in plain_lines:
            print(line)


def _plain_cyclotomic(value: Cyclotomic) -> str:
    return f"{value}  (z = exp(2*pi*i/{value.order}))"


def _parse_r_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"cannot parse r list {text!r}")
    if not values:
        raise ValueError("empty r list")
    for r in values:
        if r % 2 == 0 or r <= 1:
            raise ValueError(f"r must be odd and > 1, got {r}")
    return values


# -- commands ----------------------------------------------------------


def cmd_tau_prime(args) -> int:
    L = li.make_lens_space(args.p, args.q)
    result = li.tau_prime(L, args.r)
    numeric = result.value.to_complex()
    record = {
        "p": L.p, "q": L.q, "r": args.r, "c": result.c,
        "branch": result.branch, "eta": result.eta,
        "value": result.value.to_dict(),
        "numeric": _complex_dict(numeric),
        "numeric_tolerance": EMBED_TOL,
    }
    _emit(record, args.format, [
        f"tau'_{args.r}(L({L.p},{L.q}))  [branch {result.branch_label()}, c = {result.c}]",
        f"  exact: {_plain_cyclotomic(result.value)}",
        f"  numeric: {_fmt_float(numeric.real)} + {_fmt_float(numeric.imag)}i"
        f"  (+- {EMBED_TOL:g})",
    ])
    return 0


def cmd_xi(args) -> int:
    L = li.make_lens_space(args.p, args.q)
    value = li.xi_r(L, args.r)
    numeric = value.to_complex()
    record = {
        "p": L.p, "q": L.q, "r": args.r,
        "value": value.to_dict(),
        "numeric": _complex_dict(numeric),
        "numeric_tolerance": EMBED_TOL,
    }
    _emit(record, args.format, [
        f"xi_{args.r}(L({L.p},{L.q}), e_{args.r})",
        f"  exact: {_plain_cyclotomic(value)}",
        f"  numeric: {_fmt_float(numeric.real)} + {_fmt_float(numeric.imag)}i"
        f"  (+- {EMBED_TOL:g})",
    ])
    return 0


def cmd_ohtsuki(args) -> int:
    L = li.make_lens_space(args.p, args.q)
    series = oh.ohtsuki_tau(L, args.terms)
    record = {
        "p": L.p, "q": L.q,
        "lambda": [_rational_pair(c) for c in series.coeffs],
    }
    lines = [f"tau(L({L.p},{L.q})) in powers of h = t - 1:"]
    lines += [f"  lambda_{n} = {c}" for n, c in enumerate(series.coeffs)]
    _emit(record, args.format, lines)
    return 0


def cmd_dedekind(args) -> int:
    value = dedekind_sum(args.q, args.p)
    record = {"q": args.q, "p": args.p, "value": _rational_pair(value)}
    _emit(record, args.format, [f"s({args.q},{args.p}) = {value}"])
    return 0


def cmd_jacobi(args) -> int:
    value = jacobi_symbol(args.a, args.n)
    record = {"a": args.a, "n": args.n, "value": value}
    _emit(record, args.format, [f"({args.a}|{args.n}) = {value}"])
    return 0


def cmd_gauss(args) -> int:
    value = gauss_sum(args.c)
    numeric = value.to_complex()
    record = {
        "c": args.c,
        "value": value.to_dict(),
        "numeric": _complex_dict(numeric),
        "numeric_tolerance": EMBED_TOL,
    }
    _emit(record, args.format, [
        f"gauss_sum({args.c}) = epsilon({args.c}) * sqrt({args.c})",
        f"  exact: {_plain_cyclotomic(value)}",
        f"  numeric: {_fmt_float(numeric.real)} + {_fmt_float(numeric.imag)}i",
    ])
    return 0


def cmd_cf(args) -> int:
    pres = rt.continued_fraction(args.p, args.q)
    record = {"p": args.p, "q": args.q, "framings": list(pres.framings)}
    _emit(record, args.format, [
        f"{args.p}/{args.q} = {list(pres.framings)} (negative continued fraction)",
    ])
    return 0


def cmd_oracle(args) -> int:
    pres = rt.continued_fraction(args.p, args.q)
    if args.kind == "so3":
        value = rt.so3_invariant(pres, args.r)
    else:
        value = rt.rt_invariant(pres, args.r)
    record = {
        "p": args.p, "q": args.q, "r": args.r, "kind": args.kind,
        "framings": list(pres.framings),
        "value": _complex_dict(value),
    }
    _emit(record, args.format, [
        f"{args.kind} invariant of L({args.p},{args.q}) at r = {args.r} "
        f"(chain {list(pres.framings)}):",
        f"  {_fmt_float(value.real)} + {_fmt_float(value.imag)}i",
    ])
    return 0


_CONVENTION_NOTE = (
    "oracle: S_jk ~ sin(pi*j*k/r), twists exp(i*pi*(n^2-1)/(2r)), "
    "anomaly = Gauss-sum phase; bracket signs (-1,-1) [oracle-calibrated]"
)


def cmd_verify(args) -> int:
    r_values = _parse_r_list(args.r)
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    records = rt.sweep_verify(args.max_p, r_values, args.tolerance, jobs=jobs)
    summary = rt.summarize(records)
    record = {
        "max_p": args.max_p,
        "r_values": r_values,
        "tolerance": args.tolerance,
        "convention": _CONVENTION_NOTE,
        **summary,
    }
    if args.per_case:
        record["cases"] = [rec.to_dict() for rec in records]
    if args.sign_study:
        study = rt.bracket_sign_study(min(args.max_p, 10),
                                      tuple(r_values), args.tolerance)
        record["sign_study"] = {
            f"({s12},{srest})": stats for (s12, srest), stats in study.items()
        }
    lines = [
        f"verify sweep: p <= {args.max_p}, r in {r_values}, "
        f"tolerance {args.tolerance:g}",
        f"  convention: {_CONVENTION_NOTE}",
        f"  cases: {summary['total']}",
        f"  branch tallies: {summary['branch_counts']}",
        f"  matches: {summary['match_counts']} (kind: {summary['match_kind']})",
        f"  worst |error|: {_fmt_float(summary['worst_abs_error'])}",
    ]
    if args.per_case:
        for rec in records:
            lines.append(
                f"    L({rec.p},{rec.q}) r={rec.r}: {rec.branch:12s} "
                f"{rec.match:9s} err {_fmt_float(rec.abs_error)}")
    if args.sign_study:
        lines.append("  bracket sign study (CaseTwo instances):")
        for key, stats in record["sign_study"].items():
            lines.append(f"    signs {key}: {stats}")
    _emit(record, args.format, lines)
    return 0 if summary["consistent"] else 2


def _add_format(p: _Parser) -> None:
    p.add_argument("--format", choices=("plain", "json"), default="plain")


def build_parser() -> _Parser:
    parser = _Parser(prog="lenstau", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tau-prime", help="exact SO(3) invariant tau'_r")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_tau_prime)

    p = sub.add_parser("xi", help="exact invariant xi_r at e_r")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("ohtsuki", help="Ohtsuki series coefficients")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--terms", type=int, default=16)
    _add_format(p)
    p.set_defaults(func=cmd_ohtsuki)

    p = sub.add_parser("dedekind", help="Dedekind sum s(q,p)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_dedekind)

    p = sub.add_parser("jacobi", help="Jacobi symbol (a|n)")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_jacobi)

    p = sub.add_parser("gauss", help="quadratic Gauss sum, exact")
    p.add_argument("--c", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("cf", help="negative continued fraction of p/q")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_cf)

    p = sub.add_parser("oracle", help="numeric invariant from surgery data")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--kind", choices=("so3", "rt"), default="so3")
    _add_format(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="formula-vs-oracle sweep")
    p.add_argument("--max-p", type=int, required=True, dest="max_p")
    p.add_argument("--r", type=str, required=True,
                   help="comma-separated odd orders, e.g. 3,5,7,9")
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.add_argument("--jobs", type=int, default=0,
                   help="worker processes (default: available parallelism)")
    p.add_argument("--per-case", action="store_true")
    p.add_argument("--sign-study", action="store_true",
                   help="also compare all bracket sign readings")
    _add_format(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        _validate(args)
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"lenstau: error: {exc}", file=sys.stderr)
        return 1


def _validate(args) -> None:
    if getattr(args, "r", None) is not None and isinstance(args.r, int):
        if args.command in ("tau-prime", "xi") and (args.r % 2 == 0 or args.r <= 1):
            raise ValueError(f"r must be odd and > 1, got {args.r}")
        if args.command == "oracle":
            if args.r < 3:
                raise ValueError(f"r must be >= 3, got {args.r}")
            if args.kind == "so3" and args.r % 2 == 0:
                raise ValueError(f"so3 oracle needs odd r, got {args.r}")
    if getattr(args, "terms", None) is not None and args.terms < 1:
        raise ValueError(f"--terms must be >= 1, got {args.terms}")
    if getattr(args, "max_p", None) is not None and args.max_p < 1:
        raise ValueError(f"--max-p must be >= 1, got {args.max_p}")
    if getattr(args, "tolerance", None) is not None and not args.tolerance > 0:
        raise ValueError("--tolerance must be positive")


if __name__ == "__main__":
    sys.exit(main())
