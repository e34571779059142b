"""Command-line front end: ``hcf <command> ...``.

Exit status: 0 success, 1 usage or precondition error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import cf as cfmod
from .exact import HCFError, format_rational, parse_rational, to_decimal
from .genfun import binomial_series, genfun, limit_profile
from .inverse import invert
from .lambdas import cf_product, lambda_matrix
from .maps import cf_vector, enclose, max_depth_from_env
from .verify import SUITES, run_suite

DECIMAL_NOTE = (
    "Decimal inputs denote the exact rational they spell (1.75 is 7/4), "
    "never an approximation of some irrational."
)
VALUE_HELP = "value: p/q, integer, decimal, [c1,c2,...], [c1,...;(p1,...)], phi, sqrt:D or e"


class UsageError(HCFError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except HCFError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _real(text: str):
    try:
        return cfmod.parse_real(text)
    except HCFError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


_VALUE_FLAGS = {"--x", "--y", "--a", "--t", "--eps", "--i", "--m", "--seed"}


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite ``--x -4/7`` as ``--x=-4/7``; argparse would read ``-4/7`` as a flag."""
    out: list[str] = []
    for tok in argv:
        if out and out[-1] in _VALUE_FLAGS and tok.startswith("-") and not tok.startswith("--"):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="hcf",
        description="Exact higher continued fractions r_{i,m}(x). " + DECIMAL_NOTE,
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    common.add_argument("--precision", type=int, default=12, help="decimal digits in renderings")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="exact CF_m(x) for rational x")
    p.add_argument("--x", type=_real, required=True, help=VALUE_HELP)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--i", type=int, help="print only r_{i,m}")

    p = sub.add_parser("enclose", parents=[common], help="rational interval around r_{i,m}(x) for irrational x")
    p.add_argument("--x", type=_real, required=True, help=VALUE_HELP)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--eps", type=_rational, required=True)

    p = sub.add_parser("invert", parents=[common], help="x >= 0 with |r_{i,m}(x) - y| <= eps")
    p.add_argument("--y", type=_rational, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--eps", type=_rational, required=True)

    p = sub.add_parser("genfun", parents=[common], help="F_m(x,t) = sum r_{i,m}(x) t^i")
    p.add_argument("--x", type=_real, required=True, help=VALUE_HELP)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--t", type=_rational)

    p = sub.add_parser("limit", parents=[common], help="r_{i,m}(x) for growing m against its limit")
    p.add_argument("--x", type=_real, required=True, help=VALUE_HELP)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--mmax", type=int, required=True)

    p = sub.add_parser("matrix", parents=[common], help="Lambda_m(a) or the product along the CF of x")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--a", type=int)
    group.add_argument("--x", type=_real, help=VALUE_HELP)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("verify", parents=[common], help="run seeded property suites")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    return parser


# --- rendering -------------------------------------------------------------------------


def _num(x: Fraction, prec: int) -> dict:
    return {"value": format_rational(x), "decimal": to_decimal(x, prec)}


def _emit_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _emit_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _matrix_text(M) -> str:
    width = max(len(str(v)) for row in M for v in row)
    return "".join(" ".join(str(v).rjust(width) for v in row) + "\n" for row in M)


def cmd_eval(args) -> str:
    x = cfmod.as_rational(args.x)
    v = cf_vector(x, args.m)
    prec = args.precision
    indices = range(args.m, -1, -1)
    if args.i is not None:
        if not 0 <= args.i <= args.m:
            raise UsageError(f"--i must lie in [0, {args.m}]")
        indices = [args.i]
    if args.format == "json":
        return _emit_json(
            {
                "x": format_rational(x),
                "cf": list(cfmod.expand(x).digits),
                "m": args.m,
                "decimal_precision": prec,
                "r": [{"i": i, **_num(v[i], prec)} for i in indices],
            }
        )
    if args.format == "csv":
        return _emit_csv(("i", "value_p/q", "value_decimal"), [(i, format_rational(v[i]), to_decimal(v[i], prec)) for i in indices])
    lines = [f"x = {format_rational(x)} = {cfmod.expand(x)}"]
    lines += [f"r_{{{i},{args.m}}} = {format_rational(v[i])}  ~ {to_decimal(v[i], prec)}" for i in indices]
    return "\n".join(lines) + "\n"


def cmd_enclose(args) -> str:
    e = enclose(args.x, args.i, args.m, args.eps, max_depth=max_depth_from_env())
    prec = args.precision
    if args.format == "json":
        return _emit_json(
            {
                "i": args.i,
                "m": args.m,
                "eps": format_rational(args.eps),
                "decimal_precision": prec,
                "lo": _num(e.lo, prec),
                "hi": _num(e.hi, prec),
                "width": _num(e.width, prec),
                "witness_depth": e.witness_depth,
            }
        )
    if args.format == "csv":
        return _emit_csv(
            ("lo_p/q", "lo_decimal", "hi_p/q", "hi_decimal", "witness_depth"),
            [(format_rational(e.lo), to_decimal(e.lo, prec), format_rational(e.hi), to_decimal(e.hi, prec), e.witness_depth)],
        )
    return (
        f"lo = {format_rational(e.lo)}  ~ {to_decimal(e.lo, prec)}\n"
        f"hi = {format_rational(e.hi)}  ~ {to_decimal(e.hi, prec)}\n"
        f"width <= {format_rational(args.eps)} (depth {e.witness_depth})\n"
    )


def cmd_invert(args) -> str:
    res = invert(args.y, args.i, args.m, args.eps)
    prec = args.precision
    if args.format == "json":
        return _emit_json(
            {
                "y": format_rational(args.y),
                "i": args.i,
                "m": args.m,
                "eps": format_rational(args.eps),
                "decimal_precision": prec,
                "x_hat": _num(res.x_hat, prec),
                "residual": _num(res.residual, prec),
                "iterations": res.iterations,
                "exact": res.exact,
            }
        )
    if args.format == "csv":
        return _emit_csv(
            ("x_hat_p/q", "x_hat_decimal", "residual_p/q", "iterations"),
            [(format_rational(res.x_hat), to_decimal(res.x_hat, prec), format_rational(res.residual), res.iterations)],
        )
    return (
        f"x_hat = {format_rational(res.x_hat)}  ~ {to_decimal(res.x_hat, prec)}\n"
        f"residual = {format_rational(res.residual)}  ~ {to_decimal(res.residual, prec)}\n"
        f"iterations = {res.iterations}{' (exact hit)' if res.exact else ''}\n"
    )


def cmd_genfun(args) -> str:
    x = cfmod.as_rational(args.x)
    F = genfun(x, args.m)
    prec = args.precision
    extra = {}
    if args.t is not None:
        value = F(args.t)
        extra["F"] = value
        if x >= 1:
            series = binomial_series(args.t, math.ceil(x))
            extra["series"] = series
            extra["gap"] = series - value
        elif not -1 < args.t < 1:
            raise UsageError("--t must satisfy |t| < 1")
    if args.format == "json":
        out = {
            "x": format_rational(x),
            "m": args.m,
            "decimal_precision": prec,
            "coefficients": [_num(c, prec) for c in F.coefficients],
        }
        if args.t is not None:
            out["t"] = format_rational(args.t)
            out.update({k: _num(v, prec) for k, v in extra.items()})
        return _emit_json(out)
    if args.format == "csv":
        rows = [(k, format_rational(c), to_decimal(c, prec)) for k, c in enumerate(F.coefficients)]
        return _emit_csv(("degree", "coefficient_p/q", "coefficient_decimal"), rows)
    lines = [f"F_{args.m}({format_rational(x)}, t) = {F}"]
    for k, v in extra.items():
        lines.append(f"{k} = {format_rational(v)}  ~ {to_decimal(v, prec)}")
    return "\n".join(lines) + "\n"


def cmd_limit(args) -> str:
    x = cfmod.as_rational(args.x)
    rows = limit_profile(x, args.i, args.mmax)
    prec = args.precision
    if args.format == "json":
        return _emit_json(
            {
                "x": format_rational(x),
                "i": args.i,
                "target": rows[0].target,
                "decimal_precision": prec,
                "profile": [{"m": row.m, **_num(row.value, prec)} for row in rows],
            }
        )
    table = [(row.m, format_rational(row.value), to_decimal(row.value, prec), row.target) for row in rows]
    if args.format == "csv":
        return _emit_csv(("m", "value_p/q", "value_decimal", "target"), table)
    return "".join(f"m={m:<4} {v:<30} {d}  -> {t}\n" for m, v, d, t in table)


def cmd_matrix(args) -> str:
    if args.a is not None:
        M = lambda_matrix(args.m, args.a)
    else:
        M = cf_product(args.x.cf if isinstance(args.x, cfmod.Finite) else _reject_irrational(), args.m)
    if args.format == "json":
        return _emit_json([list(row) for row in M])
    if args.format == "csv":
        return _emit_csv([f"c{j + 1}" for j in range(len(M))], M)
    return _matrix_text(M)


def _reject_irrational():
    raise UsageError("matrix needs a rational value or finite digit list")


def cmd_verify(args) -> tuple[str, int]:
    report = run_suite(args.suite, samples=args.samples, seed=args.seed)
    if args.format == "json":
        text = _emit_json(report.as_dict())
    elif args.format == "csv":
        text = _emit_csv(
            ("property", "samples", "failures", "passed", "counterexample"),
            [(p.name, p.samples, p.failures, p.passed, p.counterexample or "") for p in report.properties],
        )
    else:
        lines = [
            f"{'PASS' if p.passed else 'FAIL'}  {p.name}  ({p.samples} samples)"
            + (f"  first counterexample: {p.counterexample}" if p.counterexample else "")
            for p in report.properties
        ]
        lines.append(f"suite={args.suite} seed={args.seed}: {'all passed' if report.passed else 'FAILURES'}")
        text = "\n".join(lines) + "\n"
    return text, 0 if report.passed else 2


COMMANDS = {
    "eval": cmd_eval,
    "enclose": cmd_enclose,
    "invert": cmd_invert,
    "genfun": cmd_genfun,
    "limit": cmd_limit,
    "matrix": cmd_matrix,
}


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(_attach_negative_values(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            text, status = cmd_verify(args)
        else:
            text, status = COMMANDS[args.command](args), 0
    except HCFError as exc:
        print(f"hcf {args.command}: error: {exc}", file=stderr)
        return 1
    stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
