"""``harmlike`` command line: tables, identity suites, series comparisons, coefficients.

Exit codes: 0 when every check behaves as expected, 1 when some identity check
deviates, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from fractions import Fraction

import numpy as np

from . import verify
from .harmonic import harmonic_like_sequence
from .series import (
    FUNCTION_IDS,
    HARMONIC_SERIES,
    exact_coefficients,
    normalize_function_id,
    reference_value,
    series_value,
)

EXIT_OK, EXIT_DEVIATION, EXIT_USAGE = 0, 1, 2

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(rf"^([+-]?{_NUM})(?:([+-]{_NUM})i)?$")


def parse_complex(text: str) -> complex:
    """Parse ``RE``, ``RE+IMi`` or ``RE-IMi``."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"malformed complex literal {text!r} (use RE, RE+IMi or RE-IMi)")
    return complex(float(m.group(1)), float(m.group(2) or 0.0))


def format_float(x: float, precision: int = 17) -> str:
    """Shortest decimal that round-trips ``x``, using at most ``precision`` significant digits."""
    x = float(x)
    if x == 0:
        return "0"
    for digits in range(1, precision + 1):
        s = format(x, f".{digits}g")
        if float(s) == x:
            return s
    return format(x, f".{precision}g")


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def format_complex(z: complex, precision: int) -> str:
    re_, im = format_float(z.real, precision), format_float(abs(z.imag), precision)
    return f"{re_}{'-' if z.imag < 0 else '+'}{im}i"


class _Writer:
    """Collects records and renders them as CSV or JSON with fixed column order."""

    def __init__(self, columns, fmt: str, precision: int):
        self.columns = columns
        self.fmt = fmt
        self.precision = precision
        self.rows = []

    def add(self, **fields):
        self.rows.append(fields)

    def _cell(self, v):
        if isinstance(v, bool):
            return "true" if v else "false"
        if isinstance(v, float):
            return format_float(v, self.precision)
        if isinstance(v, Fraction):
            return format_rational(v)
        if isinstance(v, complex):
            return format_complex(v, self.precision)
        return str(v)

    def _json_value(self, v):
        if isinstance(v, float):
            return float(format_float(v, self.precision))
        if isinstance(v, (bool, int)):
            return v
        return self._cell(v)

    def render(self) -> str:
        if self.fmt == "json":
            data = [{c: self._json_value(r[c]) for c in self.columns} for r in self.rows]
            return json.dumps(data, indent=2) + "\n"
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.columns)
        for r in self.rows:
            w.writerow([self._cell(r[c]) for c in self.columns])
        return buf.getvalue()


def cmd_table(args) -> tuple[_Writer, int]:
    out = _Writer(("n", "a_re", "a_im", "method", "value_re", "value_im"), args.format, args.precision)
    for n, h in enumerate(harmonic_like_sequence(args.a, args.n_max), start=1):
        out.add(n=n, a_re=args.a.real, a_im=args.a.imag, method="recurrence",
                value_re=h.real, value_im=h.imag)
    return out, EXIT_OK


def cmd_verify(args) -> tuple[_Writer, int]:
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    checks = verify.run_suites(suites, args.n_max)
    out = _Writer(("suite", "key", "lhs", "rhs", "expected", "outcome", "ok"), args.format, args.precision)
    for c in checks:
        out.add(suite=c.suite, key=c.key, lhs=c.lhs, rhs=c.rhs, expected=c.expected,
                outcome=c.outcome, ok=c.ok)
    bad = sum(not c.ok for c in checks)
    out.add(suite="summary", key=f"{len(checks)} checks", lhs="", rhs="", expected="",
            outcome=f"{bad} deviations", ok=bad == 0)
    print(f"harmlike verify: {len(checks)} checks, {bad} deviations", file=sys.stderr)
    return out, EXIT_OK if bad == 0 else EXIT_DEVIATION


def cmd_compare(args) -> tuple[_Writer, int]:
    fid = args.function
    if fid not in HARMONIC_SERIES:
        raise _UsageError(f"compare needs one of {', '.join(HARMONIC_SERIES)}, got {fid!r}")
    if args.z_min > args.z_max:
        raise _UsageError(f"--z-min {args.z_min} exceeds --z-max {args.z_max}")
    out = _Writer(
        ("function_id", "z_re", "z_im", "value_re", "value_im", "reference_re", "reference_im",
         "abs_error", "terms_used", "converged"),
        args.format, args.precision,
    )
    for z in np.linspace(args.z_min, args.z_max, args.steps):
        z = float(z)
        res = series_value(fid, z, args.tol)
        ref = reference_value(fid, z)
        out.add(function_id=fid, z_re=z, z_im=0.0, value_re=res.value.real, value_im=res.value.imag,
                reference_re=ref.real, reference_im=ref.imag, abs_error=abs(res.value - ref),
                terms_used=res.terms_used, converged=res.converged)
    return out, EXIT_OK


def cmd_coeffs(args) -> tuple[_Writer, int]:
    out = _Writer(("function_id", "power", "coefficient", "approx"), args.format, args.precision)
    for power, c in exact_coefficients(args.function, args.n_max).coefficients:
        out.add(function_id=args.function, power=power, coefficient=c, approx=float(c))
    return out, EXIT_OK


class _UsageError(Exception):
    pass


def _function_id(text: str) -> str:
    try:
        return normalize_function_id(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--precision", type=int, default=17, help="significant digits, 1..17")

    parser = argparse.ArgumentParser(prog="harmlike", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="H_n(a) for n = 1..n_max")
    p.add_argument("--a", type=parse_complex, default=complex(0.5))
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(handler=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="run identity suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--n-max", type=int, default=25)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("compare", parents=[common], help="series against reference on a real grid")
    p.add_argument("--function", type=_function_id, default="si2",
                   help=f"one of {', '.join(HARMONIC_SERIES)} (aliases: cossi, coshshi)")
    p.add_argument("--z-min", type=float, default=0.0)
    p.add_argument("--z-max", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=11)
    p.add_argument("--tol", type=float, default=1e-14)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("coeffs", parents=[common], help="exact series coefficients")
    p.add_argument("--function", type=_function_id, default="si2",
                   help=f"one of {', '.join(FUNCTION_IDS)}")
    p.add_argument("--n-max", type=int, default=6)
    p.set_defaults(handler=cmd_coeffs)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if not 1 <= args.precision <= 17:
            raise _UsageError("--precision must lie in 1..17")
        if getattr(args, "n_max", 1) < 1:
            raise _UsageError("--n-max must be >= 1")
        if getattr(args, "steps", 1) < 1:
            raise _UsageError("--steps must be >= 1")
        if not 0.0 < getattr(args, "tol", 0.5) < 1.0:
            raise _UsageError("--tol must lie in (0, 1)")
        out, code = args.handler(args)
    except _UsageError as exc:
        print(f"harmlike {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out.render())
    return code


if __name__ == "__main__":
    sys.exit(main())
