"""Command-line interface for the nested evaluators and their diagnostics.

Output is deterministic: fixed 15-significant-digit formatting, complex
values as a+bi / a-bi with no spaces, zeros normalized to "0".  Exit
codes: 0 success, 2 argument or validation error, 3 numeric error
(overflow or pole).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .branches import gray_signs
from .core import Scalar
from .expand import expand_nested_cos
from .verify import (
    FUNCTIONS,
    converge,
    eval_report,
    reproduce_table1,
    reproduce_table2,
    sweep_branches,
)

__all__ = ["main", "parse_scalar", "fmt_scalar"]

_UNSIGNED = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"


def parse_scalar(text: str) -> Scalar:
    """Parse 'a', 'ai', 'a+bi', 'a-bi' (decimal or scientific) to a scalar."""
    s = text.strip()
    if re.fullmatch(rf"[+-]?{_UNSIGNED}", s):
        return float(s)
    m = re.fullmatch(rf"([+-]?{_UNSIGNED}|[+-]?)i", s)
    if m:
        return complex(0.0, _imag_part(m.group(1)))
    m = re.fullmatch(rf"([+-]?{_UNSIGNED})([+-](?:{_UNSIGNED})?)i", s)
    if m:
        return complex(float(m.group(1)), _imag_part(m.group(2)))
    raise ValueError(
        f"could not parse number {text!r}; expected forms like "
        "2, -0.5, 1e-3, 2i, -i, 2+3i")


def _imag_part(g: str) -> float:
    if g in ("", "+"):
        return 1.0
    if g == "-":
        return -1.0
    return float(g)


def fmt_real(x: float) -> str:
    if x == 0.0:
        return "0"
    return f"{x:.15g}"


def fmt_scalar(v: Scalar) -> str:
    """15-significant-digit text; complex as a+bi/a-bi, zero parts dropped."""
    if isinstance(v, complex):
        if v.imag == 0.0:
            return fmt_real(v.real)
        imag = fmt_real(abs(v.imag)) + "i"
        if v.real == 0.0:
            return "-" + imag if v.imag < 0.0 else imag
        sign = "-" if v.imag < 0.0 else "+"
        return f"{fmt_real(v.real)}{sign}{imag}"
    return fmt_real(v)


def _parse_depths(text: str) -> list[int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if hi < lo:
            raise ValueError(f"empty depth range {text!r}")
        return list(range(lo, hi + 1))
    if re.fullmatch(r"\d+", text):
        return [int(text)]
    raise ValueError(f"could not parse depth range {text!r}; use forms like 4..10")


def _cmd_eval(args: argparse.Namespace) -> None:
    z = parse_scalar(args.arg)
    r = eval_report(args.fn, z, depth=args.depth, seed_order=args.seed_order,
                    branch=args.branch, allow_deep=args.allow_deep)
    if args.as_json:
        print(json.dumps({
            "input": fmt_scalar(r.input),
            "value": fmt_scalar(r.value),
            "oracle": fmt_scalar(r.oracle_value),
            "abs_error": float(f"{r.abs_error:.15g}"),
            "rel_error": float(f"{r.rel_error:.15g}"),
            "depth": r.depth,
            "seed_order": r.seed_order,
            "branch": r.branch,
        }))
        return
    print(f"value {fmt_scalar(r.value)}")
    print(f"oracle {fmt_scalar(r.oracle_value)}")
    print(f"abs_error {fmt_real(r.abs_error)}")
    print(f"rel_error {fmt_real(r.rel_error)}")


def _cmd_converge(args: argparse.Namespace) -> None:
    z = parse_scalar(args.arg)
    rows = converge(args.fn, z, _parse_depths(args.depths),
                    seed_order=args.seed_order, allow_deep=args.allow_deep)
    print("depth,value,abs_error,error_ratio")
    for row in rows:
        print(f"{row.depth},{fmt_scalar(row.value)},"
              f"{fmt_real(row.abs_error)},{fmt_real(row.error_ratio)}")


def _cmd_sweep(args: argparse.Namespace) -> None:
    rows = sweep_branches(args.kmax, args.step, args.depth)
    print("k,extracted,abs_dev")
    for k, extracted, abs_dev in rows:
        print(f"{k},{fmt_real(extracted)},{fmt_real(abs_dev)}")


def _cmd_table1(args: argparse.Namespace) -> None:
    print(f"{'signs':<8}{'value':<20}limit")
    for row in reproduce_table1(args.depth):
        limit = f"{2 * row.k + 1}pi/2" if row.k else "pi/2"
        print(f"{row.pattern:<8}{fmt_real(row.value):<20}{limit}")


def _cmd_table2(args: argparse.Namespace) -> None:
    print(f"{'k':<4}{'acos(1)/pi':<20}acos(-1)/pi")
    for row in reproduce_table2(args.depth):
        print(f"{row.k:<4}{fmt_real(row.at_plus_one):<20}"
              f"{fmt_real(row.at_minus_one)}")


def _cmd_expand(args: argparse.Namespace) -> None:
    variant = "hyperbolic" if args.hyperbolic else "circular"
    print("j,coefficient")
    for j, c in enumerate(expand_nested_cos(args.depth, variant).coeffs):
        print(f"{j},{c}")


def _cmd_signs(args: argparse.Namespace) -> None:
    signs = gray_signs(args.branch, args.width)
    if not args.inner_first:
        signs = tuple(reversed(signs))
    print("".join("+" if s > 0 else "-" for s in signs))


def _accept_negative_scalars(parser: argparse.ArgumentParser) -> None:
    # Let values with a leading minus (-2+3i, -i, -1e-3) parse as
    # positionals; every option here is --long so this is unambiguous.
    # Should this private knob vanish, "--" before the value still works.
    try:
        parser._negative_number_matcher = re.compile(r"^-[\d.i]")
    except AttributeError:
        pass


def _add_depth(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--depth", type=int, default=10,
                        help="recursion depth n (default 10)")
    parser.add_argument("--allow-deep", action="store_true",
                        help="lift the depth cap of 30 (precision degrades)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nestrad",
        description="Nested square-root and doubled-angle evaluation of "
                    "elementary functions, with oracle comparison.")
    _accept_negative_scalars(parser)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one function against its oracle")
    p.add_argument("fn", choices=sorted(FUNCTIONS))
    p.add_argument("arg", help="argument: a, ai, a+bi, a-bi")
    _add_depth(p)
    p.add_argument("--seed-order", type=int, default=2, dest="seed_order",
                   help="series terms in the seed, 1..4 (default 2)")
    p.add_argument("--branch", type=int, default=0,
                   help="branch index for acos/acosh (default 0)")
    p.add_argument("--json", action="store_true", dest="as_json",
                   help="emit a single-line JSON report")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("converge", help="error table over a depth range")
    p.add_argument("fn", choices=sorted(FUNCTIONS))
    p.add_argument("arg")
    p.add_argument("--depths", required=True, help="range A..B or single depth")
    p.add_argument("--seed-order", type=int, default=2, dest="seed_order")
    p.add_argument("--allow-deep", action="store_true")
    p.set_defaults(handler=_cmd_converge)

    p = sub.add_parser("sweep", help="branch sweep of the inverse cosine of 0")
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--step", type=int, default=1)
    _add_depth(p)
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("table1", help="branches of the inverse cosine of 0")
    _add_depth(p)
    p.set_defaults(handler=_cmd_table1)

    p = sub.add_parser("table2", help="branches at +-1 divided by pi")
    _add_depth(p)
    p.set_defaults(handler=_cmd_table2)

    p = sub.add_parser("expand", help="exact rational Maclaurin coefficients")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--hyperbolic", action="store_true")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("signs", help="Gray-code sign pattern of a branch")
    p.add_argument("--branch", type=int, required=True)
    p.add_argument("--width", type=int, required=True)
    p.add_argument("--inner-first", action="store_true", dest="inner_first",
                   help="print innermost radical first (default outermost)")
    p.set_defaults(handler=_cmd_signs)

    for action in sub.choices.values():
        _accept_negative_scalars(action)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OverflowError, ZeroDivisionError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return 3
    return 0
