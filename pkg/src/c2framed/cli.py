"""Command-line front end.

    c2framed eval --grade R "S2s[0]"
    c2framed cobordant --grade sigma "2*S1s[1]" "S1s[2]"
    c2framed normalize --grade R "C2xS1[1] + S1[0]"
    c2framed rewrite --grade R "S2s[3]"
    c2framed verify --samples 1024 --tol 1e-9

Exit codes: 0 success/true, 1 false or failed check, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import C2FramedError
from .grading import FramingGrade
from .numeric import DEFAULT_SAMPLES, DEFAULT_TOL, run_suite
from .parser import format_manifold, parse_manifold
from .ptmap import is_cobordant, pt_image, rewrite_antipodal


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def cmd_eval(args) -> int:
    for text in args.expr:
        image = pt_image(parse_manifold(text, args.grade))
        if args.json:
            _emit(image.to_json())
        else:
            print(image)
    return 0


def cmd_cobordant(args) -> int:
    left = parse_manifold(args.left, args.grade)
    right = parse_manifold(args.right, args.grade)
    result = is_cobordant(left, right)
    if args.json:
        _emit({"cobordant": result, "left": pt_image(left).to_json(), "right": pt_image(right).to_json()})
    else:
        verdict = "cobordant" if result else "not cobordant"
        print(f"{verdict}: {pt_image(left)} vs {pt_image(right)}")
    return 0 if result else 1


def _print_manifold(m, as_json: bool) -> None:
    text = format_manifold(m)
    if as_json:
        _emit({"grade": str(m.grade), "manifold": text})
    else:
        print(text)


def cmd_normalize(args) -> int:
    _print_manifold(parse_manifold(args.expr, args.grade), args.json)
    return 0


def cmd_rewrite(args) -> int:
    if args.grade is not FramingGrade.TRIVIAL_R:
        raise _UsageError("rewrite applies to R-framed manifolds only (--grade R)")
    _print_manifold(rewrite_antipodal(parse_manifold(args.expr, args.grade)), args.json)
    return 0


def cmd_verify(args) -> int:
    reports = run_suite(num_samples=args.samples, tol=args.tol)
    for r in reports:
        if args.json:
            _emit(r.to_json())
        else:
            print(r)
    return 0 if all(r.passed for r in reports) else 1


class _UsageError(Exception):
    pass


def _grade(text: str) -> FramingGrade:
    try:
        return FramingGrade.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _sample_count(text: str) -> int:
    value = int(text)
    if value < 8:
        raise argparse.ArgumentTypeError("need at least 8 samples")
    return value


def _tolerance(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError("tolerance must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="c2framed",
        description="Evaluate the C2-equivariant Pontryagin-Thom map on framed 1-manifolds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def manifold_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--grade", type=_grade, required=True, metavar="R|sigma", help="framing grade")
        p.add_argument("--json", action="store_true", help="one JSON object per line")
        p.set_defaults(func=func)
        return p

    p = manifold_command("eval", cmd_eval, "print the Pontryagin-Thom image")
    p.add_argument("expr", nargs="+", help='manifold expression, e.g. "S2s[0] + C2xS1[1]"')
    p = manifold_command("cobordant", cmd_cobordant, "exit 0 if cobordant, 1 otherwise")
    p.add_argument("left")
    p.add_argument("right")
    p = manifold_command("normalize", cmd_normalize, "print the canonical form")
    p.add_argument("expr")
    p = manifold_command("rewrite", cmd_rewrite, "replace S2s[n] by S2s[0] + C2xS1[n]")
    p.add_argument("expr")

    p = sub.add_parser("verify", help="run the numeric verification suite")
    p.add_argument("--samples", type=_sample_count, default=DEFAULT_SAMPLES, help="grid size (default %(default)s)")
    p.add_argument("--tol", type=_tolerance, default=DEFAULT_TOL, help="tolerance (default %(default)g)")
    p.add_argument("--json", action="store_true", help="one JSON object per line")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (C2FramedError, _UsageError) as exc:
        print(f"c2framed {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
