"""Command-line interface.

Exit codes: 0 success, 1 input error, 2 enumeration guard exceeded,
3 internal invariant violation (including a failed ``selftest``).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from raagkit.enumeration import DEFAULT_GUARD
from raagkit.errors import GraphError, InvariantViolation, RaagError
from raagkit.io import FORMATS, load_graph
from raagkit.polyseries import DEFAULT_KMAX
from raagkit.report import DEFAULT_DMAX, build_report, compare, format_compare, rescaling_block, resonance_block
from raagkit.resonance import (
    Character,
    kernel_finitely_generated,
    resonance_components,
    resonance_contains_combinatorial,
    sigma1_contains,
)
from raagkit.selftest import run_selftest


def parse_chi(text: str) -> dict[str, Fraction]:
    """``v1=r1,v2=r2,...`` with integer or ``p/q`` values."""
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        label, sep, value = item.partition("=")
        if not sep:
            raise GraphError(f"character entry {item!r} is not label=value")
        try:
            out[label.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise GraphError(f"character value {value!r} is not an exact rational") from None
    return out


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _enum(args) -> dict:
    return {"guard": args.guard, "allow_large": args.allow_large, "workers": args.workers}


def cmd_invariants(args) -> None:
    g = load_graph(args.graph, args.format)
    report = build_report(g, args.kmax, args.dmax, args.q, **_enum(args))
    sys.stdout.write(report.to_text())


def cmd_resonance(args) -> None:
    g = load_graph(args.graph, args.format)
    sys.stdout.write(json.dumps(resonance_block(g, **_enum(args)), sort_keys=True, indent=2) + "\n")


def cmd_bns(args) -> None:
    g = load_graph(args.graph, args.format)
    chi = Character.from_labels(g, parse_chi(args.chi))
    if chi.is_zero():
        raise GraphError("the zero character is excluded")
    desc = resonance_components(g, **_enum(args))
    print(f"sigma1: {_yes(sigma1_contains(g, chi))}")
    print(f"resonance: {_yes(resonance_contains_combinatorial(g, chi, desc))}")
    if chi.is_integral():
        print(f"kernel finitely generated: {_yes(kernel_finitely_generated(g, chi, desc))}")
    else:
        print("kernel finitely generated: n/a (character not integral)")


def cmd_rescale(args) -> None:
    g = load_graph(args.graph, args.format)
    if args.q < 1:
        raise GraphError("--q must be at least 1")
    block = rescaling_block(g, args.q, args.kmax, args.dmax)
    sys.stdout.write(json.dumps(block, sort_keys=True, indent=2) + "\n")


def cmd_compare(args) -> None:
    g1 = load_graph(args.graph1, args.format)
    g2 = load_graph(args.graph2, args.format)
    sys.stdout.write(format_compare(compare(g1, g2, **_enum(args))))


def cmd_selftest(args) -> None:
    failed = 0
    for name, ok in run_selftest():
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
        failed += not ok
    if failed:
        raise InvariantViolation(f"{failed} selftest check(s) failed")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="raagkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="graph input format (default: detect)")
    common.add_argument("--guard", type=_positive, default=DEFAULT_GUARD, help="max vertices for subset enumeration")
    common.add_argument("--allow-large", action="store_true", help="enumerate beyond the guard")
    common.add_argument("--workers", type=_positive, default=1, help="processes for subset enumeration")

    p = sub.add_parser("invariants", parents=[common], help="full invariant report")
    p.add_argument("graph")
    p.add_argument("--kmax", type=_positive, default=DEFAULT_KMAX)
    p.add_argument("--dmax", type=_positive, default=DEFAULT_DMAX)
    p.add_argument("--q", type=_positive, default=None, help="also include the rescaling block for this q")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("resonance", parents=[common], help="resonance components and fingerprint")
    p.add_argument("graph")
    p.set_defaults(func=cmd_resonance)

    p = sub.add_parser("bns", parents=[common], help="BNS / resonance membership of a character")
    p.add_argument("graph")
    p.add_argument("--chi", required=True, help="v1=r1,v2=r2,... (unlisted vertices are 0)")
    p.set_defaults(func=cmd_bns)

    p = sub.add_parser("rescale", parents=[common], help="homotopy ranks of the higher cubical complex")
    p.add_argument("graph")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--kmax", type=_positive, default=DEFAULT_KMAX)
    p.add_argument("--dmax", type=_positive, default=DEFAULT_DMAX)
    p.set_defaults(func=cmd_rescale)

    p = sub.add_parser("compare", parents=[common], help="compare two graphs' invariants")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("selftest", help="check known values")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except RaagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
