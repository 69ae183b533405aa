"""Command-line front end.

Subcommands: lfsr, shrink, ca run, ca charpoly, linearize, bm, attack.
Bit strings are index-0-leftmost, polynomials ascending-coefficient;
every printed canonical value parses back losslessly.  Counts are
mandatory so identical invocations always print identical output.

Exit status: 0 on success, 1 when an attack verdict is false, 2 on
usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .analysis import berlekamp_massey, verify_linearization
from .automata import RuleVector, ca_char_poly, ca_run, state_from_bits, state_to_bits
from .generators import Lfsr, ShrinkingGenerator, format_bits, parse_bits
from .gf2poly import Gf2Poly
from .linearizer import linearize_shrinking_generator

__all__ = ["main"]


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="shrinkca",
        description="Simulate, linearize, and verify shrinking generators.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p = sub.add_parser("lfsr", help="emit a shift-register stream")
    p.add_argument("--poly", required=True, help="characteristic polynomial")
    p.add_argument("--seed", required=True, help="first degree-many output bits")
    p.add_argument("--count", type=int, required=True, help="bits to emit")
    add_format(p)

    p = sub.add_parser("shrink", help="emit a shrunken keystream")
    p.add_argument("--p1", required=True, help="control polynomial")
    p.add_argument("--s1", required=True, help="control seed")
    p.add_argument("--p2", required=True, help="data polynomial")
    p.add_argument("--s2", required=True, help="data seed")
    p.add_argument("--count", type=int, required=True, help="bits to emit")
    add_format(p)

    ca = sub.add_parser("ca", help="hybrid 90/150 automaton tools")
    casub = ca.add_subparsers(dest="ca_command", required=True)
    p = casub.add_parser("run", help="print the state orbit")
    p.add_argument("--rules", required=True, help="rule string, 0=90 1=150")
    p.add_argument("--state", required=True, help="initial cells, cell 1 leftmost")
    p.add_argument("--steps", type=int, required=True, help="steps to advance")
    add_format(p)
    p = casub.add_parser("charpoly", help="characteristic polynomial of the rules")
    p.add_argument("--rules", required=True, help="rule string, 0=90 1=150")
    add_format(p)

    p = sub.add_parser("linearize", help="synthesize the automaton pair")
    p.add_argument("--l1", type=int, required=True, help="control register length")
    p.add_argument("--p2", required=True, help="data polynomial (primitive)")
    add_format(p)

    p = sub.add_parser("bm", help="linear complexity of a bit stream")
    p.add_argument("--seq", help="bit string to analyze")
    p.add_argument("--seq-file", help="file holding a [01\\s]+ stream")
    add_format(p)

    p = sub.add_parser("attack", help="full linearization verdict")
    p.add_argument("--p1", required=True, help="control polynomial")
    p.add_argument("--s1", required=True, help="control seed")
    p.add_argument("--p2", required=True, help="data polynomial")
    p.add_argument("--s2", required=True, help="data seed")
    add_format(p)

    return top


def _emit(args, text_lines, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _cmd_lfsr(args) -> int:
    reg = Lfsr(Gf2Poly.parse(args.poly), parse_bits(args.seed))
    bits = format_bits(reg.sequence(args.count))
    _emit(args, [bits], {"bits": bits})
    return 0


def _cmd_shrink(args) -> int:
    gen = ShrinkingGenerator(
        Lfsr(Gf2Poly.parse(args.p1), parse_bits(args.s1)),
        Lfsr(Gf2Poly.parse(args.p2), parse_bits(args.s2)),
    )
    bits = format_bits(gen.shrunken_sequence(args.count))
    _emit(args, [bits], {"bits": bits})
    return 0


def _cmd_ca_run(args) -> int:
    rules = RuleVector.parse(args.rules)
    cells = parse_bits(args.state)
    if len(cells) != len(rules):
        raise ValueError("state length must match the rule string")
    states = ca_run(rules, state_from_bits(cells), args.steps)
    rows = [format_bits(state_to_bits(s, len(rules))) for s in states]
    _emit(args, rows, {"states": rows})
    return 0


def _cmd_ca_charpoly(args) -> int:
    poly = ca_char_poly(RuleVector.parse(args.rules)).to_bitstring()
    _emit(args, [poly], {"charpoly": poly})
    return 0


def _cmd_linearize(args) -> int:
    result = linearize_shrinking_generator(args.l1, Gf2Poly.parse(args.p2))
    _emit(args, [str(result.rules_a), str(result.rules_b)], result.to_dict())
    return 0


def _cmd_bm(args) -> int:
    if (args.seq is None) == (args.seq_file is None):
        raise ValueError("provide exactly one of --seq or --seq-file")
    if args.seq_file is not None:
        with open(args.seq_file, "r", encoding="ascii") as fh:
            text = "".join(fh.read().split())
    else:
        text = args.seq
    result = berlekamp_massey(parse_bits(text))
    poly = result.connection_poly.to_bitstring()
    _emit(
        args,
        [f"lc={result.linear_complexity} charpoly={poly}"],
        {"linear_complexity": result.linear_complexity, "connection_poly": poly},
    )
    return 0


def _cmd_attack(args) -> int:
    gen = ShrinkingGenerator(
        Lfsr(Gf2Poly.parse(args.p1), parse_bits(args.s1)),
        Lfsr(Gf2Poly.parse(args.p2), parse_bits(args.s2)),
    )
    report = verify_linearization(gen)
    _emit(args, [report.to_text()], report.to_dict())
    return 0 if report.verdict else 1


_HANDLERS = {
    "lfsr": _cmd_lfsr,
    "shrink": _cmd_shrink,
    "linearize": _cmd_linearize,
    "bm": _cmd_bm,
    "attack": _cmd_attack,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "ca":
            handler = _cmd_ca_run if args.ca_command == "run" else _cmd_ca_charpoly
        else:
            handler = _HANDLERS[args.command]
        return handler(args)
    except (ValueError, OSError) as exc:
        print(f"shrinkca: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
