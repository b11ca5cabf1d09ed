"""Command-line interface: ``quatnorm <command> ...``.

Every command exits 0 when its check passed, 1 when it ran but the check
failed, and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cert import DegreeOneElement, NotReduced, certify, leader_label
from .freealg import IndexOutOfRange
from .oracle import coord_equal
from .qideal import FAMILIES, InvalidBound, InvalidN, enumerate_bg, ideal_generators
from .reduce import DegreeGuard, normal_form
from .structcheck import conforms_normal_pattern
from .syntax import ParseError, dump_basis, format_poly, format_word, load_basis, \
    parse_expression, parse_word

ENV_N = "QUATNORM_N"


class UsageError(Exception):
    pass


def _resolve_n(args) -> int:
    if args.n is not None:
        return args.n
    raw = os.environ.get(ENV_N)
    if raw is None:
        raise UsageError(f"the number of variables is required: pass --n or set {ENV_N}")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ENV_N} must be an integer, got {raw!r}") from None


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _expression_lines(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out


def cmd_normalize(args, out) -> int:
    n = _resolve_n(args)
    polys = [parse_expression(line, n) for line in _expression_lines(_read_text(args.expr_file))]
    deg = args.deg or max([p.degree for p in polys] + [2])
    basis = enumerate_bg(n, max(deg, 2))
    for p in polys:
        nf, trace = normal_form(p, basis, args.strategy)
        print(format_poly(nf), file=out)
        if args.trace:
            for step in trace.steps:
                e = basis[step.rule_index]
                print(f"#   {step.coeff} * {format_word(step.left)} . [{e.family} "
                      f"{e.describe_params()}] . {format_word(step.right)}", file=out)
    return 0


def cmd_basis(args, out) -> int:
    n = _resolve_n(args)
    basis = enumerate_bg(n, args.deg)
    if args.families:
        wanted = [f.strip() for f in args.families.split(",") if f.strip()]
        unknown = sorted(set(wanted) - set(FAMILIES))
        if unknown:
            raise UsageError(f"unknown families: {', '.join(unknown)}")
        basis = basis.filter_families(wanted)
    out.write(dump_basis(basis))
    return 0


def _text_report(report, basis) -> str:
    lines = [
        f"n: {report.n}",
        f"degree_bound: {report.degree_bound}",
        f"mode: {report.mode}",
        f"basis_size: {len(basis)}",
        f"pairs_scanned: {report.pairs_scanned}",
        f"squads_total: {report.squads_total}",
        f"squads_clear: {report.squads_clear}",
        f"squads_reduced: {report.squads_reduced}",
        f"clear_ratio: {report.clear_ratio} ({float(report.clear_ratio):.4f})",
        f"failures: {len(report.failures)}",
        f"elapsed_ms: {round(report.elapsed * 1000)}",
        f"status: {'PASS' if report.passed else 'FAIL'}",
    ]
    for s, rem in report.failures:
        lines.append(
            f"failure f={s.f_index} g={s.g_index} type={leader_label(s, basis)} "
            f"L={format_word(s.L)} R={format_word(s.R)} leader={format_word(s.leader)} "
            f"remainder={format_poly(rem)}"
        )
    return "\n".join(lines) + "\n"


def cmd_certify(args, out) -> int:
    n = _resolve_n(args)
    if args.basis:
        basis = load_basis(_read_text(args.basis), n, args.deg)
    else:
        basis = enumerate_bg(n, args.deg)
    mode = "all" if args.all_squads else "clear_only"
    report = certify(basis, args.deg, mode=mode, workers=args.workers)
    if args.json:
        text = json.dumps(report.to_dict(), indent=2) + "\n"
    else:
        text = _text_report(report, basis)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"{'PASS' if report.passed else 'FAIL'}: {len(report.failures)} failures "
              f"in {report.squads_reduced} S-polynomials", file=out)
    else:
        out.write(text)
    return 0 if report.passed else 1


def cmd_check_structure(args, out) -> int:
    n = _resolve_n(args)
    w = parse_word(args.word, n)
    deg = max(len(w), 2)
    irreducible = not enumerate_bg(n, deg).is_reducible(w)
    dec = conforms_normal_pattern(w, n)
    print(f"word: {format_word(w)}", file=out)
    print(f"irreducible: {'yes' if irreducible else 'no'}", file=out)
    print(f"conforms: {'yes' if dec is not None else 'no'}", file=out)
    if dec is not None:
        print(f"decomposition: {dec.describe()}", file=out)
    return 0 if dec is not None else 1


def cmd_oracle_eq(args, out) -> int:
    n = _resolve_n(args)
    a = parse_expression(args.expr1, n)
    b = parse_expression(args.expr2, n)
    equal = coord_equal(a, b, n)
    print("equal" if equal else "different", file=out)
    return 0 if equal else 1


def cmd_gen_ideal(args, out) -> int:
    out.write(dump_basis(ideal_generators(_resolve_n(args))))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatnorm", description="Groebner-basis tools for quaternionic polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_n(p):
        p.add_argument("--n", type=int, default=None,
                       help=f"number of quaternionic variables (default: ${ENV_N})")
        return p

    p = with_n(sub.add_parser("normalize", help="normal form of each expression in a file"))
    p.add_argument("expr_file", metavar="EXPR_FILE", help="one expression per line, '-' for stdin")
    p.add_argument("--strategy", default="det", help="det or rand:SEED")
    p.add_argument("--deg", type=int, default=None, help="basis degree bound")
    p.add_argument("--trace", action="store_true", help="print the reduction steps")
    p.set_defaults(func=cmd_normalize)

    p = with_n(sub.add_parser("basis", help="print the Groebner basis"))
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--families", default=None, help="comma-separated family tags")
    p.set_defaults(func=cmd_basis)

    p = with_n(sub.add_parser("certify", help="reduce the S-polynomials of the basis"))
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--all-squads", action="store_true", help="reduce every S-polynomial")
    p.add_argument("--report", default=None, help="write the report to FILE")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--basis", default=None, help="certify a basis file instead")
    p.set_defaults(func=cmd_certify)

    p = with_n(sub.add_parser("check-structure", help="test a word against the normal pattern"))
    p.add_argument("word", metavar="WORD")
    p.set_defaults(func=cmd_check_structure)

    p = with_n(sub.add_parser("oracle-eq", help="compare two expressions by coordinates"))
    p.add_argument("expr1", metavar="EXPR1")
    p.add_argument("expr2", metavar="EXPR2")
    p.set_defaults(func=cmd_oracle_eq)

    p = with_n(sub.add_parser("gen-ideal", help="print the ideal generators"))
    p.set_defaults(func=cmd_gen_ideal)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, ParseError, IndexOutOfRange, InvalidN, InvalidBound, DegreeGuard,
            DegreeOneElement, NotReduced, OSError, ValueError) as exc:
        print(f"quatnorm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
