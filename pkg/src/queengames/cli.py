"""Command-line front end.

Exit codes: 0 success or all checks passed, 1 a verification failed,
2 usage error, 3 resource limit exceeded.

Variants are written ``name[:p1,p2]``: standard, k-queen:K, queen-bee,
queen-dee, 2-queen-dee, k-queen-dee:K, widened:J,M, restricted:K,J.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import analysis
from .game import ParameterError, parse_variant
from .solver import DEFAULT_MAX_LEVEL, CapacityError, PTable, p_positions
from .words import (
    Coding,
    MorphismError,
    apply_coding,
    catalog,
    erase_letters,
    fixed_point,
    table_from_morphism,
)

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


class UsageError(Exception):
    pass


def format_table(table: PTable, fmt: str) -> str:
    rows = table.rows()
    if fmt == "json":
        return json.dumps([list(r) for r in rows]) + "\n"
    sep = "\t" if fmt == "tsv" else ","
    lines = [sep.join(("n", "a", "b"))]
    lines += [sep.join(str(v) for v in r) for r in rows]
    return "\n".join(lines) + "\n"


def _split_params(text: str) -> tuple[str, list[int]]:
    name, _, raw = text.partition(":")
    try:
        params = [int(p) for p in raw.split(",")] if raw else []
    except ValueError:
        raise UsageError(f"bad parameters in {text!r}") from None
    return name, params


def _parse_coding(text: str) -> Coding:
    # "a=a,b=ac,c=" ; an empty image erases the letter
    mapping = {}
    for item in text.split(","):
        letter, eq, image = item.partition("=")
        if not eq or len(letter) != 1:
            raise UsageError(f"bad coding entry {item!r}; expected letter=word")
        mapping[letter] = image
    return Coding(mapping)


def _morphic_table(name: str, count: int, erase: str = "", letters: str = "a,b") -> PTable:
    base, params = _split_params(name)
    base = base.replace("_", "-")
    if base.startswith("tribonacci-erase-"):
        erased = base.rsplit("-", 1)[1]
        rest = [c for c in "abc" if c != erased]
        return table_from_morphism(catalog("tribonacci"), count, rest[0], rest[1], erase=erased)
    la, _, lb = letters.partition(",")
    return table_from_morphism(catalog(base, *params), count, la, lb, erase=erase)


def load_table(source: str, count: int, max_level: int = DEFAULT_MAX_LEVEL) -> PTable:
    """Resolve ``solve:V``, ``slow:V``, ``formula:NAME`` or ``morphic:NAME``."""
    kind, sep, rest = source.partition(":")
    if not sep:
        raise UsageError(f"table source {source!r} needs a kind prefix (solve:, formula:, morphic:)")
    if kind in ("solve", "slow"):
        return p_positions(parse_variant(rest), count, fast=kind == "solve", max_level=max_level)
    if kind == "formula":
        return analysis.closed_form_table(rest, count)
    if kind == "morphic":
        return _morphic_table(rest, count)
    raise UsageError(f"unknown table source kind {kind!r}")


def cmd_solve(args) -> int:
    table = p_positions(parse_variant(args.queen), args.count, fast=not args.slow, max_level=args.max_level)
    sys.stdout.write(format_table(table, args.format))
    return 0


def cmd_formula(args) -> int:
    sys.stdout.write(format_table(analysis.closed_form_table(args.name, args.count), args.format))
    return 0


def cmd_morphic(args) -> int:
    base, params = _split_params(args.name)
    m = catalog(base, *params)
    if args.table:
        table = _morphic_table(args.name, args.count, erase=args.erase or "", letters=args.table)
        sys.stdout.write(format_table(table, args.format))
        return 0
    coding = _parse_coding(args.code) if args.code else None
    length = args.prefix
    # codings and erasure shrink or stretch the word; grow the source until
    # the processed prefix is long enough
    source = length
    while True:
        word = fixed_point(m, args.seed, source)
        if coding is not None:
            word = apply_coding(word, coding)
        if args.erase:
            word = erase_letters(word, args.erase)
        if len(word) >= length:
            break
        source *= 2
    sys.stdout.write(word[:length] + "\n")
    return 0


def _verdict(ok: bool, text: str) -> int:
    sys.stdout.write(("PASS " if ok else "FAIL ") + text + "\n")
    return 0 if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    check, n = args.check, args.count
    if check == "equiv":
        if not (args.left and args.right):
            raise UsageError("equiv needs --left and --right")
        left = load_table(args.left, n)
        right = load_table(args.right, n)
        bad = analysis.check_equivalence(left, right, n)
        detail = "equal" if bad is None else f"first mismatch at n={bad}: {left[bad]} vs {right[bad]}"
        return _verdict(bad is None, f"equiv {args.left} {args.right} n<={n}: {detail}")
    if check == "eq1":
        target = args.target or "queen-dee"
        report = analysis.eq1_report(target, n)
        if report.holds:
            detail = f"residuals in {{0,-1}}, max |r|={report.max_abs}"
        else:
            first = report.violations[0]
            detail = (
                f"{len(report.violations)} violations, max |r|={report.max_abs}; "
                f"first at n={first.n} r={first.r}"
            )
        return _verdict(report.holds, f"eq1 {target} n<={n}: {detail}")
    if check == "lemma3":
        return _verdict(analysis.check_lemma3(n), f"lemma3 n<={n}")
    if check == "good-triples":
        return _verdict(analysis.check_good_triples(n), f"good-triples n<={n}")
    if check == "relation":
        if not (args.target and args.relation):
            raise UsageError("relation needs --target and --relation")
        table = load_table(args.target, n)
        ok = analysis.check_relation(table, args.relation, n, k=args.k, j=args.j)
        return _verdict(ok, f"relation {args.relation} (k={args.k}, j={args.j}) {args.target} n<={n}")
    if check == "complementary":
        if not args.target:
            raise UsageError("complementary needs --target")
        ok = analysis.check_complementary(load_table(args.target, n), n)
        return _verdict(ok, f"complementary {args.target} n<={n}")
    raise UsageError(f"unknown check {check!r}")


def cmd_scan(args) -> int:
    result = analysis.scan_queen_bee_residuals(args.max_n)
    to_stdout = args.emit == "-"
    summary = sys.stderr if to_stdout else sys.stdout
    if to_stdout:
        analysis.write_residual_csv(sys.stdout, result.residuals)
    elif args.emit:
        with open(args.emit, "w", newline="") as fh:
            analysis.write_residual_csv(fh, result.residuals)
    for value, n in sorted(result.first_by_value.items()):
        summary.write(f"first r={value} at n={n}\n")
    for mag, n in sorted(result.first_by_magnitude.items()):
        summary.write(f"first |r|={mag} at n={n}\n")
    summary.write(f"min r={int(result.residuals.min())} max r={int(result.residuals.max())}\n")
    return 0


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="queengames",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def table_opts(p):
        p.add_argument("--count", type=_positive, default=15)
        p.add_argument("--format", choices=("csv", "json", "tsv"), default="csv")

    p = sub.add_parser("solve", help="P-positions by retrograde search")
    p.add_argument("--queen", required=True, help="variant, e.g. queen-bee or widened:2,1")
    p.add_argument("--slow", action="store_true", help="check every square against every P-position")
    p.add_argument("--max-level", type=_positive, default=DEFAULT_MAX_LEVEL)
    table_opts(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("formula", help="P-positions from closed forms")
    p.add_argument(
        "--name",
        required=True,
        help="queen-bee, 2-queen-dee, queen-dee, holladay:K, fraenkel:K,J, restricted:K,J",
    )
    table_opts(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("morphic", help="fixed-point words and the tables they code")
    p.add_argument("--name", required=True, help="catalog morphism, e.g. tribonacci or fraenkel:2,2")
    p.add_argument("--seed", default="a")
    p.add_argument("--prefix", type=_positive, default=64, help="letters of the word to print")
    p.add_argument("--erase", help="letters to delete")
    p.add_argument("--code", help="coding applied before erasing, e.g. a=a,b=ac,c=a")
    p.add_argument("--table", help="two letters LA,LB: print the table of their positions")
    table_opts(p)
    p.set_defaults(func=cmd_morphic)

    p = sub.add_parser("verify", help="cross-checks; exit 1 on failure")
    p.add_argument(
        "--check",
        required=True,
        choices=("equiv", "eq1", "lemma3", "good-triples", "relation", "complementary"),
    )
    p.add_argument("--left", help="table source: solve:V, slow:V, formula:NAME, morphic:NAME")
    p.add_argument("--right", help="table source, as --left")
    p.add_argument("--target", help="eq1: game name; relation/complementary: table source")
    p.add_argument("--relation", help="b=2a, b=a+kn, b=2a+n or b=a+kn-j")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--j", type=int, default=0)
    p.add_argument("--count", type=_positive, default=15)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="Queen Bee residuals a_{b_n} - a_n - b_n")
    p.add_argument("--target", choices=("queen-bee",), default="queen-bee")
    p.add_argument("--max-n", type=_positive, required=True)
    p.add_argument("--emit", help="write the n,r CSV here ('-' for stdout)")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, MorphismError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"queengames: error: {exc}\n")
        return EXIT_USAGE
    except (CapacityError, MemoryError) as exc:
        sys.stderr.write(f"queengames: resource limit: {exc}\n")
        return EXIT_CAPACITY


if __name__ == "__main__":
    sys.exit(main())
