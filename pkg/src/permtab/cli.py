"""Command-line front end: ``permtab {enumerate,stats,xi,inv,pattern,distribution,verify}``."""

from __future__ import annotations

import argparse
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from .bijection import format_permutation, parse_permutation, xi
from .core import (
    FerrersShape,
    TableauError,
    format_tableau,
    is_alternative_text,
    parse_alternative,
    parse_tableau,
    reconstruct,
    to_alternative,
    validate,
)
from .enumeration import distribution, shapes_of_length, tableaux_of_shape
from .lbell import is_lbell
from .paths import inversions
from .patterns import PatternError, count_occurrences, parse_pattern, reverse_complement
from .verify import CHECK_NAMES, run_checks

MAX_ENUMERATE = 12


class UsageError(Exception):
    pass


def _emit(rows: Sequence[Sequence[object]], pretty: bool, out=None) -> None:
    out = out or sys.stdout
    cells = [[str(x) for x in row] for row in rows]
    if not pretty:
        for row in cells:
            out.write("\t".join(row) + "\n")
        return
    width = max((len(row) for row in cells), default=0)
    sizes = [max((len(r[q]) for r in cells if len(r) > q), default=0) for q in range(width)]
    for row in cells:
        out.write("  ".join(x.ljust(sizes[q]) for q, x in enumerate(row)).rstrip() + "\n")


def _pretty(args: argparse.Namespace) -> bool:
    return bool(getattr(args, "pretty", False)) or sys.stdout.isatty()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _load_checked(path: str):
    """Return (tableau, alternative representation) or raise TableauError."""
    text = _read(path)
    if is_alternative_text(text):
        a = parse_alternative(text)
        return reconstruct(a), a
    t = parse_tableau(text)
    problems = validate(t)
    if problems:
        raise TableauError("axiom violations:\n" + "\n".join(f"  {p}" for p in problems))
    return t, to_alternative(t)


def _shape_block(rows: tuple[int, ...]) -> str:
    return "".join(format_tableau(t) + "\n" for t in tableaux_of_shape(FerrersShape(rows)))


def cmd_enumerate(args: argparse.Namespace) -> int:
    n = args.n
    if not 0 <= n <= MAX_ENUMERATE:
        raise UsageError(f"n must be between 0 and {MAX_ENUMERATE}")
    shapes = [s.row_lengths for s in shapes_of_length(n)]
    total = 0
    if args.jobs > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            blocks = pool.map(_shape_block, shapes)
            for block in blocks:
                sys.stdout.write(block)
                total += block.count("\n\n")
    else:
        for rows in shapes:
            for t in tableaux_of_shape(FerrersShape(rows)):
                sys.stdout.write(format_tableau(t) + "\n")
                total += 1
    sys.stdout.write(f"total\t{total}\n")
    return 0 if total == math.factorial(n) else 1


def cmd_stats(args: argparse.Namespace) -> int:
    t, a = _load_checked(args.file)
    lab = a.labels
    perm = xi(a, checked=True)
    inv_pairs = inversions(a)
    w = {j: 0 for j in a.column_labels}
    for j, _ in inv_pairs:
        w[j] += 1
    rows: list[list[object]] = [
        ["n", a.n],
        ["shape", a.shape],
        ["row_labels", ",".join(map(str, sorted(lab.row_label)))],
        ["column_labels", ",".join(map(str, a.column_labels))],
        ["unrestricted_rows", ",".join(map(str, a.unrestricted_rows()))],
        ["black_dots", " ".join(f"({i},{j})" for i, j in sorted(a.black_dots, key=lambda c: c[1]))],
        ["white_dots", " ".join(f"({i},{j})" for i, j in sorted(a.white_dots))],
    ]
    rows += [[f"w_{j}", w[j]] for j in a.column_labels]
    rows += [
        ["inversions", " ".join(f"({j},{k})" for j, k in inv_pairs)],
        ["inv", len(inv_pairs)],
        ["xi", format_permutation(perm)],
        ["f_3-21(xi)", count_occurrences("3-21", perm)],
        ["f_32-1(rc(xi))", count_occurrences("32-1", reverse_complement(perm))],
        ["lbell", "yes" if is_lbell(t) else "no"],
    ]
    _emit(rows, _pretty(args))
    return 0


def cmd_xi(args: argparse.Namespace) -> int:
    _, a = _load_checked(args.file)
    print(format_permutation(xi(a, checked=True)))
    return 0


def cmd_inv(args: argparse.Namespace) -> int:
    _, a = _load_checked(args.file)
    print(len(inversions(a)))
    return 0


def cmd_pattern(args: argparse.Namespace) -> int:
    p = parse_pattern(args.pattern)
    perm = parse_permutation(args.permutation)
    count = count_occurrences(p, perm)
    if not args.rc:
        print(count)
        return 0
    _emit([["pi", count], ["rc", count_occurrences(p, reverse_complement(perm))]], _pretty(args))
    return 0


def cmd_distribution(args: argparse.Namespace) -> int:
    if not 0 <= args.n <= MAX_ENUMERATE:
        raise UsageError(f"n must be between 0 and {MAX_ENUMERATE}")
    dist = distribution(args.n, args.statistic, jobs=args.jobs)
    rows = [[v, c] for v, c in dist.histogram.items()] + [["total", dist.total]]
    _emit(rows, _pretty(args))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = run_checks(args.n, args.checks or ["all"], jobs=args.jobs, seed=args.seed)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [["check", "n", "status", "detail", "counterexample"]]
    rows += [[c.name, c.n, "PASS" if c.passed else "FAIL", c.detail, c.counterexample] for c in report.checks]
    _emit(rows, _pretty(args))
    if _pretty(args):
        print(f"elapsed {report.elapsed:.2f}s", file=sys.stderr)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="permtab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="aligned columns instead of TSV")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    p = sub.add_parser("enumerate", parents=[common], help="list every tableau of length n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    for name, func, helptext in (
        ("stats", cmd_stats, "labels, dots, w_j, inv, xi and pattern counts of a tableau file"),
        ("xi", cmd_xi, "permutation of a tableau file"),
        ("inv", cmd_inv, "inversion number of a tableau file"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file", help="tableau or alternative-representation file, '-' for stdin")
        p.set_defaults(func=func)

    p = sub.add_parser("pattern", parents=[common], help="count a dashed pattern in a permutation")
    p.add_argument("pattern")
    p.add_argument("permutation", help="comma separated, e.g. 4,5,1,3,2")
    p.add_argument("--rc", action="store_true", help="also count in the reverse complement")
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("distribution", parents=[common], help="histogram of a statistic at length n")
    p.add_argument("n", type=int)
    p.add_argument("statistic", help="'inv' or 'pattern:<p>', e.g. pattern:32-1")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("verify", parents=[common], help="run the exhaustive checks up to length n")
    p.add_argument("n", type=int)
    p.add_argument("checks", nargs="*", help=f"any of: all, {', '.join(CHECK_NAMES)}")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"permtab: {exc}", file=sys.stderr)
        return 2
    except (TableauError, PatternError, ValueError, OSError) as exc:
        print(f"permtab: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
