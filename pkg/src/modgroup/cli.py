"""Command line: ``modgroup seq``, ``modgroup verify`` and ``modgroup graph``.

Exit codes: 0 success, 1 a check failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import sys
from typing import Iterable, Sequence

from . import checks
from . import enumeration as en
from . import gf
from .group import MAX_GRAPH_DEPTH, cayley_graph, graph_to_dot

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SEQUENCES = ("t", "tfrak", "q", "v")
METHODS = ("brute", "pda", "series")


class UsageError(Exception):
    pass


def format_bfile(values: Iterable[int], offset: int = 0) -> str:
    """One "index value" pair per line."""
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))


def parse_bfile(text: str) -> list[tuple[int, int]]:
    out = []
    for line in text.splitlines():
        if line.strip() and not line.startswith("#"):
            index, value = line.split()
            out.append((int(index), int(value)))
    return out


def univariate_values(which: str, max_index: int, method: str, workers: int = 1) -> list[int]:
    if which == "t":
        if method == "series":
            return gf.assemble_T(max_index + 1).integer_coeffs()
        if method == "brute":
            return en.identity_sequence(max_index, workers=workers)
        return [pda_table(max_index, workers)[0].by_length[n] for n in range(max_index + 1)]
    if which == "tfrak":
        if method == "series":
            return gf.primitive_series(gf.assemble_T(max_index + 1)).integer_coeffs()
        if method == "brute":
            return en.primitive_sequence(max_index, workers=workers)
        return list(pda_table(max_index, workers)[1])
    if which == "v":
        if method == "series":
            return gf.cogrowth_series(max(max_index + 1, 2)).integer_coeffs()[:max_index + 1]
        if method == "brute":
            return en.reduced_identity_sequence(max_index)
        raise UsageError("the pushdown automaton reads words over {U, S} only; v needs brute or series")
    raise UsageError(f"unknown sequence {which!r}")


def pda_table(max_index: int, workers: int):
    table, prim, mismatches = en.pda_counts(max_index, workers=workers)
    if mismatches:
        raise RuntimeError(f"pushdown automaton disagrees with matrices on {mismatches} words")
    return table, prim


def bivariate_lines(max_total: int, method: str, workers: int = 1) -> str:
    """Triples "n m q(n,m)" for n + m <= max_total, by total then n."""
    if method == "series":
        Q = gf.assemble_Q(max(max_total + 1, 6))
        value = lambda n, m: Q[n, m]
    else:
        table = (en.count_bivariate(max_total, workers=workers) if method == "brute"
                 else pda_table(max_total, workers)[0])
        value = lambda n, m: table[n, m]
    return "".join(f"{n} {total - n} {value(n, total - n)}\n"
                   for total in range(max_total + 1) for n in range(total + 1))


def cmd_seq(args) -> int:
    if args.max < 0:
        raise UsageError("--max must be nonnegative")
    if args.which == "q":
        text = bivariate_lines(args.max, args.method, args.workers)
    else:
        text = format_bfile(univariate_values(args.which, args.max, args.method, args.workers))
    sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "oracles":
        results = checks.oracle_checks(args.max_len, args.workers)
    elif args.suite == "cubic":
        results = checks.cubic_checks(args.order, args.bi_order, args.grammar_order)
    elif args.suite == "congruence":
        results = checks.congruence_checks(args.pmax)
    else:
        results = checks.property_checks(args.max_total)
    failed = 0
    for check in results:
        print(check.line(), flush=True)
        failed += not check.passed
    print(f"{args.suite}: {'all checks passed' if not failed else f'{failed} failed'}")
    return EXIT_FAILED if failed else EXIT_OK


def cmd_graph(args) -> int:
    if not 0 <= args.depth <= MAX_GRAPH_DEPTH:
        raise UsageError(f"--depth must be in [0, {MAX_GRAPH_DEPTH}]")
    sys.stdout.write(graph_to_dot(*cayley_graph(args.depth)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="modgroup",
                                     description="Identity words in PSL2(Z) = <U, S | U^3, S^2>.")
    sub = parser.add_subparsers(dest="command", required=True)

    seq = sub.add_parser("seq", help="print a sequence as a b-file")
    seq.add_argument("which", choices=SEQUENCES,
                     help="t: identity words; tfrak: primitive ones; q: by letter counts; v: cogrowth")
    seq.add_argument("--max", type=int, default=19, help="largest index (total length for q)")
    seq.add_argument("--method", choices=METHODS, default="series")
    seq.add_argument("--workers", type=int, default=1, help="processes for enumeration")
    seq.set_defaults(func=cmd_seq)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=sorted(checks.SUITES))
    verify.add_argument("--max-len", type=int, default=14, help="oracles: longest enumerated word")
    verify.add_argument("--workers", type=int, default=1)
    verify.add_argument("--order", type=int, default=300, help="cubic: order of T")
    verify.add_argument("--bi-order", type=int, default=30, help="cubic: order of Q")
    verify.add_argument("--grammar-order", type=int, default=24, help="cubic: order of the grammar system")
    verify.add_argument("--pmax", type=int, default=499, help="congruence: largest prime tested")
    verify.add_argument("--max-total", type=int, default=18, help="props: largest total degree")
    verify.set_defaults(func=cmd_verify)

    graph = sub.add_parser("graph", help="print the Cayley graph ball as Graphviz DOT")
    graph.add_argument("--depth", type=int, default=3)
    graph.set_defaults(func=cmd_graph)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, en.BudgetExceeded, ValueError) as exc:
        print(f"modgroup: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
