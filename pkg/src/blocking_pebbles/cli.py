"""Command-line interface.

Exit status: 0 success, 1 domain error (bad position, not impartial, illegal
input), 2 usage error, 3 verification mismatch, 4 node budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import position as pos_mod
from .families import THEOREMS, reduce_tree, verify
from .position import FAMILIES, PositionError, build_family
from .rules import Player, legal_moves
from .search import census, census_lines, find_value
from .solver import DEFAULT_BUDGET, BudgetExceeded, NotImpartialError, Solver
from .values import NotationError, parse_value, render

EXIT_DOMAIN, EXIT_USAGE, EXIT_MISMATCH, EXIT_BUDGET = 1, 2, 3, 4


class UsageError(Exception):
    pass


def _read(path: str) -> pos_mod.Position:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    return pos_mod.parse(text)


def _write(p: pos_mod.Position, output: str | None):
    text = pos_mod.serialize(p) + "\n"
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _triple(text: str) -> tuple[int, int, int]:
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected b,r,g but got {text!r}") from None
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected b,r,g but got {text!r}")
    return parts


def _bound(text: str) -> tuple[str, int]:
    key, sep, value = text.partition("=")
    if not sep or not value.lstrip("-").isdigit():
        raise argparse.ArgumentTypeError(f"bounds take key=int, got {text!r}")
    return key, int(value)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blocking-pebbles", description=__doc__.splitlines()[0])
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="node budget per evaluation")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in [
        ("eval", "print the canonical game value"),
        ("outcome", "print the outcome class L, R, P or N"),
        ("grundy", "print the Grundy number of a green-only position"),
        ("reduce", "write the reduced digraph of a green-only oriented tree"),
    ]:
        p = sub.add_parser(name, help=text)
        p.add_argument("file", help="position file, or - for stdin")
        if name == "reduce":
            p.add_argument("-o", "--output")

    p = sub.add_parser("moves", help="list legal moves")
    p.add_argument("file")
    p.add_argument("--player", required=True, choices=["L", "R"])

    p = sub.add_parser("gen", help="write a position on a named graph family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("n", nargs="?", type=int, help="leaves (stars) or vertices (path, tournament)")
    p.add_argument("--pebbles", nargs="*", type=_triple, default=None, metavar="B,R,G")
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="check a closed form against the solver")
    p.add_argument("theorem", choices=THEOREMS + ("all",))
    p.add_argument("--bounds", nargs="*", type=_bound, default=[], metavar="KEY=N")
    p.add_argument("--tsv", action="store_true", help="also print one tab-separated line per case")

    p = sub.add_parser("search", help="enumerate small DAG positions by value")
    p.add_argument("--max-vertices", type=int, required=True)
    p.add_argument("--max-pebbles", type=int, required=True)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--target", help="value in the value notation, e.g. 1/2^2 or v*")
    mode.add_argument("--report-values", action="store_true")
    return parser


def _gen(args) -> pos_mod.Position:
    count, _ = pos_mod.family_arcs(args.family, args.n)
    pebbles = args.pebbles if args.pebbles is not None else [(0, 0, 0)] * count
    return build_family(args.family, pebbles, n=args.n)


def _verify(args, solver: Solver) -> int:
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    bounds = dict(args.bounds)
    if args.theorem == "all" and bounds:
        raise UsageError("--bounds cannot be combined with 'all'")
    failed = False
    for i, t in enumerate(theorems):
        try:
            report = verify(t, bounds, solver)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        if i:
            print()
        print(report.table())
        if args.tsv:
            print("\n".join(report.lines()))
            for m in report.discrepancies:
                print(f"{t}:red-leaf-reading\t{m.case_key}\t{m.formula}\t{m.solver}\tno")
        failed |= not report.passed
    return EXIT_MISMATCH if failed else 0


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    solver = Solver(budget=args.budget)
    cmd = args.command
    if cmd == "eval":
        print(render(solver.game_value(_read(args.file))))
    elif cmd == "outcome":
        print(solver.outcome(_read(args.file)).value)
    elif cmd == "grundy":
        print(solver.grundy(_read(args.file)))
    elif cmd == "moves":
        for m in legal_moves(_read(args.file), Player.parse(args.player)):
            print(m.render())
    elif cmd == "reduce":
        _write(reduce_tree(_read(args.file)), args.output)
    elif cmd == "gen":
        _write(_gen(args), args.output)
    elif cmd == "verify":
        return _verify(args, solver)
    elif cmd == "search":
        if args.max_vertices < 1 or args.max_pebbles < 0:
            raise UsageError("--max-vertices must be >= 1 and --max-pebbles >= 0")
        if args.report_values:
            print("\n".join(census_lines(census(args.max_vertices, args.max_pebbles, solver))))
        else:
            try:
                target = parse_value(args.target)
            except NotationError as exc:
                raise UsageError(f"bad --target: {exc}") from None
            hits = 0
            for p in find_value(target, args.max_vertices, args.max_pebbles, solver):
                print(pos_mod.serialize(p))
                hits += 1
            print(f"{hits} positions with value {render(target)}", file=sys.stderr)
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PositionError, NotImpartialError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
