"""Command-line interface.

Exit codes: 0 success, 1 a coloring failed verification, 2 bad input,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .coloring import ColoringError, color_graph, read_coloring, verify, write_coloring
from .forest import spanning_onestar_forest
from .graph import FAMILIES, GraphError, generate, read_graph, write_graph
from .labels import format_labels
from .oracle import BudgetExceeded, SearchBudget, exact_index
from .stars import CompositionError, PreconditionError, partition, partition_with_empty

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _cmd_color(args: argparse.Namespace) -> int:
    g = read_graph(_read(args.graph))
    if args.dump_forest:
        _write(args.dump_forest, write_graph(spanning_onestar_forest(g)))
    coloring = color_graph(g, allow_empty=args.allow_empty)
    report = verify(g, coloring, allow_empty=args.allow_empty)
    if args.output:
        _write(args.output, write_coloring(coloring))
    else:
        sys.stdout.write(write_coloring(coloring))
    print(f"k={coloring.k} valid={str(report.valid).lower()}")
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(_read(args.graph))
    coloring = read_coloring(_read(args.coloring))
    allow_empty = args.allow_empty or coloring.mode == "empty"
    report = verify(g, coloring, allow_empty=allow_empty)
    print("\n".join(report.lines()))
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_exact(args: argparse.Namespace) -> int:
    g = read_graph(_read(args.graph))
    defaults = SearchBudget()
    budget = SearchBudget(
        max_k=args.max_k or defaults.max_k,
        node_limit=args.nodes or defaults.node_limit,
        time_limit=args.seconds or defaults.time_limit,
    )
    k, witness = exact_index(g, budget, allow_empty=args.allow_empty)
    print(k)
    sys.stdout.write(write_coloring(witness))
    return EXIT_OK


def _cmd_partition(args: argparse.Namespace) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise CompositionError(f"sizes must be comma-separated integers: {args.sizes!r}") from None
    build = partition_with_empty if args.with_empty else partition
    for block in build(sizes, args.k):
        print(format_labels(block))
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    g = generate(args.kind, *args.params, seed=args.seed)
    _write(args.output, write_graph(g))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="unionstar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color a graph and check the result")
    p.add_argument("graph", help="edge-list file, '-' for stdin")
    p.add_argument("-o", "--output", help="write the coloring here instead of stdout")
    p.add_argument("--allow-empty", action="store_true", help="allow the empty label on edges")
    p.add_argument("--dump-forest", metavar="PATH", help="write the spanning 1-star forest as an edge list")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--allow-empty", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("exact", help="exact index by exhaustive search (small graphs)")
    p.add_argument("graph")
    p.add_argument("--max-k", type=int)
    p.add_argument("--nodes", type=int)
    p.add_argument("--seconds", type=float)
    p.add_argument("--allow-empty", action="store_true")
    p.set_defaults(func=_cmd_exact)

    p = sub.add_parser("partition", help="split the subsets of [k] into stars")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-m", "--sizes", required=True, help="comma-separated star sizes")
    p.add_argument("--with-empty", action="store_true", help="include the empty set (sizes sum to 2^k)")
    p.set_defaults(func=_cmd_partition)

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("kind", choices=FAMILIES)
    p.add_argument("params", nargs="*", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (GraphError, ColoringError, CompositionError, PreconditionError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
