"""Command-line surface.

Subcommands: decompose, classify, unmixed, export, oracle-check, fixtures.
Diagnostics go to stderr, data to stdout or the --output path.  Exit codes:
0 success, 1 for a false answer from ``unmixed`` or ``oracle-check``, 2 for
usage and input errors, 3 for capacity errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .cas import DIALECTS, export_cas_script
from .classify import classify_decomposition
from .cutsets import compute_cutsets, compute_cutsets_naive
from .errors import CapacityError, GraphInputError
from .fixtures import NAMED_FIXTURES
from .graphs import Graph
from .ideals import minimal_primes
from .serialize import (
    FORMATS,
    classification_document,
    graph_to_edgelist,
    graph_to_structured,
    parse_graph,
    report_document,
    to_json,
)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _add_io_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("input_path", nargs="?", metavar="INPUT",
                     help="input path or - for stdin (same as --input)")
    sub.add_argument("--input", default=None, help="input path or - for stdin")
    sub.add_argument("--format", choices=FORMATS, default="edgelist",
                     help="graph input format (default edgelist)")
    sub.add_argument("--output", default="-", help="output path or - for stdout")
    sub.add_argument("--max-enum", type=int, default=30, metavar="N",
                     help="abort when more than N candidate vertices must be enumerated")
    sub.add_argument("--jobs", type=int, default=1, metavar="N",
                     help="worker processes for subset enumeration")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="beideal",
        description="Combinatorial primary decomposition of binomial edge ideals",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for command, summary in (
        ("decompose", "emit the full report: cut sets, minimal primes, invariants"),
        ("classify", "emit the classification fields only"),
        ("unmixed", "exit 0 when the edge ideal is unmixed, 1 when it is not"),
        ("export", "emit a CAS verification script"),
        ("oracle-check", "compare pruned and naive cut-set enumeration"),
    ):
        sub = commands.add_parser(command, help=summary)
        _add_io_flags(sub)
        if command == "export":
            sub.add_argument("--dialect", choices=DIALECTS, default="cocoa5")
            sub.add_argument("--char", type=int, default=0, metavar="P",
                             help="field characteristic, 0 for the rationals")

    fixtures = commands.add_parser("fixtures", help="emit a named example graph")
    fixtures.add_argument("name", choices=sorted(NAMED_FIXTURES))
    fixtures.add_argument("params", nargs="*", type=int,
                          help="family parameters, e.g. g3 R S T or g4 R S")
    fixtures.add_argument("--format", choices=FORMATS, default="edgelist")
    fixtures.add_argument("--output", default="-")
    return parser


def _read_graph(args: argparse.Namespace) -> Graph:
    source = args.input_path or args.input or "-"
    if source == "-":
        data = sys.stdin.read()
    else:
        try:
            with open(source, "r", encoding="utf-8") as handle:
                data = handle.read()
        except OSError as exc:
            raise GraphInputError(f"cannot read {source}: {exc.strerror}") from None
    return parse_graph(data, args.format)


def _write(args: argparse.Namespace, text: str) -> None:
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _run_decompose(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    decomposition = minimal_primes(graph, max_enum=args.max_enum, jobs=args.jobs)
    report = classify_decomposition(decomposition)
    _write(args, to_json(report_document(graph, decomposition, report)))
    return EXIT_OK


def _run_classify(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    decomposition = minimal_primes(graph, max_enum=args.max_enum, jobs=args.jobs)
    report = classify_decomposition(decomposition)
    _write(args, to_json(classification_document(graph, report)))
    return EXIT_OK


def _run_unmixed(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    decomposition = minimal_primes(graph, max_enum=args.max_enum, jobs=args.jobs)
    _write(args, f"unmixed: {'true' if decomposition.unmixed else 'false'}\n")
    return EXIT_OK if decomposition.unmixed else EXIT_FALSE


def _run_export(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    decomposition = minimal_primes(graph, max_enum=args.max_enum, jobs=args.jobs)
    _write(args, export_cas_script(graph, decomposition, args.dialect, char=args.char))
    return EXIT_OK


def _run_oracle_check(args: argparse.Namespace) -> int:
    graph = _read_graph(args)
    pruned = compute_cutsets(graph, max_enum=args.max_enum, jobs=args.jobs)
    naive = compute_cutsets_naive(graph)
    if pruned.sets == naive.sets:
        _write(args, f"oracle-check: families agree ({len(pruned.sets)} cut sets)\n")
        return EXIT_OK
    missing = set(naive.sets) - set(pruned.sets)
    extra = set(pruned.sets) - set(naive.sets)
    print(f"oracle-check: MISMATCH missing={sorted(missing)} extra={sorted(extra)}",
          file=sys.stderr)
    return EXIT_FALSE


def _run_fixtures(args: argparse.Namespace) -> int:
    arity, constructor = NAMED_FIXTURES[args.name]
    if len(args.params) != arity:
        raise GraphInputError(
            f"fixture {args.name!r} takes {arity} parameter(s), got {len(args.params)}"
        )
    graph = constructor(*args.params)
    label = args.name if arity == 0 else f"{args.name} {' '.join(map(str, args.params))}"
    if args.format == "edgelist":
        _write(args, graph_to_edgelist(graph, name=label))
    else:
        _write(args, graph_to_structured(graph, name=label))
    return EXIT_OK


_RUNNERS = {
    "decompose": _run_decompose,
    "classify": _run_classify,
    "unmixed": _run_unmixed,
    "export": _run_export,
    "oracle-check": _run_oracle_check,
    "fixtures": _run_fixtures,
}


def cli_main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return _RUNNERS[args.command](args)
    except GraphInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY


def main() -> int:
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    raise SystemExit(main())
