"""Quasi DB - Command Line Interface

Subcommands:

classify  - print a balance report per input graph for one distance n
wsets     - print the W-partition of one vertex pair
construct - build a named family and print its graph6 plus a block-metadata comment
verify    - run a theorem check and print its findings (exit 1 on any counterexample)
search    - run an open-problem search and print its findings (always exit 0 on success)
formats   - convert between graph6 and the edge-list format

Reports go to stdout (or --output); errors and log records go to stderr.
"""

import argparse
import logging
import os
import sys

from . import __version__
from .balance import classify, w_partition
from .constants import EXIT_FINDINGS, EXIT_OK, EXIT_USAGE
from .constructions import HGraphSpec, build_family, complete_with_pendants, h_graph
from .error import DisconnectedGraphError, GraphFormatError, InvalidParamsError, QDBError
from .formats import (
    format_blocks,
    parse_edge_list,
    read_graph6_lines,
    to_edge_list,
    to_graph6
)
from .verification import CHECKS, SEARCHES, core_corpus, run_check, run_search


logger = logging.getLogger(__name__)

EDGE_LIST_EXTENSIONS = (".el", ".edges", ".txt")


# Input
# =====
def _detect_format(path, requested):
    """Return "graph6" or "edgelist" from the --format flag or the file extension."""
    if requested is not None:
        return requested

    ext = os.path.splitext(path or "")[1].lower()

    if ext in EDGE_LIST_EXTENSIONS:
        return "edgelist"

    return "graph6"


def _read_text(path):
    """Return the input text; undecodable bytes become U+FFFD and fail their line's validation."""
    if path is None or path == "-":
        return sys.stdin.read()

    with open(path, "r", encoding="utf-8", errors="replace") as f:
        return f.read()


def _read_graphs(path, requested):
    """Yield (label, graph, error) for every graph of the input."""
    text = _read_text(path)

    if _detect_format(path, requested) == "edgelist":
        try:
            yield "edgelist", parse_edge_list(text), None

        except GraphFormatError as e:
            yield "edgelist", None, e

        return

    for line_no, g, error in read_graph6_lines(text.splitlines()):
        yield f"line {line_no}", g, error


def _open_output(path):
    return sys.stdout if path is None or path == "-" else open(path, "w", encoding="utf-8")


# Commands
# ========
def cmd_classify(args):
    """Print a balance report for every input graph."""
    status = EXIT_OK

    for label, g, error in _read_graphs(args.input, args.format):
        if error is not None:
            print(f"error: {error}", file=sys.stderr)
            status = EXIT_USAGE
            continue

        try:
            report = classify(g, args.n)

        except DisconnectedGraphError as e:
            print(f"error: {label}: {e}", file=sys.stderr)
            status = EXIT_USAGE
            continue

        print(f"# {to_graph6(g)}")
        sys.stdout.write(report.to_text())

    return status


def _set_text(vertices):
    return "{" + ",".join(str(u) for u in sorted(vertices)) + "}"


def cmd_wsets(args):
    """Print the W-partition of the pair (u, v) for every input graph."""
    status = EXIT_OK

    for label, g, error in _read_graphs(args.input, args.format):
        if error is not None:
            print(f"error: {error}", file=sys.stderr)
            status = EXIT_USAGE
            continue

        try:
            part = w_partition(g, None, args.u, args.v)

        except QDBError as e:
            print(f"error: {label}: {e}", file=sys.stderr)
            status = EXIT_USAGE
            continue

        wu, wv, eq = part.sizes
        print(f"dist={part.n}")
        print(
            f"Wu={_set_text(part.closer_to_u)} Wv={_set_text(part.closer_to_v)} "
            f"eq={_set_text(part.equidistant)}"
        )
        print(f"|Wu|={wu} |Wv|={wv} |eq|={eq}")

    return status


def cmd_construct(args):
    """Build one family instance and print it."""
    if args.family == "hgraph":
        cores = dict(core_corpus())

        if args.core not in cores:
            raise InvalidParamsError(f"unknown core {args.core!r}; expected one of {', '.join(cores)}")

        g = h_graph(HGraphSpec(args.m, cores[args.core], args.k))

    elif args.family == "pendants":
        if args.q is None or args.roots is None:
            raise InvalidParamsError("family pendants needs parameters q and roots")

        g = complete_with_pendants(args.q, range(args.roots))

    else:
        params = {name: getattr(args, name) for name in ("m", "n", "k", "d", "p", "q")}
        g = build_family(args.family, params)

    print(to_graph6(g))
    print(format_blocks(g))
    return EXIT_OK


def _write_findings(findings, path):
    out = _open_output(path)

    try:
        for finding in findings:
            out.write(finding.to_line() + "\n")

    finally:
        if out is not sys.stdout:
            out.close()


def cmd_verify(args):
    """Run a check; exit 1 when it found a counterexample."""
    findings = run_check(args.check, args.max_n, args.jobs, args.ingest)
    _write_findings(findings, args.output)
    return EXIT_FINDINGS if any(f.is_counterexample for f in findings) else EXIT_OK


def cmd_search(args):
    """Run a search; its findings are data, never a failure."""
    findings = run_search(args.target, args.max_n, args.jobs, args.ingest)
    _write_findings(findings, args.output)
    return EXIT_OK


def cmd_formats(args):
    """Convert every input graph to the requested format."""
    status = EXIT_OK

    for label, g, error in _read_graphs(args.input, args.format):
        if error is not None:
            print(f"error: {error}", file=sys.stderr)
            status = EXIT_USAGE
            continue

        if args.to == "graph6":
            print(to_graph6(g))

        else:
            sys.stdout.write(to_edge_list(g))

    return status


# Parser
# ======
def _positive(text):
    try:
        value = int(text)

    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None

    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")

    return value


def build_parser():
    """Return the argument parser."""
    parser = argparse.ArgumentParser(
        prog="qdb", description="Quasi distance-balanced graph toolkit", allow_abbrev=False
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    commands = parser.add_subparsers(dest="command", required=True)

    def add_input(sub):
        sub.add_argument("input", nargs="?", help="input file (default: stdin)")
        sub.add_argument("--format", choices=("graph6", "edgelist"), help="input format")

    sub = commands.add_parser("classify", allow_abbrev=False, help="classify graphs for a distance n")
    add_input(sub)
    sub.add_argument("--n", type=_positive, required=True, help="distance to classify for")
    sub.set_defaults(func=cmd_classify)

    sub = commands.add_parser("wsets", allow_abbrev=False, help="print the W-partition of a vertex pair")
    add_input(sub)
    sub.add_argument("--u", type=int, required=True)
    sub.add_argument("--v", type=int, required=True)
    sub.set_defaults(func=cmd_wsets)

    sub = commands.add_parser("construct", allow_abbrev=False, help="build a named family")
    sub.add_argument("family", help="family name, hgraph or pendants")

    for name in ("m", "n", "k", "d", "p", "q", "roots"):
        sub.add_argument(f"--{name}", type=_positive)

    sub.add_argument("--core", default="k4-incidence", help="H-graph core name")
    sub.set_defaults(func=cmd_construct)

    for name, table, func, help_text in (
        ("verify", CHECKS, cmd_verify, "run a theorem check"),
        ("search", SEARCHES, cmd_search, "run an open-problem search")
    ):
        sub = commands.add_parser(name, allow_abbrev=False, help=help_text)
        sub.add_argument("check" if name == "verify" else "target", choices=sorted(table))
        sub.add_argument("--max-n", type=_positive, default=6, help="largest graph order")
        sub.add_argument("--jobs", type=_positive, default=1, help="worker processes")
        sub.add_argument("--ingest", help="graph6 file replacing in-process enumeration")
        sub.add_argument("--output", help="findings file (default: stdout)")
        sub.set_defaults(func=func)

    sub = commands.add_parser("formats", allow_abbrev=False, help="convert between graph6 and edge lists")
    add_input(sub)
    sub.add_argument("--to", choices=("graph6", "edgelist"), required=True)
    sub.set_defaults(func=cmd_formats)
    return parser


def main(argv=None):
    """Run the command line interface and return its exit code."""
    parser = build_parser()

    try:
        args = parser.parse_args(argv)

    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    logger.debug("running %s", args.command)

    try:
        return args.func(args)

    except (QDBError, OSError, UnicodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
