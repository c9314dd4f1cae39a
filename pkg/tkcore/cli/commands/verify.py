import argparse

from tkcore.cli.deps import (build_query_spec, get_graph_repo, input_parser,
                             query_parser)
from tkcore.core.logging import get_logger
from tkcore.engine.query import run_query
from tkcore.schemas.query import Algorithm

logger = get_logger(__name__)

REFERENCE = Algorithm.BRUTE
CANDIDATES = (Algorithm.OTCD, Algorithm.TCD)


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "verify", parents=[input_parser(), query_parser()],
        help="check otcd and tcd against brute force")
    parser.set_defaults(handler=cmd_verify)


def diff_lines(name: str, got: set, expected: set) -> list[str]:
    lines = [f"- {name} [{ts},{te}] {fp}"
             for ts, te, fp in sorted(expected - got)]
    lines += [f"+ {name} [{ts},{te}] {fp}"
              for ts, te, fp in sorted(got - expected)]
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    """Compare (TTI, fingerprint) sets of every algorithm.

    `-` lines are cores the candidate missed, `+` lines cores it invented.
    """
    graph = get_graph_repo(args).load()
    signatures = {}
    for algorithm in (REFERENCE, *CANDIDATES):
        spec = build_query_spec(args, algorithm, materialize=True)
        signatures[algorithm] = run_query(graph, spec).signatures()

    expected = signatures[REFERENCE]
    diff = []
    for algorithm in CANDIDATES:
        diff += diff_lines(algorithm.value, signatures[algorithm], expected)
    if diff:
        logger.error("verification failed with %d differing cores",
                     len(diff))
        print("MISMATCH")
        for line in diff:
            print(line)
        return 1
    print(f"MATCH {len(expected)} cores")
    return 0
