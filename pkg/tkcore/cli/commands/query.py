import argparse
import sys

from tkcore.cli.deps import (build_query_spec, get_graph_repo, input_parser,
                             query_parser)
from tkcore.cli.report import WRITERS
from tkcore.engine.query import run_query
from tkcore.schemas.query import Algorithm


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "query", parents=[input_parser(), query_parser()],
        help="list every distinct temporal k-core of a range")
    parser.add_argument(
        "--algo", choices=[a.value for a in Algorithm],
        default=Algorithm.OTCD.value)
    parser.add_argument("--max-span", type=int,
                        help="drop cores whose TTI is longer than this")
    parser.add_argument("--top-shortest", type=int,
                        help="keep only the N cores with the shortest TTI")
    parser.add_argument(
        "--materialize", action="store_true",
        help="keep core edge lists and report connected components")
    parser.add_argument("--format", choices=sorted(WRITERS), default="json")
    parser.set_defaults(handler=cmd_query)


def cmd_query(args: argparse.Namespace) -> int:
    """Run one query and print its cores followed by the run counters.

    An empty result still exits 0.
    """
    spec = build_query_spec(
        args, Algorithm(args.algo),
        max_span=args.max_span,
        top_n_shortest=args.top_shortest,
        materialize=args.materialize
    )
    graph = get_graph_repo(args).load()
    results = run_query(graph, spec)
    WRITERS[args.format](results, sys.stdout)
    return 0
