import argparse
import sys

from tkcore.cli.deps import get_graph_repo, input_parser


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "stats", parents=[input_parser()],
        help="print vertex, edge, span and timestamp counts")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.set_defaults(handler=cmd_stats)


def cmd_stats(args: argparse.Namespace) -> int:
    """Summarize the input graph."""
    stats = get_graph_repo(args).stats()
    if args.format == "json":
        print(stats.model_dump_json())
        return 0
    out = sys.stdout
    out.write(f"|V|={stats.vertex_count} |E|={stats.edge_count} "
              f"span_days={stats.span_days:.2f} "
              f"timestamps={stats.distinct_timestamps}\n")
    out.write(f"self_loops_dropped={stats.self_loops_dropped} "
              f"malformed_lines={stats.malformed_lines}\n")
    return 0
