import argparse
import csv
import sys

from tkcore.cli.deps import (build_query_spec, get_graph_repo, input_parser,
                             query_parser, resolve_point)
from tkcore.engine.query import connected_components, run_query
from tkcore.models.graph import TemporalGraph
from tkcore.schemas.interval import TimeInterval
from tkcore.schemas.query import Algorithm, QuerySpec

COLUMNS = ("algo", "k", "sigma", "ts", "te", "span", "runtime_s", "cores",
           "components", "pruned_percent", "tcd_ops")


def register(subparsers) -> None:
    parser = subparsers.add_parser(
        "bench", parents=[input_parser(), query_parser()],
        help="time algorithms over a sweep of k or range spans (CSV)")
    parser.add_argument("--k-range", type=parse_k_range,
                        help="inclusive sweep of k, e.g. 2..6")
    parser.add_argument("--span-steps", type=parse_span_steps,
                        help="comma-separated spans; te = ts + span")
    parser.add_argument("--algo", type=parse_algorithms,
                        default=(Algorithm.OTCD, Algorithm.TCD),
                        help="comma-separated algorithms (default: otcd,tcd)")
    parser.set_defaults(handler=cmd_bench)


def parse_k_range(text: str) -> range:
    lo, sep, hi = text.partition("..")
    try:
        lo_k, hi_k = int(lo), int(hi if sep else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    if lo_k > hi_k:
        raise argparse.ArgumentTypeError(f"empty k range {text!r}")
    return range(lo_k, hi_k + 1)


def parse_span_steps(text: str) -> list[int]:
    try:
        return [int(step) for step in text.split(",") if step]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected integers, got {text!r}")


def parse_algorithms(text: str) -> tuple[Algorithm, ...]:
    try:
        return tuple(Algorithm(name.strip()) for name in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown algorithm in {text!r}")


def sweep_points(args: argparse.Namespace, k: int, ts: int, te: int
                 ) -> list[tuple[int, int, int]]:
    ks = list(args.k_range) if args.k_range else [k]
    if args.span_steps:
        ends = [ts + span for span in args.span_steps]
    else:
        ends = [te]
    return [(k_, ts, end) for k_ in ks for end in ends]


def count_components(graph: TemporalGraph, spec: QuerySpec) -> int:
    """Components over all cores, from an untimed materialized run."""
    results = run_query(graph, spec.model_copy(update={"materialize": True}))
    return sum(len(connected_components(core)) for core in results.ordered())


def cmd_bench(args: argparse.Namespace) -> int:
    """One CSV row per (algorithm, k, span) point, in sweep order.

    runtime_s comes from a lean run; cores are only materialized afterwards
    to count their components.
    """
    if args.k is None and args.k_range:
        args.k = args.k_range[0]
    if args.te is None and args.span_steps and args.ts is not None:
        args.te = args.ts + args.span_steps[0]
    k, ts, te = resolve_point(args)
    graph = get_graph_repo(args).load()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(COLUMNS)
    for algorithm in args.algo:
        for k_, ts_, te_ in sweep_points(args, k, ts, te):
            spec = build_query_spec(
                args, algorithm, k=k_, range=TimeInterval(ts=ts_, te=te_))
            results = run_query(graph, spec)
            components = count_components(graph, spec)
            stats = results.stats
            writer.writerow((
                algorithm.value, k_, spec.sigma, ts_, te_, te_ - ts_,
                f"{stats.wall_time:.6f}", len(results), components,
                f"{stats.pruned_percent:.2f}", stats.tcd_ops))
    return 0
