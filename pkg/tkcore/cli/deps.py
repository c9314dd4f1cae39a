"""Flag groups and object factories shared by the commands."""
from __future__ import annotations

import argparse

from tkcore.core.errors import UsageError
from tkcore.engine.catalog import get_reference_query
from tkcore.repositories.graph_repo import GraphRepository
from tkcore.schemas.interval import TimeInterval
from tkcore.schemas.query import Algorithm, ColumnOrder, ParseConfig, QuerySpec


def input_parser() -> argparse.ArgumentParser:
    """Parent parser: the input file plus the parse flags."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("file", help="edge list, optionally .gz")
    parser.add_argument(
        "--column-order",
        choices=[order.value for order in ColumnOrder],
        default=ColumnOrder.SRC_DST_T.value,
        help="layout of each line (weight column is ignored)")
    parser.add_argument(
        "--raw-ts", action="store_true",
        help="keep timestamps as written instead of 1-based offsets")
    parser.add_argument(
        "--lenient", action="store_true",
        help="skip malformed lines instead of failing")
    parser.add_argument(
        "--comment-prefixes", default="#%",
        help="characters that start a comment line (default: '#%%')")
    return parser


def query_parser() -> argparse.ArgumentParser:
    """Parent parser: the query point flags."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--k", type=int, help="minimum distinct degree")
    parser.add_argument("--ts", type=int, help="query range start")
    parser.add_argument("--te", type=int, help="query range end")
    parser.add_argument(
        "--min-strength", type=int, default=1, dest="sigma",
        help="minimum parallel edges per linked pair (default: 1)")
    parser.add_argument(
        "--preset", type=int,
        help="take k, ts and te from a published benchmark query")
    return parser


def get_parse_config(args: argparse.Namespace) -> ParseConfig:
    return ParseConfig(
        column_order=ColumnOrder(args.column_order),
        comment_prefixes=frozenset(args.comment_prefixes),
        normalize=not args.raw_ts,
        lenient=args.lenient
    )


def get_graph_repo(args: argparse.Namespace) -> GraphRepository:
    return GraphRepository(args.file, get_parse_config(args))


def resolve_point(args: argparse.Namespace) -> tuple[int, int, int]:
    """(k, ts, te) from explicit flags, falling back to --preset."""
    k, ts, te = args.k, args.ts, args.te
    if args.preset is not None:
        preset = get_reference_query(args.preset)
        k = preset.k if k is None else k
        ts = preset.ts if ts is None else ts
        te = preset.te if te is None else te
    missing = [name for name, value in (("--k", k), ("--ts", ts), ("--te", te))
               if value is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)} (or use --preset)")
    return k, ts, te


def build_query_spec(args: argparse.Namespace, algorithm: Algorithm,
                     **overrides) -> QuerySpec:
    k, ts, te = resolve_point(args)
    fields = dict(
        k=k,
        range=TimeInterval(ts=ts, te=te),
        sigma=args.sigma,
        algorithm=algorithm,
    )
    fields.update(overrides)
    return QuerySpec(**fields)
