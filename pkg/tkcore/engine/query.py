from __future__ import annotations

import time
from typing import Callable

import networkx as nx

from tkcore.core.logging import get_logger
from tkcore.engine.enumeration import otcd_enumerate, tcd_enumerate
from tkcore.engine.oracle import brute_force_enumerate
from tkcore.engine.results import ResultSet
from tkcore.models.graph import TemporalGraph
from tkcore.schemas.core import CoreSummary
from tkcore.schemas.query import Algorithm, QuerySpec

try:
    import resource
except ImportError:  # not available on Windows
    resource = None

logger = get_logger(__name__)

Enumerator = Callable[[TemporalGraph, QuerySpec], ResultSet]

ALGORITHMS: dict[Algorithm, Enumerator] = {
    Algorithm.OTCD: otcd_enumerate,
    Algorithm.TCD: tcd_enumerate,
    Algorithm.BRUTE: brute_force_enumerate,
}


def run_query(graph: TemporalGraph, spec: QuerySpec) -> ResultSet:
    """Answer a temporal k-core query with the algorithm named in `spec`."""
    logger.info("query k=%d sigma=%d range=%s algo=%s",
                spec.k, spec.sigma, spec.range, spec.algorithm.value)
    started = time.perf_counter()
    results = ALGORITHMS[spec.algorithm](graph, spec)
    return finish_query(results, spec, started)


def finish_query(results: ResultSet, spec: QuerySpec,
                 started: float) -> ResultSet:
    """Stamp timing and memory, then apply the span constraints."""
    stats = results.stats
    stats.wall_time = time.perf_counter() - started
    stats.peak_rss_kb = peak_rss_kb()
    apply_constraints(results, spec)
    logger.info(
        "%d cores in %.3fs (%d tcd ops, %d cells visited, %.2f%% pruned)",
        len(results), stats.wall_time, stats.tcd_ops, stats.cells_visited,
        stats.pruned_percent)
    return results


def apply_constraints(results: ResultSet, spec: QuerySpec) -> None:
    if spec.max_span is not None:
        results.retain(lambda core: core.tti.span <= spec.max_span)
    if spec.top_n_shortest is not None:
        shortest = sorted(results.cores.values(),
                          key=lambda c: (c.tti.span, c.tti.ts, c.tti.te))
        keep = {c.tti.as_tuple() for c in shortest[:spec.top_n_shortest]}
        results.retain(lambda core: core.tti.as_tuple() in keep)


def peak_rss_kb() -> int | None:
    if resource is None:
        return None
    return int(resource.getrusage(resource.RUSAGE_SELF).ru_maxrss)


def connected_components(core: CoreSummary) -> list[set[int]]:
    """Vertex sets of the core's connected pieces, ordered by smallest id."""
    if not core.materialized:
        raise ValueError(f"core {core.tti} was not materialized")
    g = nx.Graph()
    g.add_nodes_from(core.vertices)
    g.add_edges_from((u, v) for u, v, _ in core.edges)
    return sorted((set(c) for c in nx.connected_components(g)), key=min)
