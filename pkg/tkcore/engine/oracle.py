"""Brute-force reference enumeration.

Every cell of the schedule is induced from scratch on the projected
graph, independent of the TEL and of the chained decompositions.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from collections import Counter, defaultdict
from typing import Sequence

from tkcore.core.errors import OracleInconsistencyError
from tkcore.core.logging import get_logger
from tkcore.engine.decomposition import simple_core_decompose
from tkcore.engine.results import ResultSet
from tkcore.models.graph import (TemporalEdge, TemporalGraph,
                                 edge_fingerprint, pair_key)
from tkcore.schemas.core import CoreSummary
from tkcore.schemas.interval import TimeInterval
from tkcore.schemas.query import QuerySpec

logger = get_logger(__name__)


def induce_core(edges: Sequence[TemporalEdge], k: int, sigma: int = 1
                ) -> list[TemporalEdge]:
    """Temporal k-core edges of an already projected edge list."""
    counts = Counter(pair_key(u, v) for u, v, _ in edges)
    strong = {pair for pair, count in counts.items() if count >= sigma}
    adjacency: dict[int, set[int]] = defaultdict(set)
    for a, b in strong:
        adjacency[a].add(b)
        adjacency[b].add(a)
    core = simple_core_decompose(adjacency, k)
    return [e for e in edges
            if e.u in core and e.v in core and pair_key(e.u, e.v) in strong]


def brute_force_core(graph: TemporalGraph, k: int, interval: TimeInterval,
                     sigma: int = 1) -> list[TemporalEdge]:
    lo = bisect_left(graph.timestamps, interval.ts)
    hi = bisect_right(graph.timestamps, interval.te)
    return induce_core(graph.edges[lo:hi], k, sigma)


def brute_force_enumerate(graph: TemporalGraph, spec: QuerySpec) -> ResultSet:
    results = ResultSet(spec)
    stats = results.stats
    domain = graph.domain_within(spec.range)
    n = len(domain)
    stats.cells_total = n * (n + 1) // 2

    by_fingerprint: dict[str, tuple[int, int]] = {}
    for i, ts in enumerate(domain):
        for te in domain[i:]:
            core = brute_force_core(graph, spec.k, TimeInterval(ts=ts, te=te),
                                    spec.sigma)
            stats.cells_visited += 1
            stats.tcd_ops += 1
            if not core:
                stats.empties += 1
                continue
            stats.nonempty_inductions += 1
            fingerprint = edge_fingerprint(core)
            tti = (min(e.t for e in core), max(e.t for e in core))
            seen = by_fingerprint.setdefault(fingerprint, tti)
            if seen != tti:
                raise OracleInconsistencyError(
                    f"one edge set reported with TTIs {seen} and {tti}")
            if tti in results:
                stats.duplicate_inductions += 1
                continue
            vertices = sorted({x for e in core for x in (e.u, e.v)})
            results.add(CoreSummary(
                tti=TimeInterval(ts=tti[0], te=tti[1]),
                vertex_count=len(vertices),
                edge_count=len(core),
                vertices=vertices if spec.materialize else None,
                edges=list(core) if spec.materialize else None,
                fingerprint=fingerprint
            ))

    if len(by_fingerprint) != len(results):
        logger.error("fingerprint dedup found %d cores, TTI dedup %d",
                     len(by_fingerprint), len(results))
        raise OracleInconsistencyError(
            f"{len(by_fingerprint)} distinct edge sets but "
            f"{len(results)} distinct TTIs")
    return results
