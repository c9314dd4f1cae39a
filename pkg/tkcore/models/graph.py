"""Temporal multigraph vocabulary shared by every module."""
from __future__ import annotations

import hashlib
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from functools import cached_property
from operator import attrgetter
from typing import Iterable, NamedTuple

from tkcore.schemas.interval import TimeInterval
from tkcore.schemas.stats import GraphStats

SECONDS_PER_DAY = 86400


class TemporalEdge(NamedTuple):
    """(u, v, t) in input orientation; undirected for all degree semantics."""
    u: int
    v: int
    t: int


def pair_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def canonical_edges(edges: Iterable[tuple[int, int, int]]
                    ) -> list[tuple[int, int, int]]:
    return sorted((*pair_key(u, v), t) for u, v, t in edges)


def edge_fingerprint(edges: Iterable[tuple[int, int, int]]) -> str:
    """Digest of an edge multiset, blind to order and to u/v orientation."""
    digest = hashlib.sha256()
    for u, v, t in canonical_edges(edges):
        digest.update(f"{u},{v},{t};".encode())
    return digest.hexdigest()


@dataclass(frozen=True)
class TemporalGraph:
    """Immutable multiset of timestamped undirected edges.

    Vertices are dense ids 0..vertex_count-1; `labels[i]` is the external
    id vertex i was interned from. Timestamps are stored as loaded
    (normalized offsets unless normalization was disabled); `t_offset`
    converts them back to raw units.
    """
    vertex_count: int
    edges: tuple[TemporalEdge, ...]
    labels: tuple[int, ...] = ()
    t_offset: int = 0
    self_loops_dropped: int = 0
    malformed_lines: int = 0
    _sorted: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not self._sorted:
            ordered = tuple(sorted(self.edges, key=attrgetter("t")))
            object.__setattr__(self, "edges", ordered)
            object.__setattr__(self, "_sorted", True)
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(range(self.vertex_count)))

    @classmethod
    def from_edges(
            cls,
            edges: Iterable[tuple[int, int, int]],
            vertex_count: int | None = None
    ) -> TemporalGraph:
        """Build from (u, v, t) triples over dense ids; self-loops dropped."""
        kept = []
        loops = 0
        for u, v, t in edges:
            if u == v:
                loops += 1
                continue
            kept.append(TemporalEdge(u, v, t))
        if vertex_count is None:
            vertex_count = 1 + max(
                (max(e.u, e.v) for e in kept), default=-1)
        return cls(vertex_count=vertex_count, edges=tuple(kept),
                   self_loops_dropped=loops)

    @classmethod
    def empty(cls) -> TemporalGraph:
        return cls(vertex_count=0, edges=())

    @cached_property
    def timestamps(self) -> list[int]:
        return [e.t for e in self.edges]

    @cached_property
    def timeline_domain(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.timestamps)))

    @property
    def t_min(self) -> int | None:
        return self.edges[0].t if self.edges else None

    @property
    def t_max(self) -> int | None:
        return self.edges[-1].t if self.edges else None

    def __len__(self) -> int:
        return len(self.edges)

    def project(self, interval: TimeInterval) -> TemporalGraph:
        """The projected graph over `interval` (same vertex id space)."""
        lo = bisect_left(self.timestamps, interval.ts)
        hi = bisect_right(self.timestamps, interval.te)
        return TemporalGraph(
            vertex_count=self.vertex_count,
            edges=self.edges[lo:hi],
            labels=self.labels,
            t_offset=self.t_offset,
            _sorted=True
        )

    def domain_within(self, interval: TimeInterval) -> list[int]:
        domain = self.timeline_domain
        lo = bisect_left(domain, interval.ts)
        hi = bisect_right(domain, interval.te)
        return list(domain[lo:hi])

    def raw_time(self, t: int) -> int:
        return t + self.t_offset


def graph_stats(graph: TemporalGraph) -> GraphStats:
    if not graph.edges:
        return GraphStats(
            self_loops_dropped=graph.self_loops_dropped,
            malformed_lines=graph.malformed_lines
        )
    return GraphStats(
        vertex_count=graph.vertex_count,
        edge_count=len(graph.edges),
        span_days=(graph.t_max - graph.t_min) / SECONDS_PER_DAY,
        distinct_timestamps=len(graph.timeline_domain),
        self_loops_dropped=graph.self_loops_dropped,
        malformed_lines=graph.malformed_lines
    )
