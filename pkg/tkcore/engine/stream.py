from __future__ import annotations

import time

from tkcore.core.logging import get_logger
from tkcore.engine.enumeration import enumerate_cores
from tkcore.engine.oracle import brute_force_enumerate
from tkcore.engine.query import finish_query
from tkcore.engine.results import ResultSet
from tkcore.models.graph import TemporalGraph
from tkcore.models.tel import TEL, TLNode
from tkcore.schemas.query import Algorithm, QuerySpec

logger = get_logger(__name__)


class TemporalGraphStream:
    """An append-only temporal graph that can be queried at any point.

    New edges go to the tail of the live TEL; queries run on a clone, so
    the live structure is never trimmed.
    """

    def __init__(self, tel: TEL | None = None):
        self.tel = tel if tel is not None else TEL()
        self.self_loops_dropped = 0

    @classmethod
    def from_graph(cls, graph: TemporalGraph) -> TemporalGraphStream:
        return cls(TEL.build(graph))

    @property
    def vertex_count(self) -> int:
        return self.tel.vertex_count

    def add_tl(self, t: int) -> TLNode:
        return self.tel.add_tl(t)

    def add_edge(self, u: int, v: int, t: int) -> None:
        if u == v:
            self.self_loops_dropped += 1
            logger.warning("dropping self-loop (%d, %d, %d)", u, v, t)
            return
        self.tel.add_edge(u, v, t)

    def snapshot(self) -> TemporalGraph:
        return TemporalGraph.from_edges(self.tel.to_edges())

    def query(self, spec: QuerySpec) -> ResultSet:
        started = time.perf_counter()
        if spec.algorithm is Algorithm.BRUTE:
            results = brute_force_enumerate(self.snapshot(), spec)
        else:
            results = enumerate_cores(
                self.tel.clone(), spec,
                pruning=spec.algorithm is Algorithm.OTCD)
        return finish_query(results, spec, started)
