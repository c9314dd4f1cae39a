from __future__ import annotations

from typing import Callable, Iterator

from tkcore.models.graph import edge_fingerprint
from tkcore.models.tel import TEL
from tkcore.schemas.core import CoreSummary
from tkcore.schemas.query import QuerySpec
from tkcore.schemas.stats import QueryStats


class ResultSet:
    """Distinct cores of one query, keyed by TTI, plus run counters."""

    def __init__(self, spec: QuerySpec):
        self.spec = spec
        self.cores: dict[tuple[int, int], CoreSummary] = {}
        self.stats = QueryStats()

    def ordered(self) -> list[CoreSummary]:
        return [self.cores[key] for key in sorted(self.cores)]

    def __iter__(self) -> Iterator[CoreSummary]:
        return iter(self.ordered())

    def __len__(self) -> int:
        return len(self.cores)

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self.cores

    def keys(self) -> list[tuple[int, int]]:
        return sorted(self.cores)

    def signatures(self) -> set[tuple[int, int, str | None]]:
        """(ts, te, fingerprint) triples used for cross-run comparison."""
        return {(c.tti.ts, c.tti.te, c.fingerprint)
                for c in self.cores.values()}

    def retain(self, keep: Callable[[CoreSummary], bool]) -> None:
        self.cores = {key: core for key, core in self.cores.items()
                      if keep(core)}

    def add(self, core: CoreSummary) -> bool:
        key = core.tti.as_tuple()
        if key in self.cores:
            return False
        self.cores[key] = core
        return True


def summarize(tel: TEL, materialize: bool) -> CoreSummary:
    tti = tel.get_tti()
    if not materialize:
        return CoreSummary(tti=tti, vertex_count=tel.vertex_count,
                           edge_count=tel.edge_count)
    edges = tel.to_edges()
    return CoreSummary(
        tti=tti,
        vertex_count=tel.vertex_count,
        edge_count=tel.edge_count,
        vertices=sorted(tel.vertices),
        edges=edges,
        fingerprint=edge_fingerprint(edges)
    )


def register_result(results: ResultSet, tel: TEL, spec: QuerySpec) -> bool:
    """Collect the core held by `tel` unless its TTI was already seen."""
    tti = tel.get_tti()
    assert tti is not None, "register_result needs a nonempty TEL"
    if tti.as_tuple() in results.cores:
        return False
    return results.add(summarize(tel, spec.materialize))
