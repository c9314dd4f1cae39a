from __future__ import annotations

import gzip
from pathlib import Path
from typing import IO, Iterable

from tkcore.core.errors import (EmptyGraphError, InputError,
                                MalformedInputError, UsageError)
from tkcore.core.logging import get_logger
from tkcore.models.graph import TemporalEdge, TemporalGraph, graph_stats
from tkcore.schemas.query import ColumnOrder, ParseConfig
from tkcore.schemas.stats import GraphStats

logger = get_logger(__name__)

# index of the timestamp field for each column layout
_TIME_COLUMN = {
    ColumnOrder.SRC_DST_T: 2,
    ColumnOrder.SRC_DST_W_T: 3,
}
_SHOWN_LINES = 5


def parse_edge_list(lines: Iterable[bytes | str],
                    config: ParseConfig = ParseConfig()) -> TemporalGraph:
    """Read whitespace-separated temporal edges into a TemporalGraph.

    Vertex ids are interned in order of first appearance and timestamps
    are rewritten as 1-based offsets when `config.normalize` is set.
    """
    time_col = _TIME_COLUMN[config.column_order]
    prefixes = tuple(config.comment_prefixes)
    ids: dict[int, int] = {}
    raw_edges: list[tuple[int, int, int]] = []
    loops = 0
    bad: list[int] = []

    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, bytes):
            line = line.decode("utf-8", errors="replace")
        line = line.strip()
        if not line or line.startswith(prefixes):
            continue
        fields = line.split()
        try:
            if len(fields) <= time_col:
                raise ValueError(line)
            src, dst, t = int(fields[0]), int(fields[1]), int(fields[time_col])
            if t < 0:
                raise ValueError(line)
        except ValueError:
            bad.append(lineno)
            continue
        if src == dst:
            loops += 1
            continue
        u = ids.setdefault(src, len(ids))
        v = ids.setdefault(dst, len(ids))
        raw_edges.append((u, v, t))

    if bad:
        if not config.lenient:
            raise MalformedInputError(len(bad), bad[:_SHOWN_LINES])
        logger.warning("skipped %d malformed line(s), first at line %d",
                       len(bad), bad[0])
    if loops:
        logger.warning("dropped %d self-loop(s)", loops)
    if not raw_edges:
        raise EmptyGraphError("input holds no usable temporal edge")

    offset = 0
    if config.normalize:
        offset = min(t for _, _, t in raw_edges) - 1
    edges = tuple(TemporalEdge(u, v, t - offset) for u, v, t in raw_edges)
    graph = TemporalGraph(
        vertex_count=len(ids),
        edges=edges,
        labels=tuple(ids),
        t_offset=offset,
        self_loops_dropped=loops,
        malformed_lines=len(bad)
    )
    logger.info("loaded %d edges over %d vertices, %d timestamps",
                len(graph), graph.vertex_count, len(graph.timeline_domain))
    return graph


def write_edge_list(graph: TemporalGraph, stream: IO[str]) -> None:
    """Write "label label raw_t" lines in timeline order."""
    labels = graph.labels
    for u, v, t in graph.edges:
        stream.write(f"{labels[u]} {labels[v]} {graph.raw_time(t)}\n")


class GraphRepository:
    """Loads one edge-list file, plain or gzip, and keeps the result."""

    def __init__(self, path: Path | str, config: ParseConfig = ParseConfig()):
        self.path = Path(path)
        self.config = config
        self._graph: TemporalGraph | None = None

    def _open(self) -> IO[bytes]:
        if not self.path.is_file():
            raise UsageError(f"input file not found: {self.path}")
        if self.path.suffix == ".gz":
            return gzip.open(self.path, "rb")
        return self.path.open("rb")

    def load(self) -> TemporalGraph:
        if self._graph is None:
            logger.info("reading %s", self.path)
            try:
                with self._open() as fh:
                    self._graph = parse_edge_list(fh, self.config)
            except (OSError, EOFError) as exc:
                # BadGzipFile and truncated archives land here too
                raise InputError(f"cannot read {self.path}: {exc}") from exc
        return self._graph

    def stats(self) -> GraphStats:
        return graph_stats(self.load())
