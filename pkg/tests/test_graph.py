from tkcore.models.graph import TemporalEdge, TemporalGraph, graph_stats
from tkcore.schemas.interval import TimeInterval


def test_from_edges_sorts_stably_by_time():
    """Edges are ordered by timestamp, ties kept in input order."""
    graph = TemporalGraph.from_edges([(0, 1, 3), (1, 2, 1), (2, 0, 3),
                                      (0, 2, 1)])
    assert graph.edges == (
        TemporalEdge(1, 2, 1), TemporalEdge(0, 2, 1),
        TemporalEdge(0, 1, 3), TemporalEdge(2, 0, 3)
    )


def test_from_edges_drops_self_loops():
    """Self-loops never enter the graph but are counted."""
    graph = TemporalGraph.from_edges([(0, 0, 1), (0, 1, 2)])
    assert len(graph) == 1
    assert graph.self_loops_dropped == 1


def test_project_keeps_the_interval_only(e5_graph):
    """Projection to [2,3] keeps the three edges stamped 2 or 3."""
    projected = e5_graph.project(TimeInterval(ts=2, te=3))
    assert [e.t for e in projected.edges] == [2, 3, 3]
    assert projected.vertex_count == e5_graph.vertex_count


def test_project_outside_the_timeline_is_empty(e5_graph):
    """Nothing happens after the last timestamp."""
    assert len(e5_graph.project(TimeInterval(ts=10, te=20))) == 0


def test_timeline_domain_lists_distinct_timestamps(gap_graph):
    """Only timestamps that carry edges are in the domain."""
    assert gap_graph.timeline_domain == (2, 3)
    assert gap_graph.domain_within(TimeInterval(ts=1, te=4)) == [2, 3]
    assert gap_graph.domain_within(TimeInterval(ts=3, te=9)) == [3]


def test_graph_stats_toy(e5_graph):
    """Four vertices, six edges and four distinct timestamps."""
    stats = graph_stats(e5_graph)
    assert stats.vertex_count == 4
    assert stats.edge_count == 6
    assert stats.distinct_timestamps == 4


def test_graph_stats_empty():
    """An empty graph reports zeros."""
    stats = graph_stats(TemporalGraph.empty())
    assert stats.vertex_count == 0
    assert stats.edge_count == 0
    assert stats.span_days == 0.0
    assert stats.distinct_timestamps == 0


def test_span_days_uses_raw_seconds():
    """Two days between first and last edge."""
    graph = TemporalGraph.from_edges([(0, 1, 1), (1, 2, 1 + 2 * 86400)])
    assert graph_stats(graph).span_days == 2.0
