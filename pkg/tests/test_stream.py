import pytest

from tkcore.core.errors import OutOfOrderAppendError
from tkcore.engine.query import run_query
from tkcore.engine.stream import TemporalGraphStream
from tkcore.models.graph import TemporalGraph
from tkcore.schemas.query import Algorithm


def test_stream_query_matches_a_static_graph(e5_graph, make_spec):
    """Appending the last edges gives the static answer."""
    stream = TemporalGraphStream.from_graph(
        TemporalGraph.from_edges(e5_graph.edges[:4]))
    for u, v, t in e5_graph.edges[4:]:
        stream.add_edge(u, v, t)
    spec = make_spec(2, 1, 4, materialize=True)
    assert stream.query(spec).signatures() == \
        run_query(e5_graph, spec).signatures()


@pytest.mark.parametrize("seed", range(200))
def test_growing_a_graph_edge_by_edge(make_corpus_graph, make_spec, seed):
    """Build from 80% of the stream, append the rest, query every way."""
    graph = make_corpus_graph(seed)
    cut = int(len(graph.edges) * 0.8)
    stream = TemporalGraphStream.from_graph(
        TemporalGraph.from_edges(graph.edges[:cut]))
    for u, v, t in graph.edges[cut:]:
        stream.add_edge(u, v, t)
    for algorithm in Algorithm:
        spec = make_spec(2, graph.t_min, graph.t_max, algorithm=algorithm,
                         materialize=True)
        assert stream.query(spec).signatures() == \
            run_query(graph, spec).signatures()


def test_query_leaves_the_live_edges_alone(e5_graph, make_spec):
    """Queries work on a copy."""
    stream = TemporalGraphStream.from_graph(e5_graph)
    stream.query(make_spec(2, 2, 3))
    assert len(stream.tel) == 6
    assert stream.tel.to_edges() == list(e5_graph.edges)


def test_stream_rejects_edges_from_the_past(e5_graph):
    """Timestamps may not decrease."""
    stream = TemporalGraphStream.from_graph(e5_graph)
    with pytest.raises(OutOfOrderAppendError):
        stream.add_edge(0, 1, 2)


def test_stream_drops_self_loops(e5_graph):
    """A self-loop is counted, not stored."""
    stream = TemporalGraphStream.from_graph(e5_graph)
    stream.add_edge(2, 2, 9)
    assert stream.self_loops_dropped == 1
    assert len(stream.tel) == 6


def test_add_tl_opens_an_empty_timestamp(make_spec):
    """Edges can be appended after opening their TL."""
    stream = TemporalGraphStream()
    stream.add_tl(1)
    for u, v in ((0, 1), (1, 2), (0, 2)):
        stream.add_edge(u, v, 1)
    assert stream.vertex_count == 3
    assert stream.query(make_spec(2, 1, 1)).keys() == [(1, 1)]
    with pytest.raises(OutOfOrderAppendError):
        stream.add_tl(0)
