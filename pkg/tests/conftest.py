# tests/conftest.py
import random

import pytest

from tkcore.models.graph import TemporalGraph
from tkcore.schemas.interval import TimeInterval
from tkcore.schemas.query import Algorithm, QuerySpec

A, B, C, D = 0, 1, 2, 3

E5_LINES = """\
# toy graph: a=10 b=20 c=30 d=40
10 20 1
20 30 1
10 30 2
30 40 3
20 40 3
10 40 4
"""


@pytest.fixture
def e5_graph() -> TemporalGraph:
    """Six edges over four vertices and timestamps 1..4."""
    return TemporalGraph.from_edges([
        (A, B, 1), (B, C, 1), (A, C, 2), (C, D, 3), (B, D, 3), (A, D, 4)
    ])


@pytest.fixture
def gap_graph() -> TemporalGraph:
    """A triangle over timestamps {2, 3}; 1 and 4 carry no edge."""
    return TemporalGraph.from_edges([(A, B, 2), (B, C, 2), (A, C, 3)])


@pytest.fixture
def pruning_graph() -> TemporalGraph:
    """A triangle at t=2 between two lone x-y contacts at t=1 and t=3."""
    x, y = 3, 4
    return TemporalGraph.from_edges([
        (x, y, 1), (A, B, 2), (B, C, 2), (A, C, 2), (x, y, 3)
    ])


@pytest.fixture
def duplicate_graph() -> TemporalGraph:
    """Triangle X at t=5 and triangle Q spread over t=2 and t=9.

    With k=2 over [2, 9] the core of X is found from row 2 and then again
    from the head of row 5, which no rule covers.
    """
    x1, x2, x3, q1, q2, q3 = range(6)
    return TemporalGraph.from_edges([
        (x1, x2, 5), (x2, x3, 5), (x1, x3, 5),
        (q1, q2, 2), (q2, q3, 9), (q1, q3, 9)
    ])


@pytest.fixture
def e5_file(tmp_path):
    path = tmp_path / "e5.txt"
    path.write_text(E5_LINES)
    return path


def random_graph(seed: int, max_vertices: int = 12, max_edges: int = 40,
                 max_timestamps: int = 8) -> TemporalGraph:
    rng = random.Random(seed)
    n = rng.randint(3, max_vertices)
    timestamps = sorted(rng.sample(range(1, 3 * max_timestamps),
                                   rng.randint(1, max_timestamps)))
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        u, v = rng.sample(range(n), 2)
        edges.append((u, v, rng.choice(timestamps)))
    return TemporalGraph.from_edges(edges, vertex_count=n)


@pytest.fixture
def make_random_graph():
    return random_graph


def corpus_graph(seed: int) -> TemporalGraph:
    """Up to 30 vertices, 300 edges and 20 distinct timestamps."""
    return random_graph(seed, max_vertices=30, max_edges=300,
                        max_timestamps=20)


@pytest.fixture
def make_corpus_graph():
    return corpus_graph


@pytest.fixture
def make_spec():
    def _make(k: int, ts: int, te: int, **fields) -> QuerySpec:
        fields.setdefault("algorithm", Algorithm.OTCD)
        return QuerySpec(k=k, range=TimeInterval(ts=ts, te=te), **fields)
    return _make
