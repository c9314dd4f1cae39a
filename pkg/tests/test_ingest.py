import gzip
import io

import pytest

from tkcore.core.errors import (EmptyGraphError, InputError,
                                MalformedInputError, UsageError)
from tkcore.repositories.graph_repo import (GraphRepository, parse_edge_list,
                                            write_edge_list)
from tkcore.schemas.query import ColumnOrder, ParseConfig


def parse(text: str, **config):
    return parse_edge_list(io.BytesIO(text.encode()), ParseConfig(**config))


def test_normalization_makes_one_based_offsets():
    """Epoch seconds become offsets starting at 1."""
    graph = parse("1 2 1082040961\n2 3 1082041000\n")
    assert [e.t for e in graph.edges] == [1, 40]
    assert graph.raw_time(40) == 1082041000


def test_raw_timestamps_are_kept_without_normalization():
    """normalize=False keeps what the file says."""
    graph = parse("1 2 100\n2 3 105\n", normalize=False)
    assert [e.t for e in graph.edges] == [100, 105]


def test_vertices_are_interned_by_first_appearance():
    """External ids map to 0, 1, 2 in reading order."""
    graph = parse("70 30 5\n30 90 6\n")
    assert graph.labels == (70, 30, 90)
    assert [(e.u, e.v) for e in graph.edges] == [(0, 1), (1, 2)]


def test_comments_and_blank_lines_are_skipped():
    """Both '#' and '%' start a comment."""
    graph = parse("# header\n% konect\n\n1 2 3\n")
    assert len(graph) == 1
    assert graph.malformed_lines == 0


def test_self_loops_are_dropped_and_counted():
    """'5 5 10' never becomes an edge."""
    graph = parse("5 5 10\n1 2 11\n")
    assert graph.self_loops_dropped == 1
    assert len(graph) == 1
    assert 5 not in graph.labels


def test_unsorted_input_is_sorted_stably():
    """Edges come out in time order."""
    graph = parse("1 2 9\n2 3 3\n3 1 9\n", normalize=False)
    assert [(e.u, e.v, e.t) for e in graph.edges] == [
        (1, 2, 3), (0, 1, 9), (2, 0, 9)]


def test_weight_column_is_ignored():
    """src dst weight time reads the fourth field as the timestamp."""
    graph = parse("1 2 1 500\n2 3 7 520\n", normalize=False,
                  column_order=ColumnOrder.SRC_DST_W_T)
    assert [e.t for e in graph.edges] == [500, 520]


def test_malformed_lines_fail_the_parse():
    """Non-integer and negative timestamps are malformed."""
    with pytest.raises(MalformedInputError) as exc_info:
        parse("1 2 x\n1 2 3\n4 5 -1\n")
    assert exc_info.value.count == 2
    assert exc_info.value.line_numbers == [1, 3]


def test_lenient_parsing_skips_malformed_lines():
    """The bad lines are counted instead."""
    graph = parse("1 2 x\n1 2 3\n7 8\n", lenient=True)
    assert len(graph) == 1
    assert graph.malformed_lines == 2


def test_empty_input_is_an_error():
    """Comments alone do not make a graph."""
    with pytest.raises(EmptyGraphError):
        parse("# nothing here\n")


def test_written_graph_parses_back_identically():
    """Writing labels and raw times round-trips."""
    graph = parse("10 20 1000\n20 30 1000\n10 30 1500\n")
    out = io.StringIO()
    write_edge_list(graph, out)
    assert out.getvalue() == "10 20 1000\n20 30 1000\n10 30 1500\n"
    assert parse(out.getvalue()) == graph


def test_repository_reads_gzip_like_plain(tmp_path, e5_file):
    """Compression is picked by suffix."""
    packed = tmp_path / "e5.txt.gz"
    with gzip.open(packed, "wb") as fh:
        fh.write(e5_file.read_bytes())
    plain = GraphRepository(e5_file).load()
    assert GraphRepository(packed).load() == plain
    assert GraphRepository(packed).stats() == GraphRepository(e5_file).stats()


def test_repository_loads_once(e5_file, mocker):
    """The parsed graph is cached."""
    spy = mocker.spy(GraphRepository, "_open")
    repo = GraphRepository(e5_file)
    assert repo.load() is repo.load()
    assert spy.call_count == 1


def test_repository_missing_file(tmp_path):
    """A missing path is a usage error."""
    with pytest.raises(UsageError):
        GraphRepository(tmp_path / "nope.txt").load()


def test_toy_file_stats(e5_file):
    """Four vertices and six edges."""
    stats = GraphRepository(e5_file).stats()
    assert stats.vertex_count == 4
    assert stats.edge_count == 6
    assert stats.distinct_timestamps == 4


def test_plain_text_with_a_gz_suffix_is_an_input_error(tmp_path, e5_file):
    """The gzip reader's complaint becomes an InputError."""
    fake = tmp_path / "e5.txt.gz"
    fake.write_bytes(e5_file.read_bytes())
    with pytest.raises(InputError, match="cannot read"):
        GraphRepository(fake).load()


def test_unreadable_file_is_an_input_error(e5_file, mocker):
    """OS-level failures do not escape as raw OSErrors."""
    mocker.patch.object(GraphRepository, "_open",
                        side_effect=PermissionError("permission denied"))
    with pytest.raises(InputError, match="permission denied"):
        GraphRepository(e5_file).load()
