"""Tests for graphs, instance assumptions and the graph file format."""

import io

import pytest

from core.exceptions import InstanceParseError, InvalidInstance
from reduction.graph import Graph, HamInstance, format_graph, load_graph_file, parse_graph_text
from tests.helpers.samples import DISCONNECTED_FILE, FOUR_CYCLE_FILE, PATH_FILE, SINGLE_EDGE_FILE


def test_graph_normalizes_edges():
    """Test that edges are stored low end first."""
    graph = Graph(3, frozenset({(3, 1), (2, 3)}))
    assert graph.sorted_edges == [(1, 3), (2, 3)]
    assert graph.has_edge(3, 1)
    assert not graph.has_edge(1, 2)
    assert graph.neighbors(3) == [1, 2]
    assert graph.degree(3) == 2


@pytest.mark.parametrize("vertex_count,edges,assumption", [
    (2, [(1, 1)], "self-loop"),
    (2, [(1, 3)], "vertex-range"),
    (0, [], "vertex-range"),
    (2, [(1, 2), (2, 1)], "duplicate-edge"),
])
def test_graph_errors(vertex_count, edges, assumption):
    """Test malformed edge lists."""
    with pytest.raises(InvalidInstance) as excinfo:
        Graph.from_edges(vertex_count, edges)
    assert excinfo.value.assumption == assumption


@pytest.mark.parametrize("vertex_count,edges,w,s,assumption", [
    (2, [(1, 2)], 1, 1, "endpoints"),
    (2, [(1, 2)], 1, 3, "endpoints"),
    (4, [(1, 2), (3, 4)], 1, 2, "connectivity"),
    (3, [(1, 2), (2, 3)], 1, 2, "degree"),
])
def test_instance_assumptions(vertex_count, edges, w, s, assumption):
    """Test every rejected instance shape."""
    with pytest.raises(InvalidInstance) as excinfo:
        HamInstance(Graph.from_edges(vertex_count, edges), w, s)
    assert excinfo.value.assumption == assumption


def test_excess(single_edge, four_cycle, diamond):
    """Test p = |E| - |V| + 1."""
    assert single_edge.excess == 0
    assert four_cycle.excess == 1
    assert diamond.excess == 2


def test_parse_graph_text(path_graph):
    """Test comments and the header line."""
    instance = parse_graph_text(PATH_FILE)
    assert instance == path_graph
    assert instance.endpoints == (1, 2)


@pytest.mark.parametrize("text", [
    "",
    "% only a comment\n",
    "2 1 1\n1 2\n",
    "2 2 1 2\n1 2\n",
    "2 1 1 2\n1 x\n",
    "2 1 1 2\n1 2 3\n",
])
def test_parse_errors(text):
    """Test malformed graph files."""
    with pytest.raises(InstanceParseError):
        parse_graph_text(text)


def test_parse_rejects_disconnected_graph():
    """Test that assumption checks run on parsed files."""
    with pytest.raises(InvalidInstance):
        parse_graph_text(DISCONNECTED_FILE)


def test_format_graph_round_trip():
    """Test the graph file printer."""
    instance = parse_graph_text(FOUR_CYCLE_FILE)
    assert format_graph(instance) == "4 4 1 3\n1 2\n1 4\n2 3\n3 4\n"
    assert parse_graph_text(format_graph(instance)) == instance


def test_load_graph_file(graph_file, single_edge, monkeypatch, tmp_path):
    """Test loading from a path, stdin and a missing file."""
    assert load_graph_file(graph_file(SINGLE_EDGE_FILE)) == single_edge
    monkeypatch.setattr("sys.stdin", io.StringIO(SINGLE_EDGE_FILE))
    assert load_graph_file("-") == single_edge
    with pytest.raises(InstanceParseError):
        load_graph_file(tmp_path / "missing.txt")
