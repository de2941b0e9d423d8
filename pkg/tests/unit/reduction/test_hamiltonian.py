"""Tests for the brute-force Hamiltonian path oracle."""

from reduction.hamiltonian import brute_force_ham, enumerate_ham_paths


def test_single_edge(single_edge):
    """Test both orientations of one edge."""
    assert enumerate_ham_paths(single_edge) == [(1, 2), (2, 1)]
    assert brute_force_ham(single_edge) == 2


def test_path(path_graph):
    """Test the path 1 - 3 - 2."""
    assert enumerate_ham_paths(path_graph) == [(1, 3, 2), (2, 3, 1)]


def test_four_cycle_has_no_path(four_cycle):
    """Test opposite endpoints of a 4-cycle."""
    assert brute_force_ham(four_cycle) == 0


def test_diamond(diamond):
    """Test a graph with two paths in each direction."""
    assert enumerate_ham_paths(diamond) == [(1, 2, 3, 4), (1, 3, 2, 4), (4, 2, 3, 1), (4, 3, 2, 1)]


def test_k4_with_tail(k4_with_tail):
    """Test that every path ends through the pendant edge."""
    paths = enumerate_ham_paths(k4_with_tail)
    assert (1, 3, 2, 4, 5) in paths
    assert len(paths) == 4
    assert all({path[0], path[-1]} == {1, 5} for path in paths)
