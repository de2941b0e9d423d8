"""Tests for symbol multisets and FMO instances."""

import pytest

from core.exceptions import InvalidInstance, MalformedTree
from multiset.models import FmoInstance, SolutionSet, SymbolMultiset


def test_multiset_construction():
    """Test both constructor forms and zero dropping."""
    assert SymbolMultiset("abba") == SymbolMultiset({"a": 2, "b": 2})
    assert SymbolMultiset({"a": 1, "b": 0}) == SymbolMultiset.of("a")
    assert list(SymbolMultiset.of("c", "a", "b")) == ["a", "b", "c"]
    assert SymbolMultiset().size == 0


@pytest.mark.parametrize("counts", [{"a": -1}, {"a": 1.5}, {"a": True}])
def test_multiset_rejects_bad_counts(counts):
    """Test multiplicity validation."""
    with pytest.raises(ValueError):
        SymbolMultiset(counts)


def test_multiset_rejects_bad_symbols():
    """Test token validation."""
    with pytest.raises(MalformedTree):
        SymbolMultiset(["a b"])


def test_multiset_arithmetic():
    """Test containment, sum and difference."""
    small = SymbolMultiset("ab")
    large = SymbolMultiset("aabc")
    assert small <= large
    assert not large <= small
    assert not SymbolMultiset("bb") <= large
    assert small + large == SymbolMultiset("aaabbc")
    assert large - small == SymbolMultiset("ac")
    with pytest.raises(ValueError):
        small - large


def test_multiset_accessors():
    """Test counts, size, elements and rendering."""
    multiset = SymbolMultiset.parikh(("b", "a", "b"))
    assert multiset.count("b") == 2
    assert multiset.count("z") == 0
    assert multiset.size == 3
    assert multiset.elements() == ["a", "b", "b"]
    assert multiset.to_dict() == {"a": 1, "b": 2}
    assert repr(multiset) == "{a, b, b}"


def test_multiset_hash_matches_equality():
    """Test that equal multisets hash equally."""
    assert hash(SymbolMultiset("abb")) == hash(SymbolMultiset({"b": 2, "a": 1}))
    assert len({SymbolMultiset("ab"), SymbolMultiset("ba")}) == 1


def test_instance_coerces_members():
    """Test that plain mappings become multisets."""
    instance = FmoInstance({"a": 1, "b": 1}, ({"a": 1, "b": 1},))
    assert isinstance(instance.universe, SymbolMultiset)
    assert instance.family == (SymbolMultiset("ab"),)


def test_instance_rejects_empty_member():
    """Test the nonempty-member assumption."""
    with pytest.raises(InvalidInstance) as excinfo:
        FmoInstance(SymbolMultiset("ab"), (SymbolMultiset(),))
    assert excinfo.value.assumption == "empty-member"


def test_instance_rejects_uncontained_member():
    """Test the containment assumption, with multiplicity."""
    with pytest.raises(InvalidInstance) as excinfo:
        FmoInstance(SymbolMultiset("ab"), (SymbolMultiset("aa"),))
    assert excinfo.value.assumption == "containment"


def test_deduplicated_family_keeps_first_occurrence():
    """Test repeated family members."""
    instance = FmoInstance(SymbolMultiset("abc"), (SymbolMultiset("ab"), SymbolMultiset("bc"), SymbolMultiset("ba")))
    assert instance.deduplicated_family == (SymbolMultiset("ab"), SymbolMultiset("bc"))


def test_from_matrix():
    """Test the binary matrix view."""
    instance = FmoInstance.from_matrix([[1, 1, 0], [0, 0, 0], [0, 1, 1]])
    assert instance.universe == SymbolMultiset(["col1", "col2", "col3"])
    assert instance.family == (SymbolMultiset(["col1", "col2"]), SymbolMultiset(["col2", "col3"]))
    assert instance.to_matrix() == (["col1", "col2", "col3"], [[1, 1, 0], [0, 1, 1]])


@pytest.mark.parametrize("rows,columns", [
    ([[1, 2]], None),
    ([[1, 0], [1]], None),
    ([[1, 0]], ["x", "x"]),
])
def test_from_matrix_errors(rows, columns):
    """Test malformed matrices."""
    with pytest.raises(ValueError):
        FmoInstance.from_matrix(rows, columns)


def test_to_matrix_requires_set_universe():
    """Test that repeated symbols have no matrix view."""
    with pytest.raises(ValueError):
        FmoInstance(SymbolMultiset("aab")).to_matrix()


def test_solution_set_rendering():
    """Test the lexicographic text rendering."""
    solutions = SolutionSet.of([("b", "a"), ("a", "b")])
    assert list(solutions.lines()) == ["a b", "b a", "# count=2"]
    assert ("a", "b") in solutions
    assert solutions.complete
