"""Frontier reading, enumeration and counting."""

import logging
import math
from collections import Counter
from itertools import chain, product
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence

from core.combinatorics import multiset_permutations
from core.exceptions import DuplicateLeafLabels, EnumerationBudgetExceeded
from core.settings import DEFAULT_ENUMERATION_LIMIT
from core.symbols import SymbolString
from pqtree.models import FrontierSet, NodeKind, PqNode, PqTree

logger = logging.getLogger(__name__)

StringFamily = FrozenSet[SymbolString]


class _Budget:
    """Shared cap on the size of every per-node string set."""

    def __init__(self, limit: Optional[int]):
        self.limit = DEFAULT_ENUMERATION_LIMIT if limit is None else limit
        if self.limit <= 0:
            raise ValueError(f"Enumeration limit must be positive, got {self.limit}")
        self.truncated = False


def frontier(tree: PqTree) -> SymbolString:
    """Leaf labels read left to right."""
    return tree.frontier()


def _child_orders(node: PqNode, child_sets: List[StringFamily]) -> Iterator[List[StringFamily]]:
    """Child orders that can produce different strings.

    A Q-node has its stored order and the reversal. A P-node has every
    permutation, but swapping two children with the same string set changes
    nothing, so only distinct arrangements of the set values are produced.
    """
    if node.kind is NodeKind.Q:
        yield child_sets
        if len(child_sets) > 1:
            yield child_sets[::-1]
        return
    distinct: Dict[StringFamily, int] = {}
    indices = [distinct.setdefault(strings, len(distinct)) for strings in child_sets]
    values = list(distinct)
    for arrangement in multiset_permutations(Counter(indices)):
        yield [values[index] for index in arrangement]


def _node_strings(node: PqNode, budget: _Budget) -> StringFamily:
    if node.is_leaf:
        return frozenset({(node.label,)})
    child_sets = [_node_strings(child, budget) for child in node.children]
    result = set()
    for order in _child_orders(node, child_sets):
        for pieces in product(*order):
            string = tuple(chain.from_iterable(pieces))
            if string in result:
                continue
            if len(result) >= budget.limit:
                budget.truncated = True
                return frozenset(result)
            result.add(string)
    return frozenset(result)


def enumerate_frontiers(tree: PqTree, limit: Optional[int] = None) -> FrontierSet:
    """Fr(T), built bottom-up with deduplication at every node.

    When a node's set would grow past ``limit`` the enumeration keeps the
    strings found so far and the result is marked incomplete; every member
    is still a genuine frontier.
    """
    budget = _Budget(limit)
    strings = _node_strings(tree.root, budget)
    if budget.truncated:
        logger.warning(f"Frontier enumeration truncated at {budget.limit:,} strings")
    else:
        logger.debug(f"Enumerated {len(strings):,} frontiers over {tree.leaf_count} leaves")
    return FrontierSet(strings=strings, complete=not budget.truncated)


def _count_distinct(node: PqNode) -> int:
    if node.is_leaf:
        return 1
    product_of_children = math.prod(_count_distinct(child) for child in node.children)
    if node.kind is NodeKind.P:
        return math.factorial(len(node.children)) * product_of_children
    # A Q-node with fewer than two children has a single order
    return (2 if len(node.children) > 1 else 1) * product_of_children


def count_frontiers_distinct(tree: PqTree) -> int:
    """|Fr(T)| by the post-order product formula; labels must be pairwise distinct."""
    if not tree.has_distinct_labels:
        repeated = sorted(label for label, count in tree.leaf_multiset.items() if count > 1)
        raise DuplicateLeafLabels(f"Leaf labels repeat: {', '.join(repeated)}")
    return _count_distinct(tree.root)


def _complete_strings(node: PqNode, limit: Optional[int]) -> StringFamily:
    budget = _Budget(limit)
    strings = _node_strings(node, budget)
    if budget.truncated:
        raise EnumerationBudgetExceeded(budget.limit, "frontier enumeration")
    return strings


def _split(string: SymbolString, lengths: Sequence[int]) -> Iterator[SymbolString]:
    start = 0
    for length in lengths:
        yield string[start:start + length]
        start += length


def _q_root_count(children: Sequence[PqNode], limit: Optional[int]) -> int:
    """|Fr| of a Q-node with at least two children without materializing it.

    For a fixed child order concatenation is injective (every child's strings
    have the same length), so each order contributes ∏|S_i| strings and only
    the overlap between the two orders has to be measured.
    """
    sets = [_complete_strings(child, limit) for child in children]
    lengths = [child.leaf_count for child in children]
    per_order = math.prod(len(strings) for strings in sets)

    if lengths == lengths[::-1]:
        overlap = math.prod(len(a & b) for a, b in zip(sets, reversed(sets)))
    else:
        cap = _Budget(limit).limit
        if per_order > cap:
            raise EnumerationBudgetExceeded(cap, "Q-node overlap scan")
        reversed_sets = sets[::-1]
        reversed_lengths = lengths[::-1]
        overlap = 0
        for pieces in product(*sets):
            string = tuple(chain.from_iterable(pieces))
            if all(piece in strings for piece, strings in zip(_split(string, reversed_lengths), reversed_sets)):
                overlap += 1

    logger.debug(f"Q-root count: {per_order:,} per order, overlap {overlap:,}")
    return 2 * per_order - overlap


def count_frontiers_streaming(tree: PqTree, limit: Optional[int] = None) -> int:
    """Exact |Fr(T)| where ``limit`` bounds only the string sets that get built.

    A Q-root is counted from its children's sets and never materialized, so
    the result may be larger than ``limit``. Any other root is enumerated.
    """
    root = tree.root
    if root.is_leaf:
        return 1
    if root.kind is NodeKind.Q and len(root.children) >= 2:
        return _q_root_count(root.children, limit)
    result = enumerate_frontiers(tree, limit)
    if not result.complete:
        raise EnumerationBudgetExceeded(_Budget(limit).limit, "frontier enumeration")
    return len(result)


def count_frontiers_multiset(tree: PqTree, limit: Optional[int] = None) -> int:
    """Exact |Fr(T)| for leaves that may repeat.

    Equals ``len(enumerate_frontiers(tree, limit))`` and raises
    EnumerationBudgetExceeded exactly when that enumeration would be
    incomplete, including when only the root set outgrows ``limit``.
    """
    count = count_frontiers_streaming(tree, limit)
    cap = _Budget(limit).limit
    if count > cap:
        raise EnumerationBudgetExceeded(cap, "frontier enumeration")
    return count


def count_frontiers(tree: PqTree, limit: Optional[int] = None) -> tuple:
    """Count with the cheapest exact method; returns ``(count, method)``."""
    if tree.has_distinct_labels:
        return count_frontiers_distinct(tree), "formula"
    return count_frontiers_multiset(tree, limit), "enumeration"
