"""Hamiltonian path counting through PQ-tree frontier counting.

The instance graph becomes three trees over the same leaf multiset:

* ``T_E``: a P-node over ``$``, ``#`` and one Q-node ``(i j)`` per edge.
* ``T_V``: a Q-node ``($ T_C # T_N)`` where ``T_C = (Q w (P (Q i i)...) s)``
  holds each inner vertex twice and ``T_N`` is a P-node over the vertex
  copies a Hamiltonian path leaves unused.
* ``T_G``: a Q-node ``(T_V T_E)``.

A string shared by Fr(T_V) and Fr(T_E) reads ``$ τ # π`` or ``π # τ $`` where
τ spells a Hamiltonian path and π lists the untraversed edges.
"""

import logging
import math
from dataclasses import dataclass
from itertools import chain, permutations, product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from core.combinatorics import exact_quotient
from core.exceptions import EnumerationBudgetExceeded, InvalidSolution, NonIntegerResult, StructureViolation
from core.settings import DEFAULT_ENUMERATION_LIMIT
from core.symbols import SEPARATOR_MARKER, START_MARKER, SymbolString, vertex_token
from pqtree.canonical import canonicalize
from pqtree.frontier import count_frontiers_streaming, enumerate_frontiers
from pqtree.models import FrontierSet, PqNode, PqTree
from reduction.graph import Edge, HamInstance
from reduction.hamiltonian import VertexSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrontReduction:
    """The trees built from one instance; ``t_c`` and ``t_n`` are kept for inspection."""

    t_g: PqTree
    t_v: PqTree
    t_e: PqTree
    t_c: PqTree
    t_n: PqTree

    def trees(self) -> Dict[str, PqTree]:
        return {"t_g": self.t_g, "t_v": self.t_v, "t_e": self.t_e}


@dataclass(frozen=True)
class FrontCount:
    """Recovered path count plus the frontier sizes it came from."""

    value: int
    fr_v: int
    fr_e: int
    fr_g: int
    intersection: int
    block_size: int
    excess: int

    @property
    def linear_form(self) -> int:
        """2|Fr(T_V)||Fr(T_E)| - |Fr(T_V) ∩ Fr(T_E)|, reported for comparison."""
        return 2 * self.fr_v * self.fr_e - self.intersection

    @property
    def identity_holds(self) -> bool:
        """|Fr(T_G)| = 2|Fr(T_V)||Fr(T_E)| - |Fr(T_V) ∩ Fr(T_E)|²."""
        return self.fr_g == 2 * self.fr_v * self.fr_e - self.intersection ** 2

    def to_dict(self) -> Dict[str, int]:
        return {
            "fr_v": self.fr_v,
            "fr_e": self.fr_e,
            "fr_g": self.fr_g,
            "intersection": self.intersection,
            "linear_form": self.linear_form,
            "block_size": self.block_size,
            "p": self.excess,
        }


def _leaf(vertex: int) -> PqNode:
    return PqNode.leaf(vertex_token(vertex))


def build_raw_front_trees(instance: HamInstance) -> FrontReduction:
    """The trees exactly as constructed, before canonicalization.

    On small graphs the T_C middle node and T_N may be empty or have a
    single child.
    """
    graph = instance.graph
    w, s = instance.endpoints
    start, separator = PqNode.leaf(START_MARKER), PqNode.leaf(SEPARATOR_MARKER)

    t_e = PqNode.p(start, separator, *(PqNode.q(_leaf(i), _leaf(j)) for i, j in graph.sorted_edges))

    inner = [v for v in graph.vertices if v not in (w, s)]
    t_c = PqNode.q(_leaf(w), PqNode.p(*(PqNode.q(_leaf(v), _leaf(v)) for v in inner)), _leaf(s))

    spare = []
    for v in graph.vertices:
        used = 1 if v in (w, s) else 2
        spare.extend(_leaf(v) for _ in range(graph.degree(v) - used))
    t_n = PqNode.p(*spare)

    t_v = PqNode.q(start, t_c, separator, t_n)
    t_g = PqNode.q(t_v, t_e)
    return FrontReduction(PqTree(t_g), PqTree(t_v), PqTree(t_e), PqTree(t_c), PqTree(t_n))


def build_front_trees(instance: HamInstance) -> FrontReduction:
    """Canonical T_G, T_V and T_E (with T_C and T_N) for ``instance``; linear in |V| + |E|."""
    raw = build_raw_front_trees(instance)
    reduction = FrontReduction(
        t_g=canonicalize(raw.t_g),
        t_v=canonicalize(raw.t_v),
        t_e=canonicalize(raw.t_e),
        t_c=canonicalize(raw.t_c),
        t_n=canonicalize(raw.t_n),
    )
    if reduction.t_v.leaf_multiset != reduction.t_e.leaf_multiset:
        logger.error("T_V and T_E have different leaf multisets")
        raise StructureViolation("leaf-multiset", "T_V and T_E leaf multisets differ")
    logger.info(
        f"Built frontier trees: {reduction.t_e.leaf_count} leaves in T_V and T_E, p={instance.excess}"
    )
    return reduction


def sigma_h_size_front(instance: HamInstance) -> int:
    """Strings in Fr(T_V) ∩ Fr(T_E) per directed Hamiltonian path: 2·p!·2^p."""
    p = instance.excess
    return 2 * math.factorial(p) * 2 ** p


def _complete(frontiers: FrontierSet, limit: Optional[int], name: str) -> FrontierSet:
    if not frontiers.complete:
        limit = DEFAULT_ENUMERATION_LIMIT if limit is None else limit
        raise EnumerationBudgetExceeded(limit, f"enumeration of Fr({name})")
    return frontiers


def _enumerate_pair(reduction: FrontReduction, limit: Optional[int]) -> Tuple[FrontierSet, FrontierSet]:
    fr_v = _complete(enumerate_frontiers(reduction.t_v, limit), limit, "T_V")
    fr_e = _complete(enumerate_frontiers(reduction.t_e, limit), limit, "T_E")
    return fr_v, fr_e


def intersection_front(instance: HamInstance, limit: Optional[int] = None) -> FrontierSet:
    """Fr(T_V) ∩ Fr(T_E) by intersecting both enumerations."""
    fr_v, fr_e = _enumerate_pair(build_front_trees(instance), limit)
    shared = FrontierSet.of(fr_v.strings & fr_e.strings)
    logger.info(f"|Fr(T_V) ∩ Fr(T_E)| = {len(shared):,}")
    return shared


def count_ham_via_front(instance: HamInstance, limit: Optional[int] = None) -> FrontCount:
    """Hamiltonian sequence count recovered from |Fr(T_V)|, |Fr(T_E)| and |Fr(T_G)|.

    T_V and T_E have equally many leaves, so a string of Fr(T_G) that both
    child orders produce splits into two members of Fr(T_V) ∩ Fr(T_E) and
    |Fr(T_G)| = 2|Fr(T_V)||Fr(T_E)| - |I|². The count is |I| / (2·p!·2^p)
    with |I| the square root of 2|Fr(T_V)||Fr(T_E)| - |Fr(T_G)|.
    """
    reduction = build_front_trees(instance)
    fr_v, fr_e = _enumerate_pair(reduction, limit)
    shared = len(fr_v.strings & fr_e.strings)
    fr_g = count_frontiers_streaming(reduction.t_g, limit)
    logger.info(f"|Fr(T_V)|={len(fr_v):,} |Fr(T_E)|={len(fr_e):,} |Fr(T_G)|={fr_g:,}")

    radicand = 2 * len(fr_v) * len(fr_e) - fr_g
    root = math.isqrt(radicand) if radicand >= 0 else -1
    if root < 0 or root * root != radicand:
        logger.error(f"2|Fr(T_V)||Fr(T_E)| - |Fr(T_G)| = {radicand} is not a square")
        raise NonIntegerResult(radicand, 1, "not a perfect square")
    if root != shared:
        logger.error(f"Square root {root} differs from the enumerated intersection size {shared}")
        raise StructureViolation("concatenation-identity", f"sqrt gives {root}, intersection has {shared}")

    block_size = sigma_h_size_front(instance)
    value, remainder = exact_quotient(root, block_size)
    if remainder:
        logger.error(f"|I|={root} is not a multiple of the block size {block_size}")
        raise NonIntegerResult(root, block_size, "intersection size over block size")
    return FrontCount(
        value=value,
        fr_v=len(fr_v),
        fr_e=len(fr_e),
        fr_g=fr_g,
        intersection=shared,
        block_size=block_size,
        excess=instance.excess,
    )


def _tau_length(instance: HamInstance) -> int:
    return 2 * instance.graph.vertex_count - 2


def _check_path(instance: HamInstance, path: Sequence[int]) -> None:
    graph = instance.graph
    if sorted(path) != list(graph.vertices):
        raise StructureViolation("hamiltonian-sequence", f"{list(path)} does not visit every vertex once")
    if {path[0], path[-1]} != set(instance.endpoints):
        raise StructureViolation("hamiltonian-sequence", f"{list(path)} does not run between w and s")
    for u, v in zip(path, path[1:]):
        if not graph.has_edge(u, v):
            raise StructureViolation("hamiltonian-sequence", f"{{{u},{v}}} is not an edge")


def decode_front_string(instance: HamInstance, string: SymbolString) -> VertexSequence:
    """Vertex sequence spelled by the τ part of a ``$ τ # π`` or ``π # τ $`` string."""
    length = _tau_length(instance)
    if string and string[0] == START_MARKER:
        tau, marker = string[1:1 + length], string[1 + length:2 + length]
    elif string and string[-1] == START_MARKER:
        tau, marker = string[-1 - length:-1], string[-2 - length:-1 - length]
    else:
        raise StructureViolation("front-decoding", "string neither starts nor ends with $")
    if marker != (SEPARATOR_MARKER,):
        raise StructureViolation("front-decoding", "τ is not delimited by # on its inner side")
    middle = tau[1:-1]
    if any(middle[k] != middle[k + 1] for k in range(0, len(middle), 2)):
        raise StructureViolation("front-decoding", f"inner vertices of τ are not doubled: {' '.join(tau)}")
    try:
        path = tuple(int(token) for token in (tau[0],) + middle[::2] + (tau[-1],))
    except ValueError as e:
        raise StructureViolation("front-decoding", f"τ holds a non-vertex symbol: {e}") from e
    _check_path(instance, path)
    return path


def partition_by_path(instance: HamInstance, strings) -> Dict[VertexSequence, List[SymbolString]]:
    """Group intersection strings by the Hamiltonian sequence they decode to."""
    blocks: Dict[VertexSequence, List[SymbolString]] = {}
    for string in strings:
        blocks.setdefault(decode_front_string(instance, string), []).append(string)
    return dict(sorted(blocks.items()))


def untraversed_edges(instance: HamInstance, path: Sequence[int]) -> List[Edge]:
    used = {(min(u, v), max(u, v)) for u, v in zip(path, path[1:])}
    return [edge for edge in instance.graph.sorted_edges if edge not in used]


def perm_pairs(pairs: Sequence[Edge]) -> Iterator[SymbolString]:
    """Every arrangement of the pairs with each pair in either orientation."""
    for order in permutations(pairs):
        for flips in product((False, True), repeat=len(order)):
            yield tuple(chain.from_iterable(
                (vertex_token(j), vertex_token(i)) if flip else (vertex_token(i), vertex_token(j))
                for (i, j), flip in zip(order, flips)
            ))


def _tau(path: Sequence[int]) -> SymbolString:
    inner = tuple(chain.from_iterable((vertex_token(v), vertex_token(v)) for v in path[1:-1]))
    return (vertex_token(path[0]),) + inner + (vertex_token(path[-1]),)


def expected_block(instance: HamInstance, path: Sequence[int]) -> frozenset:
    """{$ τ # π} ∪ {π # τ $} over every arrangement π of the untraversed edges."""
    _check_path(instance, path)
    tau = _tau(path)
    block = set()
    for pi in perm_pairs(untraversed_edges(instance, path)):
        block.add((START_MARKER,) + tau + (SEPARATOR_MARKER,) + pi)
        block.add(pi + (SEPARATOR_MARKER,) + tau + (START_MARKER,))
    return frozenset(block)


def front_witness(
    instance: HamInstance,
    path: Sequence[int],
    untraversed_order: Optional[Sequence[Edge]] = None,
) -> SymbolString:
    """The ``$ τ # π`` string of a Hamiltonian sequence.

    ``untraversed_order`` lists the untraversed edges as ordered pairs in the
    order they should appear; by default they appear sorted, low end first.
    """
    try:
        _check_path(instance, path)
    except StructureViolation as e:
        raise InvalidSolution(str(e)) from e
    remaining = untraversed_edges(instance, path)
    if untraversed_order is None:
        untraversed_order = remaining
    elif sorted((min(i, j), max(i, j)) for i, j in untraversed_order) != remaining:
        raise InvalidSolution(f"{list(untraversed_order)} is not an ordering of the untraversed edges {remaining}")
    pi = tuple(chain.from_iterable((vertex_token(i), vertex_token(j)) for i, j in untraversed_order))
    return (START_MARKER,) + _tau(path) + (SEPARATOR_MARKER,) + pi
