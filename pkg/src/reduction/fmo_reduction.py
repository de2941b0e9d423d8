"""Hamiltonian path counting through full multiset orderings.

Every vertex i gets a constraint Q_i holding, per incident edge {i, j}, a
private symbol d_i_j and a copy of j, plus {i, c_i} for an endpoint and
{i, i} otherwise. The endpoints are pinned by R_w = {c_w, cp_w} and
R_s = {c_s, cp_s}, and each d_i_j is tied to its neighbour by
Q_ij = {d_i_j, j}. A solution chains the Q_i blocks along a Hamiltonian
path; each path yields the same number ``a`` of solutions.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.combinatorics import exact_quotient
from core.exceptions import InvalidSolution, NonIntegerResult
from core.settings import DEFAULT_FMO_ENGINE
from core.symbols import Symbol, SymbolString, edge_token, endpoint_guard_token, endpoint_token, vertex_token
from multiset.models import FmoInstance, SymbolMultiset
from multiset.solver import count_fmo
from reduction.graph import HamInstance

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FmoReduction:
    """The built instance together with its named family members."""

    instance: FmoInstance
    vertex_sets: Dict[int, SymbolMultiset]
    r_w: SymbolMultiset
    r_s: SymbolMultiset
    pair_sets: Dict[Tuple[int, int], SymbolMultiset]

    def chain_members(self) -> Dict[str, SymbolMultiset]:
        """R_w, R_s and every Q_i, keyed by name."""
        members = {"R_w": self.r_w, "R_s": self.r_s}
        members.update({f"Q_{vertex}": member for vertex, member in self.vertex_sets.items()})
        return members


@dataclass(frozen=True)
class FmoCount:
    """Recovered path count plus the quantities it came from."""

    value: int
    z: int
    a: int
    universe_size: int

    def to_dict(self) -> Dict[str, int]:
        return {"z": self.z, "a": self.a, "universe_size": self.universe_size}


def _vertex_set(instance: HamInstance, vertex: int) -> SymbolMultiset:
    symbols: List[Symbol] = []
    for neighbor in instance.graph.neighbors(vertex):
        symbols.extend((edge_token(vertex, neighbor), vertex_token(neighbor)))
    if vertex in instance.endpoints:
        symbols.extend((vertex_token(vertex), endpoint_token(vertex)))
    else:
        symbols.extend((vertex_token(vertex), vertex_token(vertex)))
    return SymbolMultiset(symbols)


def build_fmo_instance(instance: HamInstance) -> FmoReduction:
    """Build <R, F> with |R| = 4|E| + 4 in time linear in |V| + |E|.

    F lists Q_1..Q_n, then R_w and R_s, then Q_ij and Q_ji for each edge in
    sorted order.
    """
    graph = instance.graph
    w, s = instance.endpoints
    vertex_sets = {vertex: _vertex_set(instance, vertex) for vertex in graph.vertices}
    r_w = SymbolMultiset.of(endpoint_token(w), endpoint_guard_token(w))
    r_s = SymbolMultiset.of(endpoint_token(s), endpoint_guard_token(s))
    pair_sets: Dict[Tuple[int, int], SymbolMultiset] = {}
    for i, j in graph.sorted_edges:
        pair_sets[(i, j)] = SymbolMultiset.of(edge_token(i, j), vertex_token(j))
        pair_sets[(j, i)] = SymbolMultiset.of(edge_token(j, i), vertex_token(i))

    union = SymbolMultiset.of(endpoint_guard_token(w), endpoint_guard_token(s))
    for member in vertex_sets.values():
        union = union + member
    removed = [vertex_token(w), vertex_token(s)]
    for vertex in graph.vertices:
        if vertex not in (w, s):
            removed.extend((vertex_token(vertex), vertex_token(vertex)))
    universe = union - SymbolMultiset(removed)

    family = tuple(vertex_sets.values()) + (r_w, r_s) + tuple(pair_sets.values())
    # FmoInstance checks that every member is contained in the universe
    fmo_instance = FmoInstance(universe, family)
    logger.info(f"Built FMO instance: |R|={universe.size}, |F|={len(family)}")
    return FmoReduction(fmo_instance, vertex_sets, r_w, r_s, pair_sets)


def alpha_product(instance: HamInstance) -> int:
    """a = ∏ α_i with α_i = 2^(d-1)(d-1)! at w and s and 2^(d-2)(d-2)! elsewhere."""
    product = 1
    for vertex in instance.graph.vertices:
        free = instance.graph.degree(vertex) - (1 if vertex in instance.endpoints else 2)
        product *= 2 ** free * math.factorial(free)
    return product


def count_ham_via_fmo(
    instance: HamInstance,
    engine: str = DEFAULT_FMO_ENGINE,
    limit: Optional[int] = None,
) -> FmoCount:
    """Number of solutions z of the built instance divided by a; the division must be exact."""
    reduction = build_fmo_instance(instance)
    z = count_fmo(reduction.instance, engine, limit)
    a = alpha_product(instance)
    value, remainder = exact_quotient(z, a)
    if remainder:
        logger.error(f"z={z} is not a multiple of a={a}")
        raise NonIntegerResult(z, a, "solution count over alpha product")
    logger.info(f"FMO route: z={z:,}, a={a:,}, count={value}")
    return FmoCount(value=value, z=z, a=a, universe_size=reduction.instance.universe.size)


def _free_pairs(instance: HamInstance, vertex: int, used: Sequence[int]) -> List[Symbol]:
    symbols: List[Symbol] = []
    for neighbor in instance.graph.neighbors(vertex):
        if neighbor not in used:
            symbols.extend((edge_token(vertex, neighbor), vertex_token(neighbor)))
    return symbols


def fmo_witness(instance: HamInstance, path: Sequence[int]) -> SymbolString:
    """The solution that chains Q_{v1}, ..., Q_{vn} along ``path``.

    Consecutive blocks share the two symbols ``v_{k+1} v_k``; each block
    lists its private pairs ``d_i_j j`` for edges off the path between the
    pairs that lead to its path neighbours.
    """
    graph = instance.graph
    if sorted(path) != list(graph.vertices) or {path[0], path[-1]} != set(instance.endpoints):
        raise InvalidSolution(f"{list(path)} is not a Hamiltonian sequence between w and s")
    for u, v in zip(path, path[1:]):
        if not graph.has_edge(u, v):
            raise InvalidSolution(f"{{{u},{v}}} is not an edge")

    first, last = path[0], path[-1]
    symbols: List[Symbol] = [endpoint_guard_token(first), endpoint_token(first)]
    for k, vertex in enumerate(path):
        previous = path[k - 1] if k > 0 else None
        following = path[k + 1] if k + 1 < len(path) else None
        if previous is not None:
            symbols.append(edge_token(vertex, previous))
        symbols.extend(_free_pairs(instance, vertex, [v for v in (previous, following) if v is not None]))
        if following is not None:
            symbols.extend((edge_token(vertex, following), vertex_token(following), vertex_token(vertex)))
    symbols.extend((endpoint_token(last), endpoint_guard_token(last)))
    return tuple(symbols)

