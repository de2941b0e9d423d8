"""Structural checks on solutions of the ordering reduction."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import InvalidSolution, StructureViolation
from core.symbols import SymbolString, format_string
from multiset.models import SymbolMultiset
from multiset.patterns import occurrences
from reduction.fmo_reduction import FmoReduction, build_fmo_instance
from reduction.graph import HamInstance
from reduction.hamiltonian import VertexSequence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Occurrence:
    name: str
    start: int
    end: int


@dataclass(frozen=True)
class StructureReport:
    """Where each chain member occurs and the Hamiltonian sequence they spell."""

    path: VertexSequence
    order: Tuple[Occurrence, ...]

    def to_dict(self) -> Dict:
        return {
            "path": list(self.path),
            "order": [{"name": o.name, "start": o.start, "end": o.end} for o in self.order],
        }


def _fail(check: str, message: str) -> None:
    logger.error(f"Structure check {check} failed: {message}")
    raise StructureViolation(check, message)


def _locate(members: Dict[str, SymbolMultiset], string: SymbolString) -> List[Occurrence]:
    located = []
    for name, member in members.items():
        positions = occurrences(member, string)
        if len(positions) != 1:
            _fail("occurrence-uniqueness", f"{name} occurs {len(positions)} times")
        start = positions[0]
        located.append(Occurrence(name, start, start + member.size - 1))
    return sorted(located, key=lambda o: o.start)


def _check_total_order(order: Sequence[Occurrence]) -> None:
    for left, right in zip(order, order[1:]):
        if not (left.start < right.start and left.end < right.end):
            _fail("total-order", f"{left.name} and {right.name} are not ordered left to right")
    if {order[0].name, order[-1].name} != {"R_w", "R_s"}:
        _fail("total-order", f"chain runs from {order[0].name} to {order[-1].name}, not between R_w and R_s")


def _check_overlaps(instance: HamInstance, blocks: Sequence[Occurrence], string: SymbolString) -> VertexSequence:
    path = tuple(int(block.name[2:]) for block in blocks)
    for (left, i), (right, j) in zip(zip(blocks, path), zip(blocks[1:], path[1:])):
        overlap = left.end - right.start + 1
        if overlap != 2:
            _fail("intersection-size", f"{left.name} and {right.name} overlap in {overlap} positions")
        shared = sorted(string[right.start - 1:left.end])
        if shared != sorted([str(i), str(j)]) or not instance.graph.has_edge(i, j):
            _fail("intersection-size", f"{left.name} and {right.name} share {shared}, not the edge {{{i},{j}}}")
    return path


def validate_solution_structure(
    instance: HamInstance,
    string: Sequence[str],
    reduction: Optional[FmoReduction] = None,
) -> StructureReport:
    """Check that a solution chains R_w, Q_{v1}, ..., Q_{vn}, R_s along a Hamiltonian sequence.

    Verified: each chain member occurs exactly once, the occurrences are
    ordered left to right, consecutive Q blocks overlap in exactly the two
    symbols of an edge, and the spelled vertex order is a Hamiltonian
    sequence between w and s. Raises InvalidSolution when ``string`` is not
    drawn from the whole universe, StructureViolation naming the failed check
    otherwise.
    """
    reduction = reduction or build_fmo_instance(instance)
    string = tuple(string)
    if SymbolMultiset.parikh(string) != reduction.instance.universe:
        raise InvalidSolution(f"{format_string(string)} is not drawn from the universe of the instance")

    order = _locate(reduction.chain_members(), string)
    _check_total_order(order)
    path = _check_overlaps(instance, order[1:-1], string)

    graph = instance.graph
    if sorted(path) != list(graph.vertices) or {path[0], path[-1]} != set(instance.endpoints):
        _fail("hamiltonian-sequence", f"{list(path)} is not a Hamiltonian sequence between w and s")
    logger.debug(f"Solution spells {list(path)}")
    return StructureReport(path=path, order=tuple(order))
