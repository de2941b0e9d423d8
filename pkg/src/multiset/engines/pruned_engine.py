"""Backtracking engine with per-pattern window feasibility pruning."""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from core.exceptions import EnumerationBudgetExceeded
from core.symbols import Symbol
from multiset.engines.base_engine import FmoEngine
from multiset.models import FmoInstance, SolutionSet, SymbolMultiset

logger = logging.getLogger(__name__)

Window = Tuple[int, Tuple[int, ...]]
# None once the pattern has occurred, otherwise the windows still able to host it
PatternState = Optional[Tuple[Window, ...]]


class _Pattern:
    __slots__ = ("size", "support", "slots", "need")

    def __init__(self, member: SymbolMultiset):
        self.size = member.size
        self.support: Tuple[Symbol, ...] = tuple(member)
        self.slots: Dict[Symbol, int] = {symbol: slot for slot, symbol in enumerate(self.support)}
        self.need: Tuple[int, ...] = tuple(member[symbol] for symbol in self.support)


class _StopSearch(Exception):
    pass


class _Search:
    """One depth-first search over an instance."""

    def __init__(self, instance: FmoInstance, limit: int, stop_after: Optional[int]):
        self.length = instance.universe.size
        self.symbols: List[Symbol] = list(instance.universe)
        self.remaining: Dict[Symbol, int] = dict(instance.universe)
        self.patterns = [_Pattern(member) for member in instance.deduplicated_family]
        self.limit = limit
        self.stop_after = stop_after
        self.prefix: List[Symbol] = []
        self.found: set = set()
        self.nodes = 0

    def _fits(self, pattern: _Pattern, deficit: Sequence[int]) -> bool:
        remaining = self.remaining
        return all(remaining[symbol] >= count for symbol, count in zip(pattern.support, deficit))

    def _advance(self, states: List[PatternState], symbol: Symbol, position: int) -> Optional[List[PatternState]]:
        """Pattern states after placing ``symbol`` at ``position``, or None if some pattern became impossible."""
        advanced: List[PatternState] = []
        for pattern, state in zip(self.patterns, states):
            if state is None:
                advanced.append(None)
                continue
            windows = list(state)
            if position <= self.length - pattern.size:
                windows.append((position, pattern.need))
            slot = pattern.slots.get(symbol)
            survivors = []
            satisfied = False
            for start, deficit in windows:
                if slot is None or deficit[slot] == 0:
                    continue
                if position - start + 1 == pattern.size:
                    satisfied = True
                    break
                deficit = deficit[:slot] + (deficit[slot] - 1,) + deficit[slot + 1:]
                if self._fits(pattern, deficit):
                    survivors.append((start, deficit))
            if satisfied:
                advanced.append(None)
                continue
            can_start_later = position + 1 <= self.length - pattern.size and self._fits(pattern, pattern.need)
            if not survivors and not can_start_later:
                return None
            advanced.append(tuple(survivors))
        return advanced

    def _record(self) -> None:
        if len(self.found) >= self.limit:
            raise EnumerationBudgetExceeded(self.limit, "pruned search")
        self.found.add(tuple(self.prefix))
        if self.stop_after is not None and len(self.found) >= self.stop_after:
            raise _StopSearch()

    def _extend(self, position: int, states: List[PatternState]) -> None:
        self.nodes += 1
        if position == self.length:
            self._record()
            return
        for symbol in self.symbols:
            if self.remaining[symbol] == 0:
                continue
            self.remaining[symbol] -= 1
            advanced = self._advance(states, symbol, position)
            if advanced is not None:
                self.prefix.append(symbol)
                self._extend(position + 1, advanced)
                self.prefix.pop()
            self.remaining[symbol] += 1

    def run(self) -> SolutionSet:
        initial: List[PatternState] = [() for _ in self.patterns]
        try:
            self._extend(0, initial)
        except _StopSearch:
            logger.debug(f"Pruned search stopped after {len(self.found)} solutions, {self.nodes:,} nodes")
            return SolutionSet.of(self.found, complete=False)
        logger.debug(f"Pruned search visited {self.nodes:,} nodes, {len(self.found):,} solutions")
        return SolutionSet.of(self.found)


class PrunedEngine(FmoEngine):
    """Places symbols left to right and cuts every branch where a pattern has no feasible window.

    A pattern keeps the windows already opened that can still match it; a
    window survives while each symbol placed in it is still needed and the
    symbols it lacks are still available. A pattern with no surviving window
    and no room or symbols for a fresh one ends the branch. The budget counts
    solutions.
    """

    name = "pruned"

    def solve(self, instance: FmoInstance, limit: int, stop_after: Optional[int] = None) -> SolutionSet:
        return _Search(instance, limit, stop_after).run()

