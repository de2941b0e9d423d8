"""π-pattern matching and Sperner collection predicates."""

from typing import Dict, Iterator, List, Sequence

from core.exceptions import EmptyPattern
from core.symbols import Symbol, SymbolString
from multiset.models import SymbolMultiset


def _as_multiset(pattern) -> SymbolMultiset:
    return pattern if isinstance(pattern, SymbolMultiset) else SymbolMultiset(pattern)


def _iter_occurrences(pattern: SymbolMultiset, string: SymbolString) -> Iterator[int]:
    width = pattern.size
    if width == 0:
        raise EmptyPattern("Pattern must contain at least one symbol")
    # diff[symbol] = pattern count - window count; ``mismatched`` counts nonzero entries
    diff: Dict[Symbol, int] = dict(pattern)
    mismatched = len(diff)

    def shift(symbol: Symbol, delta: int) -> None:
        nonlocal mismatched
        before = diff.get(symbol, 0)
        after = before + delta
        if before == 0:
            mismatched += 1
        elif after == 0:
            mismatched -= 1
        if after:
            diff[symbol] = after
        else:
            diff.pop(symbol, None)

    for index, symbol in enumerate(string):
        shift(symbol, -1)
        if index >= width:
            shift(string[index - width], +1)
        if index >= width - 1 and mismatched == 0:
            yield index - width + 2


def occurrences(pattern, string: Sequence[Symbol]) -> List[int]:
    """1-based positions where a window of ``string`` has exactly the multiset ``pattern``."""
    return list(_iter_occurrences(_as_multiset(pattern), tuple(string)))


def contains(pattern, string: Sequence[Symbol]) -> bool:
    """Whether ``pattern`` occurs somewhere in ``string``."""
    return next(_iter_occurrences(_as_multiset(pattern), tuple(string)), None) is not None


def is_sperner(family: Sequence) -> bool:
    """No member is contained in a different member."""
    members = [_as_multiset(member) for member in family]
    return not any(
        members[i] <= members[j]
        for i in range(len(members))
        for j in range(len(members))
        if i != j
    )


def is_strict_sperner(family: Sequence) -> bool:
    """No member is contained in the multiset union of all the others."""
    members = [_as_multiset(member) for member in family]
    for index, member in enumerate(members):
        others = SymbolMultiset()
        for other_index, other in enumerate(members):
            if other_index != index:
                others = others + other
        if member <= others:
            return False
    return True
