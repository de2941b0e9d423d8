"""Exact counting helpers shared by the frontier and FMO code."""

import math
from typing import Dict, Hashable, Iterable, Iterator, List, Mapping, Tuple, TypeVar

T = TypeVar("T", bound=Hashable)


def multinomial(counts: Iterable[int]) -> int:
    """Number of distinct arrangements of a multiset with the given multiplicities."""
    result = 1
    total = 0
    for count in counts:
        total += count
        result *= math.comb(total, count)
    return result


def multiset_permutations(counts: Mapping[T, int]) -> Iterator[Tuple[T, ...]]:
    """Yield every distinct arrangement of a multiset, in lexicographic order.

    Duplicate-free backtracking: at each position only one copy of each
    distinct element is tried.
    """
    keys: List[T] = sorted(counts)
    remaining: Dict[T, int] = {key: counts[key] for key in keys}
    size = sum(remaining.values())
    prefix: List[T] = []

    def extend() -> Iterator[Tuple[T, ...]]:
        if len(prefix) == size:
            yield tuple(prefix)
            return
        for key in keys:
            if remaining[key] == 0:
                continue
            remaining[key] -= 1
            prefix.append(key)
            yield from extend()
            prefix.pop()
            remaining[key] += 1

    yield from extend()


def exact_quotient(numerator: int, denominator: int) -> Tuple[int, int]:
    """``divmod`` that refuses a zero denominator."""
    if denominator == 0:
        raise ZeroDivisionError("count recovery divisor is zero")
    return divmod(numerator, denominator)
