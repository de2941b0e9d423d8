"""Multisets of symbols and full multiset ordering instances."""

import logging
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from core.exceptions import InvalidInstance
from core.string_set import StringSet
from core.symbols import Symbol, SymbolString, validate_token

logger = logging.getLogger(__name__)


class SymbolMultiset(Mapping):
    """Immutable map from symbol to positive multiplicity.

    Missing symbols have multiplicity zero, so ``m.get(s, 0)`` and
    ``m.count(s)`` agree. Containment (``<=``) is multiplicity-wise.
    """

    __slots__ = ("_counts", "_hash")

    def __init__(self, counts: Union[Mapping, Iterable[Symbol], None] = None):
        raw = Counter()
        if isinstance(counts, Mapping):
            for symbol, count in counts.items():
                if not isinstance(count, int) or isinstance(count, bool) or count < 0:
                    raise ValueError(f"Multiplicity of {symbol!r} must be a nonnegative integer, got {count!r}")
                raw[validate_token(symbol)] += count
        elif counts is not None:
            for symbol in counts:
                raw[validate_token(symbol)] += 1
        self._counts: Dict[Symbol, int] = {symbol: raw[symbol] for symbol in sorted(raw) if raw[symbol] > 0}
        self._hash: Optional[int] = None

    @classmethod
    def of(cls, *symbols: Symbol) -> "SymbolMultiset":
        return cls(symbols)

    @classmethod
    def parikh(cls, string: SymbolString) -> "SymbolMultiset":
        """Parikh vector of a string as a multiset."""
        return cls(string)

    def __getitem__(self, symbol: Symbol) -> int:
        return self._counts[symbol]

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self._counts)

    def __len__(self) -> int:
        return len(self._counts)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._counts.items()))
        return self._hash

    def __repr__(self) -> str:
        return "{" + ", ".join(self.elements()) + "}"

    def count(self, symbol: Symbol) -> int:
        return self._counts.get(symbol, 0)

    @property
    def size(self) -> int:
        """Total number of elements, with multiplicity."""
        return sum(self._counts.values())

    def elements(self) -> List[Symbol]:
        """Every element with repetition, in sorted order."""
        return [symbol for symbol, count in self._counts.items() for _ in range(count)]

    def sort_key(self) -> Tuple[Tuple[Symbol, int], ...]:
        return tuple(self._counts.items())

    def issubset(self, other: Mapping) -> bool:
        return all(count <= other.get(symbol, 0) for symbol, count in self._counts.items())

    def __le__(self, other: Mapping) -> bool:
        return self.issubset(other)

    def __add__(self, other: Mapping) -> "SymbolMultiset":
        merged = Counter(self._counts)
        merged.update(dict(other.items()))
        return SymbolMultiset(merged)

    def __sub__(self, other: Mapping) -> "SymbolMultiset":
        """Multiset difference; ``other`` must be contained in ``self``."""
        if not SymbolMultiset(other).issubset(self):
            raise ValueError(f"{SymbolMultiset(other)!r} is not contained in {self!r}")
        remaining = Counter(self._counts)
        remaining.subtract(dict(other.items()))
        return SymbolMultiset(remaining)

    def to_dict(self) -> Dict[Symbol, int]:
        return dict(self._counts)


@dataclass(frozen=True)
class FmoInstance:
    """An instance <R, F>: universe R and a family F of constraint multisets.

    Every family member is nonempty and contained in R.
    """

    universe: SymbolMultiset
    family: Tuple[SymbolMultiset, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not isinstance(self.universe, SymbolMultiset):
            object.__setattr__(self, "universe", SymbolMultiset(self.universe))
        family = tuple(m if isinstance(m, SymbolMultiset) else SymbolMultiset(m) for m in self.family)
        object.__setattr__(self, "family", family)
        for index, member in enumerate(family):
            if member.size == 0:
                raise InvalidInstance("empty-member", f"family member {index} is empty")
            if not member <= self.universe:
                raise InvalidInstance(
                    "containment",
                    f"family member {index} {member!r} is not contained in the universe {self.universe!r}"
                )

    @property
    def deduplicated_family(self) -> Tuple[SymbolMultiset, ...]:
        """Family members with repeats removed, first occurrence kept."""
        return tuple(dict.fromkeys(self.family))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], columns: Optional[Sequence[Symbol]] = None) -> "FmoInstance":
        """Set-family instance of a binary matrix: one symbol per column, one member per row.

        All-zero rows impose nothing and are skipped.
        """
        width = len(rows[0]) if rows else len(columns or ())
        if columns is None:
            columns = [f"col{index + 1}" for index in range(width)]
        if len(set(columns)) != len(columns):
            raise ValueError("Column labels must be distinct")
        family = []
        for index, row in enumerate(rows):
            if len(row) != len(columns):
                raise ValueError(f"Row {index} has {len(row)} entries, expected {len(columns)}")
            if any(value not in (0, 1) for value in row):
                raise ValueError(f"Row {index} is not binary: {list(row)}")
            member = [column for column, value in zip(columns, row) if value]
            if member:
                family.append(SymbolMultiset(member))
            else:
                logger.debug(f"Skipping all-zero row {index}")
        return cls(SymbolMultiset(columns), tuple(family))

    def to_matrix(self) -> Tuple[List[Symbol], List[List[int]]]:
        """Column labels and binary rows; only valid when R has no repeated symbol."""
        if any(count > 1 for count in self.universe.values()):
            raise ValueError("Universe has repeated symbols, no binary matrix view exists")
        columns = list(self.universe)
        rows = [[1 if member.count(column) else 0 for column in columns] for member in self.family]
        return columns, rows


class SolutionSet(StringSet):
    """Every string drawn from all of R in which each family member occurs."""
