"""Immutable, lexicographically ordered sets of symbol strings."""

from dataclasses import dataclass, field
from functools import cached_property
from typing import FrozenSet, Iterable, Iterator, Tuple

from core.symbols import SymbolString, format_string


@dataclass(frozen=True)
class StringSet:
    """A set of symbol strings plus a flag telling whether it is exhaustive.

    Iteration order is lexicographic by token sequence so every rendering is
    stable across runs.
    """

    strings: FrozenSet[SymbolString] = field(default_factory=frozenset)
    complete: bool = True

    @classmethod
    def of(cls, strings: Iterable[SymbolString], complete: bool = True):
        return cls(strings=frozenset(strings), complete=complete)

    @cached_property
    def ordered(self) -> Tuple[SymbolString, ...]:
        return tuple(sorted(self.strings))

    def __len__(self) -> int:
        return len(self.strings)

    def __iter__(self) -> Iterator[SymbolString]:
        return iter(self.ordered)

    def __contains__(self, item: object) -> bool:
        return item in self.strings

    def lines(self) -> Iterator[str]:
        """Text rendering: one string per line, then a ``# count=`` trailer."""
        for string in self.ordered:
            yield format_string(string)
        yield f"# count={len(self.strings)}"
