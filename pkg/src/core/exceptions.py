"""Exception hierarchy for c1p-lab.

Parsing and validation errors also derive from ``ValueError`` so callers that
already catch ``ValueError`` keep working.
"""

from typing import Optional


class C1pLabError(Exception):
    """Base class for all library errors."""


class MalformedTree(C1pLabError, ValueError):
    """A PQ-tree node violates the leaf/internal shape rules."""


class TreeParseError(C1pLabError, ValueError):
    """A PQ-tree text or JSON document could not be parsed."""


class DuplicateLeafLabels(C1pLabError, ValueError):
    """The distinct-leaf frontier formula was applied to repeated labels."""


class EnumerationBudgetExceeded(C1pLabError):
    """An exact enumeration would exceed its configured limit."""

    def __init__(self, limit: int, what: str = "enumeration"):
        self.limit = limit
        self.what = what
        super().__init__(f"{what} exceeded the limit of {limit:,} strings")


class EmptyPattern(C1pLabError, ValueError):
    """A π-pattern with no symbols was given."""


class InvalidInstance(C1pLabError, ValueError):
    """An input instance violates one of its structural assumptions.

    ``assumption`` names the violated rule (``connectivity``, ``degree``,
    ``endpoints``, ``self-loop``, ``duplicate-edge``, ``containment``,
    ``empty-member``, ``vertex-range``).
    """

    def __init__(self, assumption: str, message: str):
        self.assumption = assumption
        super().__init__(f"{assumption}: {message}")


class InstanceParseError(C1pLabError, ValueError):
    """A graph file or instance document could not be parsed."""


class InvalidSolution(C1pLabError, ValueError):
    """A candidate solution string is not drawn from the whole universe."""


class NonIntegerResult(C1pLabError, ArithmeticError):
    """A count-recovery division that must be exact left a remainder."""

    def __init__(self, numerator: int, denominator: int, detail: Optional[str] = None):
        self.numerator = numerator
        self.denominator = denominator
        message = f"{numerator} is not an exact multiple of {denominator}"
        if detail:
            message = f"{message} ({detail})"
        super().__init__(message)


class StructureViolation(C1pLabError):
    """A reduction solution does not have the expected block structure.

    ``check`` names the structural property that failed.
    """

    def __init__(self, check: str, message: str):
        self.check = check
        super().__init__(f"{check}: {message}")
