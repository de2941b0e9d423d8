"""Base class for full multiset ordering engines."""

from abc import ABC, abstractmethod
from typing import Optional

from multiset.models import FmoInstance, SolutionSet


class FmoEngine(ABC):
    """Enumerates the strings drawn from all of R that contain every family member."""

    name: str = ""

    @abstractmethod
    def solve(self, instance: FmoInstance, limit: int, stop_after: Optional[int] = None) -> SolutionSet:
        """Return the solution set of ``instance``.

        Raises EnumerationBudgetExceeded when the engine's work would pass
        ``limit``. With ``stop_after`` the search ends once that many solutions
        are known and the result is marked incomplete if it stopped early.
        """
        pass
