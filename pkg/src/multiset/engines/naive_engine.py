"""Generate-and-filter engine used as the correctness oracle."""

import logging
from typing import Optional

from core.combinatorics import multinomial, multiset_permutations
from core.exceptions import EnumerationBudgetExceeded
from multiset.engines.base_engine import FmoEngine
from multiset.models import FmoInstance, SolutionSet
from multiset.patterns import contains

logger = logging.getLogger(__name__)


class NaiveEngine(FmoEngine):
    """Every distinct arrangement of R, kept when each family member occurs in it.

    The budget counts arrangements examined.
    """

    name = "naive"

    def solve(self, instance: FmoInstance, limit: int, stop_after: Optional[int] = None) -> SolutionSet:
        total = multinomial(instance.universe.values())
        if stop_after is None and total > limit:
            raise EnumerationBudgetExceeded(limit, f"naive search over {total:,} arrangements")
        family = instance.deduplicated_family
        logger.debug(f"Naive engine: {total:,} arrangements, {len(family)} constraints")

        found = set()
        for examined, candidate in enumerate(multiset_permutations(instance.universe), start=1):
            if examined > limit:
                raise EnumerationBudgetExceeded(limit, "naive search")
            if all(contains(member, candidate) for member in family):
                found.add(candidate)
                if stop_after is not None and len(found) >= stop_after:
                    return SolutionSet.of(found, complete=examined == total)
        return SolutionSet.of(found)
