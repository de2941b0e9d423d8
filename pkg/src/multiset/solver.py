"""Entry points for counting and deciding full multiset orderings."""

import logging
from typing import Optional

from core.exceptions import EnumerationBudgetExceeded
from core.settings import DEFAULT_ENUMERATION_LIMIT, DEFAULT_FMO_ENGINE
from multiset.engines import EngineFactory
from multiset.models import FmoInstance, SolutionSet

logger = logging.getLogger(__name__)


def solve_fmo(instance: FmoInstance, engine: str = DEFAULT_FMO_ENGINE, limit: Optional[int] = None) -> SolutionSet:
    """All strings drawn from every symbol of R in which each member of F occurs."""
    limit = DEFAULT_ENUMERATION_LIMIT if limit is None else limit
    if limit <= 0:
        raise ValueError(f"Enumeration limit must be positive, got {limit}")
    solver = EngineFactory.get_engine(engine)
    logger.info(
        f"Solving FMO with the {solver.name} engine: |R|={instance.universe.size}, |F|={len(instance.family)}"
    )
    solutions = solver.solve(instance, limit)
    logger.info(f"{solver.name} engine found {len(solutions):,} solutions")
    return solutions


def count_fmo(instance: FmoInstance, engine: str = DEFAULT_FMO_ENGINE, limit: Optional[int] = None) -> int:
    solutions = solve_fmo(instance, engine, limit)
    if not solutions.complete:
        raise EnumerationBudgetExceeded(limit or DEFAULT_ENUMERATION_LIMIT, f"{engine} FMO search")
    return len(solutions)


def is_c1p(instance: FmoInstance, engine: str = DEFAULT_FMO_ENGINE, limit: Optional[int] = None) -> bool:
    """Whether at least one ordering exists; the search stops at the first one."""
    limit = DEFAULT_ENUMERATION_LIMIT if limit is None else limit
    solutions = EngineFactory.get_engine(engine).solve(instance, limit, stop_after=1)
    return len(solutions) > 0
