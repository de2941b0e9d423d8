"""Run the brute-force oracle and both reductions on one instance and compare."""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional

from core.config_manager import ConfigManager
from core.exceptions import C1pLabError, EnumerationBudgetExceeded
from core.settings import (
    DEFAULT_ENUMERATION_LIMIT,
    DEFAULT_FMO_ENGINE,
    DEFAULT_FMO_MAX_UNIVERSE,
    DEFAULT_FRONT_MAX_EDGES,
    SCHEMA_VERSION,
)
from reduction.fmo_reduction import count_ham_via_fmo
from reduction.front_reduction import count_ham_via_front
from reduction.graph import HamInstance
from reduction.hamiltonian import brute_force_ham

logger = logging.getLogger(__name__)


@dataclass
class Budgets:
    """Limits deciding which routes run."""

    limit: int = DEFAULT_ENUMERATION_LIMIT
    front_max_edges: int = DEFAULT_FRONT_MAX_EDGES
    fmo_max_universe: int = DEFAULT_FMO_MAX_UNIVERSE
    engine: str = DEFAULT_FMO_ENGINE

    @classmethod
    def from_config(cls, limit: Optional[int] = None, engine: Optional[str] = None) -> "Budgets":
        enumeration = ConfigManager.get_enumeration_config()
        fmo = ConfigManager.get_fmo_config()
        return cls(
            limit=limit or ConfigManager.get_default_limit(),
            front_max_edges=enumeration.front_max_edges,
            fmo_max_universe=fmo.max_universe,
            engine=engine or fmo.default_engine,
        )


@dataclass
class RouteResult:
    """Outcome of one counting route: a value, a skip reason or an error."""

    value: Optional[int] = None
    skipped: Optional[str] = None
    error: Optional[str] = None
    elapsed_ms: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def skip(cls, reason: str) -> "RouteResult":
        return cls(skipped=reason)

    @property
    def computed(self) -> bool:
        return self.value is not None

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"value": self.value, "elapsed_ms": round(self.elapsed_ms, 3)}
        if self.skipped:
            data["skipped"] = self.skipped
        if self.error:
            data["error"] = self.error
        return data


@dataclass
class HamCountReport:
    """Counts from every route, their intermediates and whether they agree."""

    brute: RouteResult
    via_front: RouteResult
    via_fmo: RouteResult
    agree: bool
    intermediates: Dict[str, Any]
    instance: Dict[str, int]

    def routes(self) -> Dict[str, RouteResult]:
        return {"brute": self.brute, "front": self.via_front, "fmo": self.via_fmo}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "instance": self.instance,
            "brute": self.brute.to_dict(),
            "via_front": self.via_front.to_dict(),
            "via_fmo": self.via_fmo.to_dict(),
            "agree": self.agree,
            "intermediates": self.intermediates,
        }


def _run(name: str, compute: Callable[[], Any]) -> RouteResult:
    started = time.perf_counter()
    try:
        outcome = compute()
    except EnumerationBudgetExceeded as e:
        logger.warning(f"Route {name} skipped: {e}")
        return RouteResult(skipped=str(e), elapsed_ms=(time.perf_counter() - started) * 1000)
    except C1pLabError as e:
        logger.error(f"Route {name} failed: {e}")
        return RouteResult(error=f"{type(e).__name__}: {e}", elapsed_ms=(time.perf_counter() - started) * 1000)
    elapsed = (time.perf_counter() - started) * 1000
    if isinstance(outcome, int):
        return RouteResult(value=outcome, elapsed_ms=elapsed)
    logger.info(f"Route {name}: {outcome.value} in {elapsed:.1f} ms")
    return RouteResult(value=outcome.value, elapsed_ms=elapsed, details=outcome.to_dict())


def cross_validate(instance: HamInstance, budgets: Optional[Budgets] = None) -> HamCountReport:
    """Count Hamiltonian sequences three ways.

    A route is skipped with a reason when the instance is over its size
    budget or its enumeration runs out of budget; a failing route records
    its error. ``agree`` holds when no route failed and every computed value
    is equal.
    """
    budgets = budgets or Budgets()
    graph = instance.graph
    edge_count = len(graph.edges)

    brute = _run("brute", lambda: brute_force_ham(instance))

    if edge_count > budgets.front_max_edges:
        reason = f"|E|={edge_count} exceeds front_max_edges={budgets.front_max_edges}"
        logger.warning(f"Route front skipped: {reason}")
        via_front = RouteResult.skip(reason)
    else:
        via_front = _run("front", lambda: count_ham_via_front(instance, budgets.limit))

    universe_size = 4 * edge_count + 4
    if universe_size > budgets.fmo_max_universe:
        reason = f"|R|={universe_size} exceeds max_universe={budgets.fmo_max_universe}"
        logger.warning(f"Route fmo skipped: {reason}")
        via_fmo = RouteResult.skip(reason)
    else:
        via_fmo = _run("fmo", lambda: count_ham_via_fmo(instance, budgets.engine, budgets.limit))

    routes = (brute, via_front, via_fmo)
    values = {route.value for route in routes if route.computed}
    agree = not any(route.error for route in routes) and len(values) <= 1
    if not agree:
        logger.error(f"Routes disagree: brute={brute.value}, front={via_front.value}, fmo={via_fmo.value}")

    intermediates: Dict[str, Any] = {"p": instance.excess}
    intermediates.update(via_front.details)
    intermediates.update(via_fmo.details)
    return HamCountReport(
        brute=brute,
        via_front=via_front,
        via_fmo=via_fmo,
        agree=agree,
        intermediates=intermediates,
        instance={"n": graph.vertex_count, "m": edge_count, "w": instance.source, "s": instance.dest},
    )
