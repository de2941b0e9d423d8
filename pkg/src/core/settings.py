"""Typed configuration values for enumeration budgets and the FMO solver."""

from dataclasses import dataclass

DEFAULT_ENUMERATION_LIMIT = 10_000_000
DEFAULT_FRONT_MAX_EDGES = 5
DEFAULT_FMO_ENGINE = "pruned"
DEFAULT_FMO_MAX_UNIVERSE = 20
SCHEMA_VERSION = 1


@dataclass
class EnumerationConfig:
    """Budgets for exact frontier enumeration."""

    default_limit: int = DEFAULT_ENUMERATION_LIMIT
    front_max_edges: int = DEFAULT_FRONT_MAX_EDGES

    @property
    def is_valid(self) -> bool:
        """Check that every budget is positive."""
        return self.default_limit > 0 and self.front_max_edges > 0


@dataclass
class FmoConfig:
    """Defaults for the FMO solver."""

    default_engine: str = DEFAULT_FMO_ENGINE
    max_universe: int = DEFAULT_FMO_MAX_UNIVERSE

    @property
    def is_valid(self) -> bool:
        return bool(self.default_engine) and self.max_universe > 0
