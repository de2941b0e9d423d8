"""Register all FMO engines."""

from multiset.engines.factory import EngineFactory
from multiset.engines.naive_engine import NaiveEngine
from multiset.engines.pruned_engine import PrunedEngine


def register_engines():
    """Register all FMO engines."""
    EngineFactory.register_engine(NaiveEngine)
    EngineFactory.register_engine(PrunedEngine)
