"""FMO engines behind a common interface."""
from multiset.engines.base_engine import FmoEngine
from multiset.engines.factory import EngineFactory
from multiset.engines.registry import register_engines

# Register all engines
register_engines()

__all__ = ['FmoEngine', 'EngineFactory']
