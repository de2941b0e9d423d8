"""Factory for creating FMO engines by name."""

from typing import Dict, List, Type

from multiset.engines.base_engine import FmoEngine


class EngineFactory:
    """Looks up registered engines by name."""

    _engines: Dict[str, Type[FmoEngine]] = {}

    @classmethod
    def get_engine(cls, name: str) -> FmoEngine:
        """Get a new instance of the engine registered as ``name``."""
        engine_class = cls._engines.get(name)
        if engine_class is None:
            raise ValueError(f"Unknown engine {name!r}, expected one of: {', '.join(cls.available_engines())}")
        return engine_class()

    @classmethod
    def register_engine(cls, engine_class: Type[FmoEngine]) -> None:
        """Register an engine under its ``name``."""
        cls._engines[engine_class.name] = engine_class

    @classmethod
    def available_engines(cls) -> List[str]:
        return sorted(cls._engines)
