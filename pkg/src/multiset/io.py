"""Instance JSON and solution text formats."""

import json
import logging
import sys
from pathlib import Path
from typing import Any, Dict, Union

from core.exceptions import InstanceParseError, MalformedTree
from multiset.models import FmoInstance, SymbolMultiset

logger = logging.getLogger(__name__)


def _multiset_from_json(value: Any, where: str) -> SymbolMultiset:
    if not isinstance(value, dict):
        raise InstanceParseError(f"{where} must be an object mapping symbols to counts")
    try:
        return SymbolMultiset(value)
    except (MalformedTree, ValueError) as e:
        raise InstanceParseError(f"{where}: {e}") from e


def instance_from_dict(data: Any) -> FmoInstance:
    if not isinstance(data, dict) or "R" not in data:
        raise InstanceParseError('Instance must be an object with keys "R" and "F"')
    family = data.get("F", [])
    if not isinstance(family, list):
        raise InstanceParseError('"F" must be a list of multisets')
    universe = _multiset_from_json(data["R"], "R")
    members = tuple(_multiset_from_json(member, f"F[{index}]") for index, member in enumerate(family))
    return FmoInstance(universe, members)


def instance_to_dict(instance: FmoInstance) -> Dict[str, Any]:
    return {
        "R": instance.universe.to_dict(),
        "F": [member.to_dict() for member in instance.family],
    }


def loads_instance(text: str) -> FmoInstance:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceParseError(f"Invalid JSON: {e}") from e
    return instance_from_dict(data)


def dumps_instance(instance: FmoInstance) -> str:
    return json.dumps(instance_to_dict(instance), indent=2, ensure_ascii=False)


def load_instance(source: Union[str, Path]) -> FmoInstance:
    """Read an instance from a JSON file, or from stdin when ``source`` is ``-``."""
    if str(source) == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise InstanceParseError(f"Cannot read instance file {source}: {e}") from e
    instance = loads_instance(text)
    logger.debug(f"Loaded instance from {source}: |R|={instance.universe.size}, |F|={len(instance.family)}")
    return instance


def save_instance(instance: FmoInstance, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(dumps_instance(instance) + "\n", encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path
