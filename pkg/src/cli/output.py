"""Stdout rendering shared by the subcommands."""

import json
from typing import Any, Iterable

from core.string_set import StringSet
from core.symbols import format_string


def emit(text: str = "") -> None:
    print(text)


def emit_lines(lines: Iterable[str]) -> None:
    for line in lines:
        print(line)


def emit_json(data: Any) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def string_set_to_dict(strings: StringSet, key: str) -> dict:
    return {
        "count": len(strings),
        "complete": strings.complete,
        key: [format_string(string) for string in strings],
    }
