"""Symbol tokens and the reserved tokens generated by the reductions.

Symbols are plain ``str`` tokens; strings over symbols are tuples of tokens.
"""

import re
from typing import Iterable, Tuple

from core.exceptions import MalformedTree

Symbol = str
SymbolString = Tuple[Symbol, ...]

START_MARKER = "$"
SEPARATOR_MARKER = "#"

# Parentheses are excluded so every token survives the s-expression format.
_FORBIDDEN = re.compile(r"[\s()]")
_RESERVED = re.compile(r"^(\$|#|c_\d+|cp_\d+|d_\d+_\d+)$")


def validate_token(token: object) -> Symbol:
    """Return ``token`` if it is a usable symbol, raise MalformedTree otherwise."""
    if not isinstance(token, str) or not token:
        raise MalformedTree(f"Symbol must be a nonempty string, got {token!r}")
    if _FORBIDDEN.search(token) or not token.isprintable():
        raise MalformedTree(f"Symbol {token!r} contains whitespace, parentheses or control characters")
    return token


def is_reserved_token(token: Symbol) -> bool:
    """Whether ``token`` belongs to the grammar used by the reductions."""
    return bool(_RESERVED.match(token))


def vertex_token(vertex: int) -> Symbol:
    return str(vertex)


def endpoint_token(vertex: int) -> Symbol:
    return f"c_{vertex}"


def endpoint_guard_token(vertex: int) -> Symbol:
    return f"cp_{vertex}"


def edge_token(i: int, j: int) -> Symbol:
    """Token for the ordered pair (i, j); ``edge_token(1, 2) != edge_token(2, 1)``."""
    return f"d_{i}_{j}"


def format_string(symbols: Iterable[Symbol]) -> str:
    """Space-separated rendering used by every text output."""
    return " ".join(symbols)


def parse_string(text: str) -> SymbolString:
    """Inverse of :func:`format_string`."""
    return tuple(validate_token(token) for token in text.split())
