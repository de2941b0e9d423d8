"""Text and JSON formats for PQ-trees.

S-expression: a leaf is a bare token, an internal node is ``(P child ...)``
or ``(Q child ...)``. JSON: ``{"kind":"P","children":[...]}`` or
``{"kind":"leaf","label":"a"}``. Both printers are byte-stable.
"""

import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Dict, List, Union

from core.exceptions import MalformedTree, TreeParseError
from pqtree.models import NodeKind, PqNode, PqTree

logger = logging.getLogger(__name__)

_TOKENS = re.compile(r"\(|\)|[^\s()]+")


def format_node(node: PqNode) -> str:
    if node.is_leaf:
        return node.label
    parts = [node.kind.value] + [format_node(child) for child in node.children]
    return "(" + " ".join(parts) + ")"


def format_tree(tree: PqTree) -> str:
    """S-expression rendering of ``tree``."""
    return format_node(tree.root)


def parse_tree(text: str) -> PqTree:
    """Parse an s-expression; raises TreeParseError on bad syntax."""
    tokens = _TOKENS.findall(text)
    if not tokens:
        raise TreeParseError("Empty tree text")
    position = 0

    def parse_node() -> PqNode:
        nonlocal position
        if position >= len(tokens):
            raise TreeParseError("Unexpected end of input, missing ')'")
        token = tokens[position]
        position += 1
        if token == ")":
            raise TreeParseError(f"Unexpected ')' at token {position}")
        if token != "(":
            return PqNode.leaf(token)
        if position >= len(tokens):
            raise TreeParseError("Unexpected end of input after '('")
        kind = tokens[position]
        if kind not in (NodeKind.P.value, NodeKind.Q.value):
            raise TreeParseError(f"Expected P or Q after '(', got {kind!r}")
        position += 1
        children: List[PqNode] = []
        while position < len(tokens) and tokens[position] != ")":
            children.append(parse_node())
        if position >= len(tokens):
            raise TreeParseError(f"Unclosed {kind}-node")
        position += 1
        return PqNode(NodeKind(kind), children=tuple(children))

    try:
        root = parse_node()
    except MalformedTree as e:
        raise TreeParseError(str(e)) from e
    if position != len(tokens):
        raise TreeParseError(f"Trailing input after tree: {' '.join(tokens[position:])}")
    return PqTree(root)


def node_to_dict(node: PqNode) -> Dict[str, Any]:
    if node.is_leaf:
        return {"kind": NodeKind.LEAF.value, "label": node.label}
    return {"kind": node.kind.value, "children": [node_to_dict(child) for child in node.children]}


def node_from_dict(data: Any) -> PqNode:
    if not isinstance(data, dict):
        raise TreeParseError(f"Expected a JSON object for a node, got {type(data).__name__}")
    kind = data.get("kind")
    try:
        if kind == NodeKind.LEAF.value:
            if "children" in data:
                raise TreeParseError("Leaf object carries 'children'")
            return PqNode.leaf(data.get("label"))
        if kind in (NodeKind.P.value, NodeKind.Q.value):
            if "label" in data:
                raise TreeParseError(f"{kind}-node object carries 'label'")
            children = data.get("children", [])
            if not isinstance(children, list):
                raise TreeParseError(f"{kind}-node 'children' must be a list")
            return PqNode(NodeKind(kind), children=tuple(node_from_dict(child) for child in children))
    except MalformedTree as e:
        raise TreeParseError(str(e)) from e
    raise TreeParseError(f"Unknown node kind {kind!r}")


def tree_to_json(tree: PqTree) -> str:
    """Compact JSON rendering with keys in a fixed order."""
    return json.dumps(node_to_dict(tree.root), separators=(",", ":"), ensure_ascii=False)


def tree_from_json(text: str) -> PqTree:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TreeParseError(f"Invalid JSON: {e}") from e
    return PqTree(node_from_dict(data))


def loads_tree(text: str) -> PqTree:
    """Parse either format; JSON is recognized by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return tree_from_json(text)
    return parse_tree(text)


def load_tree(source: Union[str, Path]) -> PqTree:
    """Read a tree from a file path, or from stdin when ``source`` is ``-``."""
    if str(source) == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise TreeParseError(f"Cannot read tree file {source}: {e}") from e
    tree = loads_tree(text)
    logger.debug(f"Loaded tree with {tree.leaf_count} leaves from {source}")
    return tree


def save_tree(tree: PqTree, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.write_text(format_tree(tree) + "\n", encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path
