"""Canonical form of PQ-trees."""

import logging
from typing import Optional

from pqtree.models import NodeKind, PqNode, PqTree

logger = logging.getLogger(__name__)


def _canonical_node(node: PqNode) -> Optional[PqNode]:
    """Canonical form of ``node``, or None when the node holds no leaves."""
    if node.is_leaf:
        return node
    children = [c for c in (_canonical_node(child) for child in node.children) if c is not None]
    if not children:
        return None
    if len(children) == 1:
        return children[0]
    if node.kind is NodeKind.P and len(children) == 2:
        return PqNode.q(*children)
    return PqNode(node.kind, children=tuple(children))


def canonicalize(tree: PqTree) -> PqTree:
    """Return an equivalent tree in canonical form.

    Applied bottom-up: childless internal nodes are dropped, single-child
    internal nodes are replaced by their child and two-child P-nodes become
    Q-nodes. None of these change the frontier set. A tree with no leaves at
    all becomes an empty Q root.
    """
    root = _canonical_node(tree.root)
    if root is None:
        logger.debug("Tree has no leaves, canonical form is the empty tree")
        return PqTree(PqNode.q())
    return PqTree(root)
