"""Structural equivalence of PQ-trees through canonical signatures."""

from typing import Tuple, Union

from pqtree.canonical import canonicalize
from pqtree.models import NodeKind, PqNode, PqTree

Signature = Tuple[str, Union[str, Tuple]]


def signature(node: PqNode) -> Signature:
    """Normal form of a subtree under P-permutation and Q-reversal.

    A P-node's signature sorts its children's signatures; a Q-node's keeps
    the smaller of the child sequence and its reversal.
    """
    if node.is_leaf:
        return ("L", node.label)
    children = tuple(signature(child) for child in node.children)
    if node.kind is NodeKind.P:
        return ("P", tuple(sorted(children)))
    return ("Q", min(children, children[::-1]))


def equivalent(first: PqTree, second: PqTree) -> bool:
    """Whether one tree is obtained from the other by permuting P-children and reversing Q-children."""
    return signature(canonicalize(first).root) == signature(canonicalize(second).root)
