"""PQ-tree data model.

A tree is an immutable nest of :class:`PqNode` values. Leaves carry a symbol
token; P-nodes and Q-nodes carry an ordered tuple of children. Shape rules are
checked at construction, so a node that exists is well-formed.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterator, Optional, Tuple

from core.exceptions import MalformedTree
from core.string_set import StringSet
from core.symbols import Symbol, SymbolString, validate_token


class NodeKind(str, Enum):
    LEAF = "leaf"
    P = "P"
    Q = "Q"


@dataclass(frozen=True)
class PqNode:
    """A leaf, P-node or Q-node."""

    kind: NodeKind
    label: Optional[Symbol] = None
    children: Tuple["PqNode", ...] = ()

    def __post_init__(self):
        if not isinstance(self.kind, NodeKind):
            raise MalformedTree(f"Unknown node kind {self.kind!r}")
        if self.kind is NodeKind.LEAF:
            if self.children:
                raise MalformedTree(f"Leaf {self.label!r} has {len(self.children)} children")
            validate_token(self.label)
        else:
            if self.label is not None:
                raise MalformedTree(f"{self.kind.value}-node carries label {self.label!r}")
            for child in self.children:
                if not isinstance(child, PqNode):
                    raise MalformedTree(f"{self.kind.value}-node child {child!r} is not a node")

    @classmethod
    def leaf(cls, label: Symbol) -> "PqNode":
        return cls(NodeKind.LEAF, label=label)

    @classmethod
    def p(cls, *children: "PqNode") -> "PqNode":
        return cls(NodeKind.P, children=tuple(children))

    @classmethod
    def q(cls, *children: "PqNode") -> "PqNode":
        return cls(NodeKind.Q, children=tuple(children))

    @property
    def is_leaf(self) -> bool:
        return self.kind is NodeKind.LEAF

    def leaf_labels(self) -> Iterator[Symbol]:
        """Leaf labels in left-to-right preorder."""
        if self.is_leaf:
            yield self.label
            return
        for child in self.children:
            yield from child.leaf_labels()

    @cached_property
    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return sum(child.leaf_count for child in self.children)

    def iter_nodes(self) -> Iterator["PqNode"]:
        """All nodes of the subtree, preorder."""
        yield self
        for child in self.children:
            yield from child.iter_nodes()


@dataclass(frozen=True)
class PqTree:
    """A rooted PQ-tree."""

    root: PqNode

    @cached_property
    def leaf_multiset(self) -> Counter:
        return Counter(self.root.leaf_labels())

    @property
    def leaf_count(self) -> int:
        return self.root.leaf_count

    @property
    def has_distinct_labels(self) -> bool:
        return all(count == 1 for count in self.leaf_multiset.values())

    def frontier(self) -> SymbolString:
        return tuple(self.root.leaf_labels())

    def is_canonical(self) -> bool:
        """Every Q-node has at least two children and every P-node at least three.

        A childless root stands for the empty tree and is accepted.
        """
        if not self.root.is_leaf and not self.root.children:
            return True
        for node in self.root.iter_nodes():
            if node.kind is NodeKind.Q and len(node.children) < 2:
                return False
            if node.kind is NodeKind.P and len(node.children) < 3:
                return False
        return True


class FrontierSet(StringSet):
    """Fr(T): every distinct frontier of the trees equivalent to T."""
