"""Random trees and relabelling helpers for property checks and experiments."""

import random
import string
from typing import List, Optional, Sequence

from core.symbols import Symbol
from pqtree.models import NodeKind, PqNode, PqTree


def default_labels(count: int) -> List[Symbol]:
    """``a``, ``b``, ... then ``s26``, ``s27`` ... once the alphabet runs out."""
    letters = string.ascii_lowercase
    return [letters[i] if i < len(letters) else f"s{i}" for i in range(count)]


def _split(rng: random.Random, labels: Sequence[Symbol], parts: int) -> List[Sequence[Symbol]]:
    cuts = sorted(rng.sample(range(1, len(labels)), parts - 1))
    bounds = [0] + cuts + [len(labels)]
    return [labels[start:end] for start, end in zip(bounds, bounds[1:])]


def _build(rng: random.Random, labels: Sequence[Symbol], canonical: bool) -> PqNode:
    if len(labels) == 1:
        leaf = PqNode.leaf(labels[0])
        if not canonical and rng.random() < 0.15:
            return PqNode(rng.choice([NodeKind.P, NodeKind.Q]), children=(leaf,))
        return leaf

    if canonical:
        kind = NodeKind.P if len(labels) >= 3 and rng.random() < 0.5 else NodeKind.Q
        low = 3 if kind is NodeKind.P else 2
    else:
        kind = rng.choice([NodeKind.P, NodeKind.Q])
        low = 1
    parts = rng.randint(low, min(len(labels), 5))
    children = [_build(rng, group, canonical) for group in _split(rng, labels, parts)]
    if not canonical and rng.random() < 0.1:
        children.insert(rng.randrange(len(children) + 1), PqNode(NodeKind.P))
    return PqNode(kind, children=tuple(children))


def random_tree(
    rng: random.Random,
    leaf_count: int,
    distinct: bool = True,
    canonical: bool = True,
    alphabet: Optional[Sequence[Symbol]] = None,
) -> PqTree:
    """Random tree over ``leaf_count`` leaves.

    With ``distinct`` every leaf gets its own label, otherwise labels are drawn
    with repetition from ``alphabet`` (by default half as many letters as
    leaves). With ``canonical=False`` the tree may contain empty and
    single-child internal nodes as well as two-child P-nodes.
    """
    if leaf_count < 1:
        raise ValueError(f"leaf_count must be positive, got {leaf_count}")
    if distinct:
        labels = default_labels(leaf_count)
        rng.shuffle(labels)
    else:
        pool = list(alphabet) if alphabet else default_labels(max(1, leaf_count // 2))
        labels = [rng.choice(pool) for _ in range(leaf_count)]
    return PqTree(_build(rng, labels, canonical))


def relabel_distinct(tree: PqTree) -> PqTree:
    """Same shape with every leaf renamed ``<label>.<n>`` so labels never repeat."""
    seen = {}

    def rename(node: PqNode) -> PqNode:
        if node.is_leaf:
            seen[node.label] = seen.get(node.label, 0) + 1
            return PqNode.leaf(f"{node.label}.{seen[node.label]}")
        return PqNode(node.kind, children=tuple(rename(child) for child in node.children))

    return PqTree(rename(tree.root))
