"""Brute-force Hamiltonian path oracle."""

import logging
from typing import Iterator, List, Tuple

from reduction.graph import HamInstance

logger = logging.getLogger(__name__)

VertexSequence = Tuple[int, ...]


def _paths_from(instance: HamInstance, start: int, end: int) -> Iterator[VertexSequence]:
    graph = instance.graph
    total = graph.vertex_count
    path = [start]
    visited = {start}

    def extend() -> Iterator[VertexSequence]:
        current = path[-1]
        if len(path) == total:
            if current == end:
                yield tuple(path)
            return
        for neighbor in graph.neighbors(current):
            # The far endpoint may only close the path
            if neighbor in visited or (neighbor == end and len(path) < total - 1):
                continue
            visited.add(neighbor)
            path.append(neighbor)
            yield from extend()
            path.pop()
            visited.remove(neighbor)

    yield from extend()


def enumerate_ham_paths(instance: HamInstance) -> List[VertexSequence]:
    """Every vertex sequence visiting each vertex once along edges with endpoints {w, s}.

    Both orientations of a path are listed; the result is sorted.
    """
    w, s = instance.endpoints
    paths = list(_paths_from(instance, w, s)) + list(_paths_from(instance, s, w))
    return sorted(paths)


def brute_force_ham(instance: HamInstance) -> int:
    """Number of Hamiltonian sequences with endpoint set {w, s}; a path and its reversal count twice."""
    count = len(enumerate_ham_paths(instance))
    logger.info(f"Brute force: {count} Hamiltonian sequences")
    return count
