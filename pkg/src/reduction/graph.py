"""Simple undirected graphs with designated endpoints, and the graph file format.

Graph file::

    % comment
    n m w s
    u v        (m lines)

Vertices are 1..n.
"""

import logging
import sys
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import FrozenSet, Iterable, List, Tuple, Union

import networkx as nx

from core.exceptions import InstanceParseError, InvalidInstance

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Vertices ``1..vertex_count``; each edge stored once as ``(low, high)``."""

    vertex_count: int
    edges: FrozenSet[Edge]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise InvalidInstance("vertex-range", f"graph needs at least one vertex, got {self.vertex_count}")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidInstance("self-loop", f"edge {{{u},{v}}} is a self-loop")
            for vertex in (u, v):
                if not 1 <= vertex <= self.vertex_count:
                    raise InvalidInstance("vertex-range", f"vertex {vertex} is outside 1..{self.vertex_count}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "Graph":
        """Build a graph from an edge list, rejecting repeated edges."""
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen and u != v:
                raise InvalidInstance("duplicate-edge", f"edge {{{u},{v}}} appears more than once")
            seen.add(key)
        return cls(vertex_count, frozenset(seen))

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    @cached_property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    @cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph

    def degree(self, vertex: int) -> int:
        return self.nx_graph.degree[vertex]

    def neighbors(self, vertex: int) -> List[int]:
        return sorted(self.nx_graph.neighbors(vertex))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


@dataclass(frozen=True)
class HamInstance:
    """A graph with source ``w`` and destination ``s``.

    Checked on construction: w != s, the graph is connected, w and s have
    degree at least one and every other vertex degree at least two.
    """

    graph: Graph
    source: int
    dest: int

    def __post_init__(self):
        graph = self.graph
        for name, vertex in (("source", self.source), ("destination", self.dest)):
            if vertex not in graph.vertices:
                raise InvalidInstance("endpoints", f"{name} {vertex} is outside 1..{graph.vertex_count}")
        if self.source == self.dest:
            raise InvalidInstance("endpoints", f"source and destination are both {self.source}")
        if not nx.is_connected(graph.nx_graph):
            components = nx.number_connected_components(graph.nx_graph)
            raise InvalidInstance("connectivity", f"graph is not connected ({components} components)")
        for vertex in graph.vertices:
            required = 1 if vertex in (self.source, self.dest) else 2
            if graph.degree(vertex) < required:
                raise InvalidInstance(
                    "degree",
                    f"vertex {vertex} has degree {graph.degree(vertex)}, needs at least {required}"
                )

    @property
    def endpoints(self) -> Tuple[int, int]:
        return self.source, self.dest

    @property
    def excess(self) -> int:
        """p = |E| - |V| + 1, the number of edges a Hamiltonian path leaves untraversed."""
        return len(self.graph.edges) - self.graph.vertex_count + 1


def _data_lines(text: str) -> List[Tuple[int, List[str]]]:
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("%", 1)[0].strip()
        if content:
            lines.append((number, content.split()))
    return lines


def _integers(number: int, fields: List[str], expected: int) -> List[int]:
    if len(fields) != expected:
        raise InstanceParseError(f"line {number}: expected {expected} integers, got {len(fields)}")
    try:
        return [int(field) for field in fields]
    except ValueError as e:
        raise InstanceParseError(f"line {number}: {e}") from e


def parse_graph_text(text: str) -> HamInstance:
    """Parse the ``n m w s`` header plus ``m`` edge lines."""
    lines = _data_lines(text)
    if not lines:
        raise InstanceParseError("Graph file is empty")
    number, fields = lines[0]
    vertex_count, edge_count, source, dest = _integers(number, fields, 4)
    edge_lines = lines[1:]
    if len(edge_lines) != edge_count:
        raise InstanceParseError(f"header announces {edge_count} edges, found {len(edge_lines)}")
    edges = [tuple(_integers(number, fields, 2)) for number, fields in edge_lines]
    instance = HamInstance(Graph.from_edges(vertex_count, edges), source, dest)
    logger.debug(f"Parsed graph: |V|={vertex_count}, |E|={edge_count}, w={source}, s={dest}")
    return instance


def load_graph_file(source: Union[str, Path]) -> HamInstance:
    """Read a graph file, or stdin when ``source`` is ``-``."""
    if str(source) == "-":
        return parse_graph_text(sys.stdin.read())
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise InstanceParseError(f"Cannot read graph file {source}: {e}") from e
    return parse_graph_text(text)


def format_graph(instance: HamInstance) -> str:
    graph = instance.graph
    lines = [f"{graph.vertex_count} {len(graph.edges)} {instance.source} {instance.dest}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges)
    return "\n".join(lines) + "\n"
