"""Finite simple graphs, their edge ideals and independence complexes."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from ._bits import mask_of, vertices_of
from .complexes import SimplicialComplex
from .ideals import MonomialIdeal

__all__ = [
    "Graph",
    "restrict_graph",
    "edge_ideal",
    "independence_complex",
    "complete_graph",
    "cycle_graph",
    "path_graph",
]


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertices 0..vertex_count-1.

    ``labels`` is an optional side map used only for I/O; it does not take
    part in equality or hashing.
    """

    vertex_count: int
    edges: frozenset[tuple[int, int]]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {e} out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.labels is not None and len(self.labels) != self.vertex_count:
            raise ValueError("labels must cover every vertex")

    def adjacency(self) -> list[int]:
        """Neighbor masks indexed by vertex."""
        adj = [0] * self.vertex_count
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertices_of(self.adjacency()[v])

    def degree(self, v: int) -> int:
        return self.adjacency()[v].bit_count()

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def delete_edge(self, u: int, v: int) -> "Graph":
        e = (min(u, v), max(u, v))
        if e not in self.edges:
            raise ValueError(f"edge {e} not present")
        return Graph(self.vertex_count, self.edges - {e}, self.labels)

    def non_isolated(self) -> tuple[int, ...]:
        seen = 0
        for u, v in self.edges:
            seen |= (1 << u) | (1 << v)
        return vertices_of(seen)

    def label_of(self, v: int) -> str:
        return self.labels[v] if self.labels else str(v)


def restrict_graph(graph: Graph, vertices: Iterable[int]) -> Graph:
    """The restriction to ``vertices``: edges with both endpoints inside."""
    w = mask_of(vertices)
    if w.bit_length() > graph.vertex_count:
        raise ValueError("vertex subset exceeds the vertex range")
    kept = frozenset(
        (u, v) for u, v in graph.edges if (w >> u) & 1 and (w >> v) & 1
    )
    return Graph(graph.vertex_count, kept, graph.labels)


def edge_ideal(graph: Graph) -> MonomialIdeal:
    """The squarefree ideal with one degree-2 generator x_u*x_v per edge."""
    n = graph.vertex_count
    gens = []
    for u, v in sorted(graph.edges):
        e = [0] * n
        e[u] = 1
        e[v] = 1
        gens.append(tuple(e))
    names = graph.labels
    return MonomialIdeal(n, tuple(gens), names)


def independence_complex(graph: Graph) -> SimplicialComplex:
    """The complex whose faces are the independent vertex sets of the graph.

    Its Stanley-Reisner ideal is the edge ideal.
    """
    adj = graph.adjacency()
    faces = set()
    full = (1 << graph.vertex_count) - 1
    stack = [(0, full)]
    while stack:
        face, cand = stack.pop()
        faces.add(face)
        m = cand
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            stack.append((face | b, m & ~adj[v]))
    return SimplicialComplex(graph.vertex_count, frozenset(faces))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))
