"""Chordal graph recognition, the Ha-Van Tuyl Betti recursion for edge
ideals, and the constructive realization of the Betti sequence as an
f-vector.

The recursion removes an edge e = {u, v} at a simplicial vertex v and
combines the Betti sequences of G minus e and of the subgraph spanned by the
edges at distance at least 3 from e.  The realization mirrors the recursion
with colex complexes: the cone bound guarantees the smaller complex nests
inside the larger one, so a single fresh apex accounts for the second term.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from ._bits import mask_of, vertices_of
from .complexes import SimplicialComplex, cone_fvector, f_vector, union
from .errors import ConstructionError
from .fvectors import colex_complex
from .graphs import Graph, restrict_graph

__all__ = [
    "EliminationStep",
    "mcs_order",
    "peo",
    "is_chordal",
    "pick_step",
    "hvt_betti",
    "realize_chordal",
]


@dataclass(frozen=True)
class EliminationStep:
    """One step of the edge recursion.

    ``v`` is a simplicial vertex, ``u`` its least neighbor, ``t`` the number
    of other neighbors of u, and ``w_vertices`` spans the edges at distance
    at least 3 from {u, v}; those are exactly the edges avoiding
    {u, v} union N(u).
    """

    u: int
    v: int
    t: int
    w_vertices: tuple[int, ...]
    remainder: Graph
    reduced: Graph

    @property
    def edge(self) -> tuple[int, int]:
        return (min(self.u, self.v), max(self.u, self.v))


def mcs_order(graph: Graph) -> list[int]:
    """Maximum cardinality search visit order, lowest label first on ties."""
    n = graph.vertex_count
    adj = graph.adjacency()
    weight = [0] * n
    visited = [False] * n
    order = []
    for _ in range(n):
        best = -1
        for v in range(n):
            if not visited[v] and (best < 0 or weight[v] > weight[best]):
                best = v
        visited[best] = True
        order.append(best)
        m = adj[best]
        while m:
            b = m & -m
            m ^= b
            w = b.bit_length() - 1
            if not visited[w]:
                weight[w] += 1
    return order


def _is_simplicial(adj: list[int], v: int) -> bool:
    m = adj[v]
    while m:
        b = m & -m
        m ^= b
        w = b.bit_length() - 1
        if (adj[v] ^ b) & ~adj[w]:
            return False
    return True


def peo(graph: Graph) -> tuple[int, ...] | None:
    """A perfect elimination ordering (first vertex eliminated first), found
    by maximum cardinality search; None when the graph is not chordal."""
    order = mcs_order(graph)
    elimination = order[::-1]
    adj = list(graph.adjacency())
    for v in elimination:
        if not _is_simplicial(adj, v):
            return None
        m = adj[v]
        while m:
            b = m & -m
            m ^= b
            adj[b.bit_length() - 1] &= ~(1 << v)
        adj[v] = 0
    return tuple(elimination)


def is_chordal(graph: Graph) -> bool:
    return peo(graph) is not None


def _pick(graph: Graph) -> EliminationStep:
    """The deterministic elimination step; assumes the graph is chordal with
    at least one edge."""
    adj = graph.adjacency()
    v = next(
        w for w in mcs_order(graph) if adj[w] and _is_simplicial(adj, w)
    )
    u = (adj[v] & -adj[v]).bit_length() - 1
    t_mask = adj[u] & ~(1 << v)
    excluded = (1 << u) | (1 << v) | t_mask
    w_mask = 0
    for a, b in graph.edges:
        e_mask = (1 << a) | (1 << b)
        if e_mask & excluded == 0:
            w_mask |= e_mask
    return EliminationStep(
        u=u,
        v=v,
        t=t_mask.bit_count(),
        w_vertices=vertices_of(w_mask),
        remainder=graph.delete_edge(u, v),
        reduced=restrict_graph(graph, vertices_of(w_mask)),
    )


def pick_step(graph: Graph) -> EliminationStep:
    """Choose the recursion step: the first simplicial non-isolated vertex in
    maximum cardinality search order, with its least neighbor."""
    if not graph.edges:
        raise ValueError("the recursion step needs at least one edge")
    if not is_chordal(graph):
        raise ValueError("the recursion step needs a chordal graph")
    return _pick(graph)


_HVT_CACHE: dict[tuple[int, frozenset[tuple[int, int]]], tuple[int, ...]] = {}


def _canonical_key(graph: Graph) -> tuple[int, frozenset[tuple[int, int]]]:
    """Relabel the non-isolated vertices by degree-refined order.

    The key only improves cache reuse; correctness never depends on two
    isomorphic graphs colliding.
    """
    active = graph.non_isolated()
    adj = graph.adjacency()
    color = {v: adj[v].bit_count() for v in active}
    for _ in range(3):
        palette: dict[tuple, int] = {}
        new = {}
        for v in active:
            sig = (color[v], tuple(sorted(color[w] for w in vertices_of(adj[v]))))
            new[v] = palette.setdefault(sig, len(palette))
        if new == color:
            break
        color = new
    relabel = {
        v: i for i, v in enumerate(sorted(active, key=lambda v: (color[v], v)))
    }
    edges = frozenset(
        (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
        for a, b in graph.edges
    )
    return (len(active), edges)


def _hvt(graph: Graph) -> tuple[int, ...]:
    if not graph.edges:
        return ()
    if len(graph.edges) == 1:
        return (1,)
    key = _canonical_key(graph)
    cached = _HVT_CACHE.get(key)
    if cached is not None:
        return cached
    step = _pick(graph)
    base = _hvt(step.remainder)
    inner = (1,) + _hvt(step.reduced)  # prepend the implicit beta_{-1} = 1
    t = step.t
    length = max(len(base), t + len(inner))
    out = [0] * length
    for i, b in enumerate(base):
        out[i] = b
    for i in range(t + len(inner)):
        s = 0
        for ell in range(min(i, t) + 1):
            if i - ell < len(inner):
                s += comb(t, ell) * inner[i - ell]
        out[i] += s
    while out and out[-1] == 0:
        out.pop()
    result = tuple(out)
    _HVT_CACHE[key] = result
    return result


def hvt_betti(graph: Graph) -> tuple[int, ...]:
    """Total Betti numbers of the edge ideal of a chordal graph, by the
    Ha-Van Tuyl recursion.  The edgeless graph gives the empty sequence."""
    if not is_chordal(graph):
        raise ValueError("the recursion applies to chordal graphs only")
    return _hvt(graph)


def realize_chordal(graph: Graph) -> SimplicialComplex:
    """A simplicial complex whose f-vector equals hvt_betti(graph).

    Built per the recursion: colex-realize the f-vector of G minus e, then
    glue a cone (one fresh apex) over the colex realization of the t-fold
    cone f-vector coming from the reduced graph.  The nesting needed for the
    gluing is exactly the cone bound; its failure raises ConstructionError.
    """
    if not is_chordal(graph):
        raise ValueError("only chordal graphs are realized")
    if not graph.edges:
        raise ValueError("realization needs at least one edge")
    if len(graph.edges) == 1:
        result = SimplicialComplex(1, frozenset((0, 1)))
    else:
        step = _pick(graph)
        f_base = _hvt(step.remainder)
        f_reduced = _hvt(step.reduced)
        f_cone = cone_fvector(f_reduced, step.t)
        if len(f_cone) > len(f_base) or any(
            g > f_base[i] for i, g in enumerate(f_cone)
        ):
            raise ConstructionError(
                f"cone bound violated: {f_cone} exceeds {f_base}"
            )
        base = colex_complex(f_base)
        sub = colex_complex(f_cone)
        if not sub.faces <= base.faces:
            raise ConstructionError("colex nesting violated")
        apex = 1 << base.vertex_count
        coned = SimplicialComplex(
            base.vertex_count + 1,
            frozenset(sub.faces | {f | apex for f in sub.faces}),
        )
        result = union(base, coned)
    expected = _hvt(graph)
    if f_vector(result) != expected:
        raise ConstructionError(
            f"realized f-vector {f_vector(result)} != Betti sequence {expected}"
        )
    return result
