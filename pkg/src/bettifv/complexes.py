"""Simplicial complexes on small vertex sets, stored as explicit face families.

Faces are bitmasks over vertices 0..vertex_count-1.  Every nonempty complex
contains the empty face (mask 0).  Two degenerate complexes are distinguished:
the *void* complex has no faces at all, while the *empty* complex consists of
the empty face alone.  The empty complex has f-vector (), with f_{-1} = 1
implicit; the void complex has no f-vector.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import comb

from ._bits import iter_bits, mask_of, submasks, vertices_of

__all__ = [
    "SimplicialComplex",
    "from_facets",
    "f_vector",
    "cone",
    "union",
    "induced_subcomplex",
    "cone_fvector",
    "full_simplex",
]


@dataclass(frozen=True)
class SimplicialComplex:
    """A downward-closed family of vertex subsets, encoded as bitmasks."""

    vertex_count: int
    faces: frozenset[int]

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be >= 0")
        if not isinstance(self.faces, frozenset):
            object.__setattr__(self, "faces", frozenset(self.faces))
        if self.faces and 0 not in self.faces:
            raise ValueError("a nonempty complex must contain the empty face")
        limit = 1 << self.vertex_count
        for f in self.faces:
            if f < 0 or f >= limit:
                raise ValueError(f"face {f:b} exceeds vertex range {self.vertex_count}")

    @property
    def is_void(self) -> bool:
        return not self.faces

    @property
    def is_empty(self) -> bool:
        return self.faces == frozenset((0,))

    @property
    def dimension(self) -> int:
        """Dimension of the complex; -1 for the empty complex."""
        if self.is_void:
            raise ValueError("the void complex has no dimension")
        return max(f.bit_count() for f in self.faces) - 1

    def vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.vertex_count) if (1 << v) in self.faces)

    def has_face(self, vertices: Iterable[int]) -> bool:
        return mask_of(vertices) in self.faces

    def facets(self) -> list[int]:
        """Masks of the inclusion-maximal faces."""
        out = []
        for f in self.faces:
            rest = ((1 << self.vertex_count) - 1) & ~f
            if all(f | b not in self.faces for b in iter_bits(rest)):
                out.append(f)
        return sorted(out)

    def facet_vertex_sets(self) -> list[tuple[int, ...]]:
        return sorted(vertices_of(f) for f in self.facets())

    def is_downward_closed(self) -> bool:
        for f in self.faces:
            for b in iter_bits(f):
                if f ^ b not in self.faces:
                    return False
        return True

    def shifted(self, offset: int) -> "SimplicialComplex":
        """The same complex with every vertex index raised by ``offset``."""
        if offset < 0:
            raise ValueError("offset must be >= 0")
        return SimplicialComplex(
            self.vertex_count + offset, frozenset(f << offset for f in self.faces)
        )

    def __repr__(self) -> str:  # keep test output readable
        if self.is_void:
            return f"SimplicialComplex(n={self.vertex_count}, void)"
        return (
            f"SimplicialComplex(n={self.vertex_count}, "
            f"facets={self.facet_vertex_sets()!r})"
        )


def from_facets(
    facets: Iterable[Iterable[int]], vertex_count: int | None = None
) -> SimplicialComplex:
    """Downward closure of the given facets.

    Duplicate or mutually contained facets are absorbed.  With no facets the
    result is the void complex.
    """
    masks = [mask_of(f) for f in facets]
    if vertex_count is None:
        vertex_count = max((m.bit_length() for m in masks), default=0)
    faces: set[int] = set()
    for m in masks:
        if m.bit_length() > vertex_count:
            raise ValueError("facet vertex out of range")
        if m in faces:
            continue
        faces.update(submasks(m))
    return SimplicialComplex(vertex_count, frozenset(faces))


def full_simplex(k: int) -> SimplicialComplex:
    """The full simplex on k vertices; k = 0 gives the empty complex."""
    return SimplicialComplex(k, frozenset(range(1 << k)))


def f_vector(complex_: SimplicialComplex) -> tuple[int, ...]:
    """Face counts (f_0, ..., f_{d-1}); f_{-1} = 1 stays implicit.

    The empty complex has f-vector ().  The void complex has none.
    """
    if complex_.is_void:
        raise ValueError("the void complex has no f-vector")
    counts: dict[int, int] = {}
    for f in complex_.faces:
        k = f.bit_count()
        if k:
            counts[k - 1] = counts.get(k - 1, 0) + 1
    if not counts:
        return ()
    return tuple(counts.get(i, 0) for i in range(max(counts) + 1))


def cone(complex_: SimplicialComplex, t: int = 1) -> SimplicialComplex:
    """Iterated cone with ``t`` fresh apex vertices appended at the top.

    Satisfies f_i(cone^t) = sum_l C(t, l) * f_{i-l} with f_{-1} = 1.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    n = complex_.vertex_count
    apex_mask = ((1 << t) - 1) << n
    faces = frozenset(
        f | a for f in complex_.faces for a in submasks(apex_mask)
    )
    return SimplicialComplex(n + t, faces)


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Set union of faces on the shared ambient vertex range."""
    return SimplicialComplex(max(a.vertex_count, b.vertex_count), a.faces | b.faces)


def induced_subcomplex(
    complex_: SimplicialComplex, vertices: Iterable[int]
) -> SimplicialComplex:
    """Faces of the complex contained in the given vertex set.

    The ambient vertex range is kept unchanged.
    """
    u = mask_of(vertices)
    if u.bit_length() > complex_.vertex_count:
        raise ValueError("vertex subset exceeds the vertex range")
    return SimplicialComplex(
        complex_.vertex_count, frozenset(f for f in complex_.faces if f & ~u == 0)
    )


def cone_fvector(f: tuple[int, ...], t: int) -> tuple[int, ...]:
    """f-vector of the t-fold cone over a complex with f-vector ``f``.

    Entry i is sum_{l=0}^{i+1} C(t, l) * f_{i-l}, reading f_{-1} = 1.
    """
    if t < 0:
        raise ValueError("t must be >= 0")
    ext = (1,) + tuple(f)  # ext[k] = f_{k-1}
    out = []
    for i in range(len(f) + t):
        s = 0
        for ell in range(min(i + 1, t) + 1):
            k = i - ell + 1
            if 0 <= k < len(ext):
                s += comb(t, ell) * ext[k]
        out.append(s)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)
