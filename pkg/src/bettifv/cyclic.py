"""Betti numbers of Stanley-Reisner ideals of even-dimensional cyclic
polytope boundaries, and their recursive f-vector realization.

For even d = 2d' and v > d the Betti sequence has top index v - 2d' - 1 with
top entry 1, and below that

    beta_i = C(v-d'-1, d'+i+1) * C(d'+i, d') + C(v-d'-1, i) * C(v-d'-i-2, d').

The realization recurses on v (and on d' through a companion complex two
vertices and one dimension-step down), gluing a cone over the previous
complex to the companion with one top face and one of its maximal subfaces
removed.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from ._bits import mask_of, vertices_of
from .complexes import SimplicialComplex, f_vector, from_facets
from .errors import ConstructionError

__all__ = ["cyclic_betti", "gale_boundary_complex", "realize_cyclic"]


def _validate_params(v: int, d: int, *, strict: bool = True) -> None:
    if d % 2 != 0 or d < 2:
        raise ValueError(f"dimension {d} must be even and >= 2")
    if v < d + 1:
        raise ValueError(f"need v >= d + 1, got v={v}, d={d}")
    if strict and v == d:
        raise ValueError("v must exceed d")


def cyclic_betti(v: int, d: int) -> tuple[int, ...]:
    """Betti sequence of the boundary-complex ideal of the cyclic d-polytope
    with v vertices; (1,) when v = d + 1."""
    _validate_params(v, d)
    half = d // 2
    top = v - 2 * half - 1
    out = []
    for i in range(top):
        out.append(
            comb(v - half - 1, half + i + 1) * comb(half + i, half)
            + comb(v - half - 1, i) * comb(v - half - i - 2, half)
        )
    out.append(1)
    return tuple(out)


def _gale_even(subset: tuple[int, ...], v: int) -> bool:
    """Gale evenness: every maximal run of consecutive elements touching
    neither end position 0 nor v-1 has even length."""
    runs: list[list[int]] = []
    for x in subset:
        if runs and runs[-1][-1] == x - 1:
            runs[-1].append(x)
        else:
            runs.append([x])
    for run in runs:
        if run[0] != 0 and run[-1] != v - 1 and len(run) % 2 == 1:
            return False
    return True


def gale_boundary_complex(v: int, d: int) -> SimplicialComplex:
    """Boundary complex of the cyclic d-polytope with v vertices: the
    downward closure of the d-subsets of the cyclically ordered vertex set
    satisfying Gale's evenness condition."""
    if d < 2 or v <= d:
        raise ValueError(f"need v > d >= 2, got v={v}, d={d}")
    facets = [s for s in combinations(range(v), d) if _gale_even(s, v)]
    return from_facets(facets, vertex_count=v)


def _realize(v: int, d: int) -> SimplicialComplex:
    if v == d + 1:
        return SimplicialComplex(1, frozenset((0, 1)))
    if v == d + 2:
        return SimplicialComplex(2, frozenset((0, 1, 2, 3)))
    if d == 2:
        prev = _realize(v - 1, 2)
        m = prev.vertex_count
        apex = 1 << m  # x_0
        fresh = (((1 << (v - 3)) - 1) << (m + 1)) | apex  # x_0, x_1..x_{v-3}
        cone_faces = prev.faces | {f | apex for f in prev.faces}
        simplex_faces = set()
        sub = fresh
        while True:
            simplex_faces.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & fresh
        simplex_faces.discard(fresh)
        simplex_faces.discard(fresh ^ apex)
        return SimplicialComplex(m + v - 2, frozenset(cone_faces | simplex_faces))
    sharp = _realize(v - 1, d)
    flat = _realize(v - 2, d - 2).shifted(sharp.vertex_count)
    top_size = v - d  # faces of dimension v - d - 1
    top_faces = [f for f in flat.faces if f.bit_count() == top_size]
    if len(top_faces) != 1:
        raise ConstructionError(
            f"expected a unique face of dimension {top_size - 1}, found {len(top_faces)}"
        )
    f_top = top_faces[0]
    # colex-first maximal proper subface: drop the largest vertex first
    removable = None
    for b in sorted(vertices_of(f_top), reverse=True):
        g = f_top ^ (1 << b)
        # removal keeps closure iff no face other than f_top still contains g
        if not any(h not in (f_top, g) and g & ~h == 0 for h in flat.faces):
            removable = g
            break
    if removable is None:
        raise ConstructionError("no maximal proper subface can be removed")
    flat_vertices = flat.vertices()
    apex_candidates = [u for u in flat_vertices if not (f_top >> u) & 1]
    y0 = apex_candidates[0] if apex_candidates else flat_vertices[0]
    apex_bit = 1 << y0
    faces = set(flat.faces)
    faces.discard(f_top)
    faces.discard(removable)
    faces |= sharp.faces | {f | apex_bit for f in sharp.faces}
    result = SimplicialComplex(flat.vertex_count, frozenset(faces))
    if not result.is_downward_closed():
        raise ConstructionError("removal broke downward closure")
    return result


def realize_cyclic(v: int, d: int) -> SimplicialComplex:
    """A simplicial complex whose f-vector equals cyclic_betti(v, d)."""
    _validate_params(v, d)
    result = _realize(v, d)
    expected = cyclic_betti(v, d)
    if f_vector(result) != expected:
        raise ConstructionError(
            f"realized f-vector {f_vector(result)} != {expected} for (v,d)=({v},{d})"
        )
    return result
