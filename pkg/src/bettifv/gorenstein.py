"""Betti shapes of Gorenstein monomial ideals: symmetry, the projective
dimension 3 classification, admissibility of (beta_0, projdim) pairs, and
witness constructions.

Witnesses use three supported routes: complete intersections, the pentagon
family (boundary complexes of even cyclic polytopes with an odd vertex
count) with fresh linear generators adjoined, and a fixed 7-generator ideal
for the shape (7, 12, 7, 1); each adjoined variable raises both beta_0 and
the projective dimension by one.  The even shapes (m+1, 2m, m+1, 1) with
m >= 8 even have no in-scope construction and yield None.
"""

from __future__ import annotations

from ._bits import iter_bits, vertices_of
from .complexes import SimplicialComplex, f_vector, induced_subcomplex
from .cyclic import gale_boundary_complex
from .fvectors import realize_acyclic
from .homology import QQ, Field, reduced_homology
from .ideals import MonomialIdeal, stanley_reisner_ideal

__all__ = [
    "betti_symmetric",
    "is_gorenstein_complex",
    "gorenstein_p3_shape",
    "admissible",
    "construct_gorenstein",
    "realize_gorenstein_p3",
    "seven_generator_witness",
]


def betti_symmetric(beta: tuple[int, ...]) -> bool:
    """Whether (1, beta_0, ..., beta_p) is palindromic, i.e. beta_i equals
    beta_{p-1-i} with beta_{-1} = 1."""
    ext = (1,) + tuple(beta)
    return ext == ext[::-1]


def _is_sphere_profile(complex_: SimplicialComplex, field: Field) -> bool:
    profile = reduced_homology(complex_, field)
    top = complex_.dimension
    return profile.dim(top) == 1 and all(
        profile.dim(i) == 0 for i in range(-1, top)
    )


def _link(complex_: SimplicialComplex, face: int) -> SimplicialComplex:
    faces = frozenset(
        g & ~face for g in complex_.faces if g & face == face
    )
    return SimplicialComplex(complex_.vertex_count, faces)


def is_gorenstein_complex(complex_: SimplicialComplex, field: Field = QQ) -> bool:
    """Homological Gorenstein test: restrict to the core (drop the vertices
    lying in every facet), then require every link, the complex itself
    included, to have the reduced homology of a sphere of its dimension."""
    if complex_.is_void:
        raise ValueError("the void complex is not testable")
    facets = complex_.facets()
    common = facets[0]
    for f in facets[1:]:
        common &= f
    core_vertices = [v for v in complex_.vertices() if not (common >> v) & 1]
    core = induced_subcomplex(complex_, core_vertices)
    for face in core.faces:
        if not _is_sphere_profile(_link(core, face), field):
            return False
    return True


def gorenstein_p3_shape(m: int) -> tuple[int, ...]:
    """The forced Betti sequence (m+1, 2m, m+1, 1) at projective dimension 3;
    symmetry and the alternating sum leave no other shape, and the Taylor
    bound forces m >= 3."""
    if m < 3:
        raise ValueError("beta_0 - 1 = m must be at least projdim = 3")
    return (m + 1, 2 * m, m + 1, 1)


def admissible(m: int, p: int) -> bool:
    """Whether some Gorenstein monomial ideal has beta_0 = m and projective
    dimension p: exactly when m >= p + 1 and m != p + 2."""
    if m < 4 or p < 3:
        raise ValueError("the classification covers m >= 4, p >= 3")
    return m >= p + 1 and m != p + 2


def seven_generator_witness() -> MonomialIdeal:
    """The Gorenstein ideal with Betti sequence (7, 12, 7, 1): generators
    x1x4, x1x5, x2x6, x3x7, x4x6, x4x7, x2x3x5 in seven variables."""
    gens = [
        (1, 0, 0, 1, 0, 0, 0),
        (1, 0, 0, 0, 1, 0, 0),
        (0, 1, 0, 0, 0, 1, 0),
        (0, 0, 1, 0, 0, 0, 1),
        (0, 0, 0, 1, 0, 1, 0),
        (0, 0, 0, 1, 0, 0, 1),
        (0, 1, 1, 0, 1, 0, 0),
    ]
    return MonomialIdeal(7, tuple(gens))


def _koszul_ideal(k: int) -> MonomialIdeal:
    gens = []
    for i in range(k):
        e = [0] * k
        e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal(k, tuple(gens))


def _adjoin_fresh_variables(ideal: MonomialIdeal, count: int) -> MonomialIdeal:
    for _ in range(count):
        ideal = ideal.with_adjoined_variable()
    return ideal


def construct_gorenstein(m: int, p: int) -> MonomialIdeal | None:
    """A Gorenstein monomial ideal with beta_0 = m + 1 and projective
    dimension p, or None when no in-scope construction exists.

    Supported: beta_0 = p + 1 (a complete intersection of linear forms);
    beta_0 - p odd (an odd pentagon-family base plus adjoined variables);
    beta_0 - p = 4 (the seven-generator witness plus adjoined variables).
    The remaining admissible cases, beta_0 - p even >= 6, rely on machinery
    outside this package and return None.
    """
    if m < 3 or p < 3:
        raise ValueError("the constructions cover m >= 3 and p >= 3")
    target_b0 = m + 1
    if target_b0 < p + 1 or target_b0 == p + 2:
        return None  # not admissible
    diff = target_b0 - p
    if diff == 1:
        return _koszul_ideal(p + 1)
    if diff % 2 == 1:
        base_b0 = diff + 2  # odd, >= 5
        k = (base_b0 - 3) // 2
        base = stanley_reisner_ideal(gale_boundary_complex(2 * k + 3, 2 * k))
        return _adjoin_fresh_variables(base, p - 2)
    if diff == 4:
        return _adjoin_fresh_variables(seven_generator_witness(), p - 3)
    return None  # even beta_0 - p >= 6: construction out of scope


def realize_gorenstein_p3(m: int) -> SimplicialComplex:
    """An acyclic complex with f-vector (m+1, 2m, m+1, 1)."""
    return realize_acyclic(gorenstein_p3_shape(m))
