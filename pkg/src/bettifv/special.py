"""Stable ideals and Eliahou-Kervaire Betti numbers, quasi-forest
realizations of componentwise linear Betti sequences, generic ideals with
their Scarf complexes, and nearly scarf ideals.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from ._bits import iter_bits, mask_of, vertices_of
from .complexes import SimplicialComplex, cone, f_vector
from .errors import ConstructionError
from .fvectors import _colex_bounded, bjorner_kalai_lift, realize_acyclic
from .graphs import Graph
from .homology import QQ, Field, reduced_homology
from .ideals import MonomialIdeal

__all__ = [
    "is_stable",
    "is_strongly_stable",
    "stable_stats",
    "ek_betti",
    "stable_from_c",
    "betti_to_c",
    "quasi_forest_b",
    "quasi_forest_realize",
    "realize_componentwise_linear",
    "is_generic",
    "scarf_betti",
    "nearly_scarf_ideal",
    "nearly_scarf_acyclic_realization",
]

_SCARF_GENERATOR_CAP = 20


def _max_variable(g: tuple[int, ...]) -> int:
    """1-based index of the largest variable dividing the monomial."""
    for i in range(len(g) - 1, -1, -1):
        if g[i]:
            return i + 1
    raise ValueError("the unit monomial has no largest variable")


def is_stable(ideal: MonomialIdeal) -> bool:
    """Exchange check on generators: for u in G(I) and i < m(u), the monomial
    u * x_i / x_{m(u)} must again lie in I.  The zero ideal is stable."""
    for g in ideal.generators:
        m = _max_variable(g)
        for i in range(m - 1):
            e = list(g)
            e[m - 1] -= 1
            e[i] += 1
            if not ideal.contains_monomial(tuple(e)):
                return False
    return True


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """For u in G(I), x_i | u and j < i, the exchange u * x_j / x_i stays in I."""
    for g in ideal.generators:
        for i in range(len(g)):
            if not g[i]:
                continue
            for j in range(i):
                e = list(g)
                e[i] -= 1
                e[j] += 1
                if not ideal.contains_monomial(tuple(e)):
                    return False
    return True


def stable_stats(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Counts m_k of generators whose largest dividing variable is x_k,
    for k = 1..variable_count."""
    stats = [0] * ideal.variable_count
    for g in ideal.generators:
        stats[_max_variable(g) - 1] += 1
    return tuple(stats)


def ek_betti(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Eliahou-Kervaire: beta_i = sum_k m_k(I) * C(k-1, i) for a stable ideal."""
    if not is_stable(ideal):
        raise ValueError("the Eliahou-Kervaire formula needs a stable ideal")
    stats = stable_stats(ideal)
    out = []
    for i in range(ideal.variable_count):
        b = sum(mk * comb(k, i) for k, mk in enumerate(stats))  # k is 0-based k-1
        out.append(b)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def stable_from_c(c: tuple[int, ...]) -> MonomialIdeal:
    """The stable ideal whose m-statistics realize a c-sequence.

    For each i = 1..p+1 and k = 1..c_i the generator is
    (x_1^{c_2} ... x_{i-2}^{c_{i-1}}) * x_{i-1}^{c_i+1-k} * x_i^{c_{i+1}+k},
    with c_{p+2} = 0 and factors at index 0 read as 1.
    """
    c = tuple(c)
    if not c or c[0] != 1 or any(x <= 0 for x in c):
        raise ValueError("a c-sequence has positive entries and starts with 1")
    n = len(c)
    padded = c + (0,)  # 1-based access via padded[i-1]; c_{p+2} = 0
    gens = []
    for i in range(1, n + 1):
        for k in range(1, padded[i - 1] + 1):
            e = [0] * n
            for j in range(1, i - 1):  # prefix x_j^{c_{j+1}}
                e[j - 1] += padded[j]
            if i >= 2:
                e[i - 2] += padded[i - 1] + 1 - k
            e[i - 1] += padded[i] + k
            gens.append(tuple(e))
    ideal = MonomialIdeal(n, tuple(gens))
    if stable_stats(ideal) != c:
        raise ConstructionError(
            f"stable construction for {c} produced m-stats {stable_stats(ideal)}"
        )
    return ideal


def _solve_binomial_triangular(values: tuple[int, ...]) -> list[int]:
    """Solve values[i] = sum_k coeffs[k] * C(k, i) for k = i..top; the system
    is triangular with unit diagonal, so the integer solution is unique."""
    p = len(values)
    coeffs = [0] * p
    for i in range(p - 1, -1, -1):
        s = values[i] - sum(coeffs[k] * comb(k, i) for k in range(i + 1, p))
        coeffs[i] = s
    return coeffs


def betti_to_c(beta: tuple[int, ...]) -> tuple[int, ...] | None:
    """Invert beta_i = sum_k c_k * C(k-1, i); accepted when every c_k is
    positive and c_1 = 1 (the componentwise linear shape)."""
    beta = tuple(beta)
    if not beta:
        return None
    c = _solve_binomial_triangular(beta)
    if c[0] != 1 or any(x <= 0 for x in c):
        return None
    return tuple(c)


def quasi_forest_b(f: tuple[int, ...]) -> tuple[int, ...] | None:
    """Invert f_{i-1} = sum_k b_k * C(k-1, i-1); quasi-forest f-vectors are
    exactly those with all b_k positive."""
    f = tuple(f)
    if not f:
        return None
    b = _solve_binomial_triangular(f)
    if any(x <= 0 for x in b):
        return None
    return tuple(b)


def quasi_forest_realize(b: tuple[int, ...]) -> SimplicialComplex:
    """Clique complex of a chordal graph built by attaching, at stage k,
    b_k fresh vertices to the colex-least existing (k-1)-clique."""
    b = tuple(b)
    if any(x <= 0 for x in b):
        raise ValueError("a b-sequence has positive entries")
    adj: list[int] = []
    for k, count in enumerate(b, start=1):
        for _ in range(count):
            v = len(adj)
            if k == 1:
                clique: tuple[int, ...] = ()
            else:
                clique = next(
                    s
                    for s in _colex_bounded(k - 1, v)
                    if all(adj[x] >> y & 1 for x, y in combinations(s, 2))
                )
            adj.append(0)
            for w in clique:
                adj[v] |= 1 << w
                adj[w] |= 1 << v
    n = len(adj)
    graph = Graph(
        n,
        frozenset(
            (w, v) for v in range(n) for w in vertices_of(adj[v]) if w < v
        ),
    )
    faces = {0}
    stack = [(0, (1 << n) - 1)]
    while stack:
        face, cand = stack.pop()
        faces.add(face)
        m = cand
        while m:
            bit = m & -m
            m ^= bit
            w = bit.bit_length() - 1
            if face & ~adj[w] == 0:  # w adjacent to every current member
                stack.append((face | bit, m))
    return SimplicialComplex(n, frozenset(faces))


def realize_componentwise_linear(beta: tuple[int, ...]) -> SimplicialComplex:
    """An acyclic quasi-forest with f-vector beta: the cone over the
    quasi-forest realizing b with b_k = c_{k+1}."""
    c = betti_to_c(beta)
    if c is None:
        raise ValueError(f"{tuple(beta)} is not a componentwise linear Betti sequence")
    return cone(quasi_forest_realize(c[1:]) if len(c) > 1 else SimplicialComplex(0, frozenset((0,))), 1)


def is_generic(ideal: MonomialIdeal) -> bool:
    """No two generators share the same nonzero exponent on any variable."""
    for g, h in combinations(ideal.generators, 2):
        for a, b in zip(g, h):
            if a == b and a != 0:
                return False
    return True


def scarf_betti(ideal: MonomialIdeal) -> tuple[int, ...]:
    """f-vector of the Scarf complex: beta_i counts the (i+1)-subsets of the
    generators whose lcm differs from the lcm of every other subset.

    For generic ideals this is the Betti sequence of the minimal resolution.
    """
    if not is_generic(ideal):
        raise ValueError("the Scarf complex computes Betti numbers of generic ideals only")
    gens = ideal.generators
    g = len(gens)
    if g > _SCARF_GENERATOR_CAP:
        raise ValueError(f"{g} generators exceed the Scarf scan cap {_SCARF_GENERATOR_CAP}")
    if g == 0:
        return ()
    lcm_count: dict[tuple[int, ...], int] = {}
    lcms: list[tuple[int, ...]] = []
    for mask in range(1 << g):
        e = [0] * ideal.variable_count
        m = mask
        while m:
            bit = m & -m
            m ^= bit
            for i, x in enumerate(gens[bit.bit_length() - 1]):
                if x > e[i]:
                    e[i] = x
        key = tuple(e)
        lcms.append(key)
        lcm_count[key] = lcm_count.get(key, 0) + 1
    beta: dict[int, int] = {}
    for mask in range(1, 1 << g):
        if lcm_count[lcms[mask]] == 1:
            i = mask.bit_count() - 1
            beta[i] = beta.get(i, 0) + 1
    top = max(beta)
    return tuple(beta.get(i, 0) for i in range(top + 1))


def nearly_scarf_ideal(omega: SimplicialComplex) -> MonomialIdeal:
    """One variable per nonempty face of omega; the generator for vertex v is
    the product of the variables of the faces avoiding v.

    Requires every ambient vertex to be a face, at least two vertices (with
    one vertex the generator would be the empty product), and omega not the
    boundary of a simplex.
    """
    if omega.is_void or omega.is_empty:
        raise ValueError("the construction needs a complex with vertices")
    n = omega.vertex_count
    if tuple(range(n)) != omega.vertices():
        raise ValueError("every ambient vertex must be a face")
    if n < 2:
        raise ValueError("a single vertex lies in every face (empty-product generator)")
    full = (1 << n) - 1
    if full not in omega.faces and len(omega.faces) == (1 << n) - 1:
        raise ValueError("the boundary of a simplex is excluded")
    face_list = sorted(
        (f for f in omega.faces if f), key=lambda f: (f.bit_count(), f)
    )
    index = {f: i for i, f in enumerate(face_list)}
    names = tuple(
        "x_" + "_".join(str(v) for v in vertices_of(f)) for f in face_list
    )
    gens = []
    for v in range(n):
        e = [0] * len(face_list)
        for f in face_list:
            if not (f >> v) & 1:
                e[index[f]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(len(face_list), tuple(gens), names)


def nearly_scarf_acyclic_realization(
    omega: SimplicialComplex, field: Field = QQ
) -> SimplicialComplex:
    """An acyclic complex whose f-vector is the Betti sequence of the nearly
    scarf ideal of omega: lift the f-vector by the homology of omega, then
    realize.  A failing lift would contradict the lift theorem, so it is
    surfaced as a ConstructionError."""
    lifted = bjorner_kalai_lift(f_vector(omega), reduced_homology(omega, field))
    try:
        return realize_acyclic(lifted)
    except ValueError as exc:  # pragma: no cover - would contradict the theorem
        raise ConstructionError(f"lift {lifted} is not acyclic-realizable") from exc
