"""Kruskal-Katona machinery, colex realizations, and Kalai's acyclic test.

Index conventions: an f-vector (f_0, ..., f_{d-1}) counts faces by dimension
with f_{-1} = 1 implicit; Macaulay representations are written with respect
to subset *size*, so faces of dimension i are counted as (i+1)-subsets.
"""

from __future__ import annotations

from collections.abc import Iterator
from itertools import count, islice
from math import comb

from ._bits import mask_of
from .complexes import SimplicialComplex, cone
from .homology import HomologyProfile

__all__ = [
    "macaulay_rep",
    "macaulay_value",
    "kk_lower_shadow_min",
    "kk_valid",
    "colex_subsets",
    "colex_complex",
    "kalai_decompose",
    "realize_acyclic",
    "bjorner_kalai_lift",
]


def macaulay_rep(a: int, i: int) -> list[tuple[int, int]]:
    """The unique i-binomial representation of a >= 1.

    Returns pairs [(a_i, i), (a_{i-1}, i-1), ...] with a = sum C(a_k, k),
    a_i > a_{i-1} > ... >= the trailing index >= 1, chosen greedily from the
    top index down.
    """
    if a <= 0:
        raise ValueError("the Macaulay representation needs a positive integer")
    if i < 1:
        raise ValueError("the representation index must be >= 1")
    rep: list[tuple[int, int]] = []
    remaining = a
    k = i
    upper_bound: int | None = None
    while remaining > 0:
        ak = k
        while comb(ak + 1, k) <= remaining and (upper_bound is None or ak + 1 < upper_bound):
            ak += 1
        rep.append((ak, k))
        remaining -= comb(ak, k)
        upper_bound = ak
        k -= 1
        if k == 0 and remaining > 0:
            raise ValueError(f"no {i}-binomial representation for {a}")
    return rep


def macaulay_value(rep: list[tuple[int, int]]) -> int:
    return sum(comb(ak, k) for ak, k in rep)


def kk_lower_shadow_min(a: int, i: int) -> int:
    """Minimal number of (i-1)-subsets lying below some family of a i-subsets.

    This is the Kruskal-Katona shadow bound: replace C(a_k, k) by C(a_k, k-1)
    in the Macaulay representation.  Zero when a = 0.
    """
    if a == 0:
        return 0
    return sum(comb(ak, k - 1) for ak, k in macaulay_rep(a, i))


def kk_valid(f: tuple[int, ...]) -> bool:
    """Whether f is the f-vector of some simplicial complex.

    Requires positive entries and, for each consecutive pair, enough
    i-dimensional faces to hold the shadow of the (i+1)-dimensional ones.
    The empty vector (the empty complex) is valid.
    """
    if any(x <= 0 for x in f):
        return False
    for i in range(len(f) - 1):
        if f[i] < kk_lower_shadow_min(f[i + 1], i + 2):
            return False
    return True


def _colex_bounded(k: int, bound: int) -> Iterator[tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for top in range(k - 1, bound):
        for rest in _colex_bounded(k - 1, top):
            yield rest + (top,)


def colex_subsets(k: int) -> Iterator[tuple[int, ...]]:
    """All k-subsets of the nonnegative integers in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in count(k - 1):
        for rest in _colex_bounded(k - 1, top):
            yield rest + (top,)


def colex_complex(f: tuple[int, ...]) -> SimplicialComplex:
    """The compressed complex whose i-faces are the first f_i (i+1)-subsets
    in colex order, on an ambient vertex set of size f_0.

    Valid input (kk_valid) guarantees downward closure, and componentwise
    smaller f-vectors give nested complexes.
    """
    f = tuple(f)
    if not kk_valid(f):
        raise ValueError(f"{f} fails the Kruskal-Katona condition")
    faces = {0}
    for i, fi in enumerate(f):
        for subset in islice(colex_subsets(i + 1), fi):
            faces.add(mask_of(subset))
    n = f[0] if f else 0
    return SimplicialComplex(n, frozenset(faces))


def kalai_decompose(f: tuple[int, ...]) -> tuple[int, ...] | None:
    """Kalai's test for f-vectors of acyclic complexes.

    An f-vector of positive entries is acyclic-realizable exactly when the
    unique candidate f' with f_i = f'_i + f'_{i-1} (f'_{-1} = 1, f'_{d-1} = 0)
    has positive entries through dimension d-2 and passes kk_valid.  Returns
    f' on success, None otherwise.
    """
    f = tuple(f)
    if not f or any(x <= 0 for x in f):
        return None
    d = len(f)
    prev = 1
    candidate = []
    for i in range(d):
        cur = f[i] - prev
        candidate.append(cur)
        prev = cur
    if candidate[-1] != 0:
        return None
    reduced = tuple(candidate[:-1])
    if any(x <= 0 for x in reduced):
        return None
    if not kk_valid(reduced):
        return None
    return reduced


def realize_acyclic(f: tuple[int, ...]) -> SimplicialComplex:
    """A complex with f-vector f that is acyclic over every field: the cone
    over the colex realization of the Kalai decomposition."""
    reduced = kalai_decompose(f)
    if reduced is None:
        raise ValueError(f"{tuple(f)} is not the f-vector of an acyclic complex")
    return cone(colex_complex(reduced), 1)


def bjorner_kalai_lift(f: tuple[int, ...], profile: HomologyProfile) -> tuple[int, ...]:
    """Add each homology dimension one degree up: f'_i = f_i + dim H~_{i-1}.

    ``profile`` must come from a complex realizing f (so it has entries for
    degrees -1 .. len(f)-1).  The result is always acyclic-realizable.
    """
    f = tuple(f)
    if len(profile.dims) != len(f) + 1:
        raise ValueError(
            f"profile covers degrees -1..{len(profile.dims) - 2}, "
            f"but the f-vector has dimension {len(f) - 1}"
        )
    lifted = [f[i] + profile.dim(i - 1) for i in range(len(f))]
    lifted.append(profile.dim(len(f) - 1))
    while lifted and lifted[-1] == 0:
        lifted.pop()
    return tuple(lifted)
