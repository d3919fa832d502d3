"""Monomial ideals given by their minimal generating exponent vectors."""

from __future__ import annotations

from dataclasses import dataclass, field

from ._bits import iter_bits, mask_of, vertices_of
from .complexes import SimplicialComplex

__all__ = [
    "MonomialIdeal",
    "stanley_reisner_ideal",
    "complex_of_ideal",
    "polarize",
]

_SR_VARIABLE_CAP = 20


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(vectors: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    vectors = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept: list[tuple[int, ...]] = []
    for v in vectors:
        if not any(_divides(k, v) for k in kept):
            kept.append(v)
    return kept


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, normalized to its minimal generating set.

    Generators are exponent vectors of length ``variable_count``; the
    constructor removes divisible generators and sorts the rest.  The zero
    ideal has no generators.  ``variable_names`` is an I/O side map only.
    """

    variable_count: int
    generators: tuple[tuple[int, ...], ...]
    variable_names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.variable_count < 0:
            raise ValueError("variable_count must be >= 0")
        vecs = []
        for g in self.generators:
            g = tuple(g)
            if len(g) != self.variable_count:
                raise ValueError("generator length must equal variable_count")
            if any(e < 0 for e in g):
                raise ValueError("exponents must be >= 0")
            if not any(g):
                raise ValueError("the unit monomial cannot be a generator")
            vecs.append(g)
        object.__setattr__(self, "generators", tuple(_minimalize(vecs)))
        if self.variable_names is not None and len(self.variable_names) != self.variable_count:
            raise ValueError("variable_names must cover every variable")

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    def supports(self) -> tuple[int, ...]:
        """Support masks of the generators, in generator order."""
        return tuple(
            mask_of(i for i, e in enumerate(g) if e) for g in self.generators
        )

    def degrees(self) -> tuple[int, ...]:
        return tuple(sum(g) for g in self.generators)

    def colon_by_variable(self, var: int) -> "MonomialIdeal":
        """The quotient I : x_var, computed on generators and re-minimalized."""
        if not 0 <= var < self.variable_count:
            raise ValueError("variable index out of range")
        quot = []
        for g in self.generators:
            h = list(g)
            if h[var]:
                h[var] -= 1
            if not any(h):
                raise ValueError("colon yields the unit ideal")
            quot.append(tuple(h))
        return MonomialIdeal(self.variable_count, tuple(quot), self.variable_names)

    def with_adjoined_variable(self, name: str | None = None) -> "MonomialIdeal":
        """I + (y) for a fresh variable y appended after the current ones."""
        n = self.variable_count
        gens = [g + (0,) for g in self.generators]
        gens.append((0,) * n + (1,))
        names = None
        if self.variable_names is not None:
            names = self.variable_names + (name or f"y{n + 1}",)
        return MonomialIdeal(n + 1, tuple(gens), names)

    def contains_monomial(self, exponents: tuple[int, ...]) -> bool:
        return any(_divides(g, exponents) for g in self.generators)

    def __repr__(self) -> str:
        return (
            f"MonomialIdeal(n={self.variable_count}, "
            f"generators={list(self.generators)!r})"
        )


def faces_avoiding(vertex_count: int, supports: tuple[int, ...]) -> set[int]:
    """All subsets of 0..vertex_count-1 containing none of the support masks.

    Output-sensitive depth-first enumeration; includes the empty face.
    """
    by_vertex: list[list[int]] = [[] for _ in range(vertex_count)]
    for s in supports:
        if s == 0:
            return set()  # unit ideal: no faces at all
        for b in iter_bits(s):
            by_vertex[b.bit_length() - 1].append(s)
    faces: set[int] = set()
    full = (1 << vertex_count) - 1
    stack = [(0, full)]
    while stack:
        face, cand = stack.pop()
        faces.add(face)
        m = cand
        while m:
            b = m & -m
            m ^= b
            v = b.bit_length() - 1
            extended = face | b
            if all(s & ~extended for s in by_vertex[v]):
                stack.append((extended, m))
    return faces


def stanley_reisner_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
    """The squarefree ideal generated by the minimal non-faces."""
    if complex_.is_void:
        raise ValueError("the void complex has the unit Stanley-Reisner ideal")
    n = complex_.vertex_count
    if n > _SR_VARIABLE_CAP:
        raise ValueError(f"vertex count {n} exceeds cap {_SR_VARIABLE_CAP}")
    faces = complex_.faces
    gens = []
    for mask in range(1, 1 << n):
        if mask in faces:
            continue
        if all((mask ^ b) in faces for b in iter_bits(mask)):
            e = [0] * n
            for v in vertices_of(mask):
                e[v] = 1
            gens.append(tuple(e))
    return MonomialIdeal(n, tuple(gens))


def complex_of_ideal(ideal: MonomialIdeal) -> SimplicialComplex:
    """The complex whose faces carry no generator support; inverse of
    :func:`stanley_reisner_ideal` on squarefree ideals."""
    if not ideal.is_squarefree:
        raise ValueError("only squarefree ideals correspond to complexes")
    n = ideal.variable_count
    if n > _SR_VARIABLE_CAP:
        raise ValueError(f"variable count {n} exceeds cap {_SR_VARIABLE_CAP}")
    return SimplicialComplex(n, frozenset(faces_avoiding(n, ideal.supports())))


def polarize(ideal: MonomialIdeal) -> MonomialIdeal:
    """Standard polarization: exponent e of a variable becomes a product of
    e distinct copies.  Betti numbers are preserved; squarefree ideals map to
    themselves.

    Copy 1 of variable i keeps index i; higher copies are appended after the
    original variables, ordered by (variable, copy).
    """
    n = ideal.variable_count
    if ideal.is_squarefree:
        return ideal
    max_exp = [0] * n
    for g in ideal.generators:
        for i, e in enumerate(g):
            max_exp[i] = max(max_exp[i], e)
    slot: dict[tuple[int, int], int] = {}
    nxt = n
    for i in range(n):
        for j in range(1, max_exp[i] + 1):
            if j == 1:
                slot[(i, 1)] = i
            else:
                slot[(i, j)] = nxt
                nxt += 1
    gens = []
    for g in ideal.generators:
        e = [0] * nxt
        for i, exp in enumerate(g):
            for j in range(1, exp + 1):
                e[slot[(i, j)]] = 1
        gens.append(tuple(e))
    return MonomialIdeal(nxt, tuple(gens))
