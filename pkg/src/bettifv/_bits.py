"""Bitmask helpers for vertex subsets and faces."""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex {v}")
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit components of ``mask``, lowest first."""
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(mask: int, within: int) -> int:
    """Re-index the bits of ``mask`` through the positions set in ``within``.

    ``mask`` must be a submask of ``within``; the k-th lowest bit of
    ``within`` becomes bit k of the result.
    """
    out = 0
    k = 0
    w = within
    while w:
        b = w & -w
        if mask & b:
            out |= 1 << k
        k += 1
        w ^= b
    return out
