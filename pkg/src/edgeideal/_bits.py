"""Bit-set helpers. A vertex set over labels 0..63 is an int mask."""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex label {v}")
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself, ascending."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def lex_key(mask: int) -> tuple[int, ...]:
    return tuple(members(mask))


def maximal(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements of a family of sets, deduplicated."""
    uniq = sorted(set(masks), key=popcount, reverse=True)
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return kept


def minimal(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal elements of a family of sets, deduplicated."""
    uniq = sorted(set(masks), key=popcount)
    kept: list[int] = []
    for m in uniq:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def compact(masks: Iterable[int], support: int) -> tuple[int, ...]:
    """Relabel bits of ``support`` to 0..k-1 (order preserving) in each mask."""
    positions = members(support)
    out = []
    for m in masks:
        c = 0
        for i, v in enumerate(positions):
            if m >> v & 1:
                c |= 1 << i
        out.append(c)
    return tuple(out)


def expand(mask: int, positions: list[int]) -> int:
    """Inverse of :func:`compact` for a single mask."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << positions[i]
        mask >>= 1
        i += 1
    return out
