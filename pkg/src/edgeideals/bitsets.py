"""Helpers for subsets of {0..63} encoded as Python ints."""

from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def compress(mask: int, sub: int) -> int:
    """Re-index the bits of mask (required to lie inside sub) to dense
    positions 0..popcount(sub)-1, following sub's ascending bit order."""
    out = 0
    i = 0
    s = sub
    while s:
        b = s & -s
        if mask & b:
            out |= 1 << i
        i += 1
        s ^= b
    return out


def expand(mask: int, sub: int) -> int:
    """Inverse of compress: map dense bit i back to the i-th bit of sub."""
    out = 0
    i = 0
    s = sub
    while s:
        b = s & -s
        if mask >> i & 1:
            out |= b
        i += 1
        s ^= b
    return out
