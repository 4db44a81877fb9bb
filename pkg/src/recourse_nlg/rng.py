"""Deterministic draw sequence for lexical variation.

A fixed 32-bit linear congruential generator, seeded per run and salted per
decision kind, keeps synonym picks and template-variant mixes byte-identical
across runs, interpreters, and platforms. No global RNG state is involved.
"""

from __future__ import annotations

_A = 1664525
_C = 1013904223
_MASK = 0xFFFFFFFF


def fold(text: str) -> int:
    """Stable 32-bit FNV-1a fold of a string (PYTHONHASHSEED-independent)."""
    acc = 0x811C9DC5
    for byte in text.encode("utf-8"):
        acc = ((acc ^ byte) * 0x01000193) & _MASK
    return acc


def draw(seed: int, salt: str, index: int) -> int:
    """Return the index-th draw of the stream identified by (seed, salt).

    The state is advanced index+1 steps from the salted seed and the high
    16 bits are returned; low LCG bits alternate and would bias parity picks.
    """
    if index < 0:
        raise ValueError("draw index must be non-negative")
    state = (seed ^ fold(salt)) & _MASK
    for _ in range(index + 1):
        state = (state * _A + _C) & _MASK
    return (state >> 16) & 0xFFFF
