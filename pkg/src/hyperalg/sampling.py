"""Seeded random generators for semiring values and arrays.

Numeric draws are integer-valued so every algebraic identity can be
checked exactly; set draws are small subsets of a fixed letter pool.
All functions take an explicit ``random.Random`` so runs replay from a
single 64-bit seed.
"""

from __future__ import annotations

import random

from .array import AssocArray, Key, build
from .semiring import UNIVERSE, SemiringSpec

LETTERS = "abcdef"

_NONNEG = {"max.times", "min.times"}


def random_value(rng: random.Random, s: SemiringSpec, *, nonzero: bool = False):
    """A random in-domain value; with nonzero=True, never the semiring 0."""
    if s.domain == "set":
        if not nonzero and rng.random() < 0.05:
            return frozenset()
        if rng.random() < 0.08:
            return UNIVERSE
        return frozenset(rng.sample(LETTERS, rng.randint(1, 3)))
    lo = 0 if s.name in _NONNEG else -9
    while True:
        v = rng.randint(lo, 9)
        if not (nonzero and v == s.zero):
            return v


def random_keys(rng: random.Random, n: int, *, pool: int = 20) -> list[Key]:
    """n distinct keys, a mix of small integers and short text labels."""
    ints = list(range(pool))
    texts = [f"k{i}" for i in range(pool)]
    return rng.sample(ints + texts, n)


def random_array(
    rng: random.Random,
    s: SemiringSpec,
    rows: list[Key],
    cols: list[Key],
    nnz: int,
) -> AssocArray:
    """Array with up to nnz entries at distinct coordinates drawn from rows x cols."""
    coords = [(r, c) for r in rows for c in cols]
    picked = rng.sample(coords, min(nnz, len(coords)))
    return build([(r, c, random_value(rng, s, nonzero=True)) for r, c in picked], s)


def random_permutation_pattern(
    rng: random.Random, s: SemiringSpec, n: int
) -> tuple[list[Key], list[Key]]:
    """Row and column key vectors of a random n-entry permutation pattern."""
    rows = random_keys(rng, n)
    cols = random_keys(rng, n)
    rng.shuffle(cols)
    return rows, cols


def overlapping_set(rng: random.Random, base: frozenset) -> frozenset:
    """A random set guaranteed to intersect `base` (for set-semiring trials)."""
    anchor = rng.choice(sorted(base)) if base is not UNIVERSE and base else LETTERS[0]
    extra = rng.sample(LETTERS, rng.randint(0, 2))
    return frozenset([anchor, *extra])
