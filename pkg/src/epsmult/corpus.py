"""Seeded random monomial ideals for property suites and the lemma reports."""

from __future__ import annotations

import random

from .ideals import MonomialIdeal


def random_ideal(
    rng: random.Random,
    max_dim: int = 3,
    max_gens: int = 5,
    max_exp: int = 6,
) -> MonomialIdeal:
    """One random proper ideal.

    Dimension and generator count are uniform.  An exponent scale is drawn
    per ideal and the coordinates uniformly below it, so the corpus spans
    sparse shallow staircases and dense deep ones instead of clustering at
    the top of the exponent range.  The zero exponent vector is rejected,
    so the result is never the zero or unit ideal.
    """
    d = rng.randint(1, max_dim)
    count = rng.randint(1, max_gens)
    cap = rng.randint(1, max_exp)
    gens: list[tuple[int, ...]] = []
    while len(gens) < count:
        v = tuple(rng.randint(0, cap) for _ in range(d))
        if any(v):
            gens.append(v)
    return MonomialIdeal(d, gens)


def corpus(
    seed: int,
    size: int,
    max_dim: int = 3,
    max_gens: int = 5,
    max_exp: int = 6,
) -> list[MonomialIdeal]:
    """A reproducible list of random proper ideals."""
    rng = random.Random(seed)
    return [
        random_ideal(rng, max_dim=max_dim, max_gens=max_gens, max_exp=max_exp)
        for _ in range(size)
    ]
