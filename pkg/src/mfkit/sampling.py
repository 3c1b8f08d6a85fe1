"""Seeded random source for small rationals and generic projective points.

All genericity in this package is obtained by rejection sampling against
explicit predicates, never assumed.  The sampler draws numerators and
denominators bounded by a configurable bound (default 20) so exact
arithmetic stays fast while staying far from degeneracy.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .errors import GenericityFailure
from .projective import ProjectivePoint


class RationalSampler:
    """Deterministic stream of small rationals, points and permutations."""

    def __init__(self, seed: int = 0, bound: int = 20, max_retries: int = 1000):
        if bound < 2:
            raise ValueError("bound must be at least 2")
        self._rng = random.Random(seed)
        self.bound = bound
        self.max_retries = max_retries

    def integer(self, nonzero: bool = False) -> int:
        while True:
            v = self._rng.randint(-self.bound, self.bound)
            if v or not nonzero:
                return v

    def rational(self, nonzero: bool = False) -> Fraction:
        num = self.integer(nonzero=nonzero)
        den = self._rng.randint(1, self.bound)
        return Fraction(num, den)

    def point(self, dim: int) -> ProjectivePoint:
        """A point of P^dim with small rational coordinates, not all zero."""
        while True:
            coords = [self.rational() for _ in range(dim + 1)]
            if any(coords):
                return ProjectivePoint(coords)

    def generic_point(self, dim: int, accept=None) -> ProjectivePoint:
        """Rejection-sample a point until ``accept`` holds.

        Raises GenericityFailure after ``max_retries`` rejections, so a bad
        predicate fails loudly instead of looping forever.
        """
        for _ in range(self.max_retries):
            p = self.point(dim)
            if accept is None or accept(p):
                return p
        raise GenericityFailure(
            f"no acceptable point of P^{dim} within {self.max_retries} draws"
        )

    def parameter(self, avoid=()) -> ProjectivePoint:
        """A random point of P^1, distinct from every point in ``avoid``."""
        avoid = list(avoid)
        for _ in range(self.max_retries):
            p = self.point(1)
            if all(not (p == q) for q in avoid):
                return p
        raise GenericityFailure("could not draw a fresh parameter")

    def permutation(self, n: int) -> tuple[int, ...]:
        perm = list(range(n))
        self._rng.shuffle(perm)
        return tuple(perm)

    def shuffled(self, seq) -> list:
        out = list(seq)
        self._rng.shuffle(out)
        return out

    def subset(self, n: int, k: int) -> tuple[int, ...]:
        return tuple(sorted(self._rng.sample(range(n), k)))
