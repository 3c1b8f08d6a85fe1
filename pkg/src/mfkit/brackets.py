"""Bracket invariants of point configurations on the projective line.

A configuration is an ordered tuple of 2n points of P^1 (collisions
allowed).  The degree-(1,...,1) invariants under simultaneous Moebius
action are spanned by the bracket monomials over non-crossing perfect
matchings of {1,...,2n}; there are (2n)!/((n+1)! n!) of them and together
they embed the quotient of the semistable locus.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import comb

from .errors import DimensionMismatch
from .linalg import Matrix
from .projective import ProjectivePoint

Configuration = tuple[ProjectivePoint, ...]
Matching = tuple[tuple[int, int], ...]


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def _noncrossing(points: tuple[int, ...]):
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points), 2):
        partner = points[k]
        for inner in _noncrossing(points[1:k]):
            for outer in _noncrossing(points[k + 1:]):
                yield ((first, partner),) + inner + outer


@lru_cache(maxsize=None)
def noncrossing_matchings(n: int) -> tuple[Matching, ...]:
    """All non-crossing perfect matchings of {0,...,2n-1}, fixed order.

    Point 1 of a matched pair is always the smaller index; the first point
    pairs with ascending partners, recursively.  The count is the Catalan
    number (2n)!/((n+1)! n!).
    """
    if n < 1:
        raise ValueError("need n >= 1")
    return tuple(_noncrossing(tuple(range(2 * n))))


def bracket(p: ProjectivePoint, q: ProjectivePoint) -> Fraction:
    """The 2x2 determinant s_p t_q - s_q t_p of two points of the line."""
    if p.dim != 1 or q.dim != 1:
        raise DimensionMismatch("brackets are defined for points of P^1")
    return p.coords[0] * q.coords[1] - q.coords[0] * p.coords[1]


def _check_configuration(n: int, config) -> Configuration:
    config = tuple(config)
    if len(config) != 2 * n:
        raise DimensionMismatch(f"expected {2 * n} points, got {len(config)}")
    for p in config:
        if p.dim != 1:
            raise DimensionMismatch("configuration points must lie on P^1")
    return config


def git_point(n: int, config) -> ProjectivePoint | None:
    """Evaluate all non-crossing bracket monomials at the configuration.

    Returns the projective image, or None when every monomial vanishes
    (exactly the unstable configurations).
    """
    config = _check_configuration(n, config)
    values = []
    for matching in noncrossing_matchings(n):
        v = Fraction(1)
        for i, j in matching:
            v *= bracket(config[i], config[j])
            if not v:
                break
        values.append(v)
    if not any(values):
        return None
    return ProjectivePoint(values)


class Stability(enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    UNSTABLE = "unstable"


def classify_stability(n: int, config) -> Stability:
    """Classify by the maximal collision multiplicity m: m < n stable,
    m = n strictly semistable, m > n unstable."""
    config = _check_configuration(n, config)
    counts: dict[tuple[int, ...], int] = {}
    for p in config:
        key = p.canonical()
        counts[key] = counts.get(key, 0) + 1
    m = max(counts.values())
    if m < n:
        return Stability.STABLE
    if m == n:
        return Stability.STRICTLY_SEMISTABLE
    return Stability.UNSTABLE


def apply_mobius(g: Matrix, config) -> Configuration:
    """Act on every point of a configuration by a 2x2 matrix."""
    if g.rows != 2 or g.cols != 2:
        raise DimensionMismatch("a Moebius transformation is a 2x2 matrix")
    return tuple(ProjectivePoint(g.matvec(p.coords)) for p in config)


def fit_linear_map(pairs) -> Matrix | None:
    """Recover the matrix M with M * source ~ target from sample pairs.

    Each pair contributes the proportionality constraints
    (M s)_a t_b - (M s)_b t_a = 0, which are linear in the entries of M.
    Returns M when the joint solution space is exactly one-dimensional and
    M is invertible, None otherwise.  Constraint rows beyond roughly twice
    the unknown count are enforced by substitution instead of elimination,
    which keeps the cost flat in the number of pairs.
    """
    pairs = [(s.coords, t.coords) for s, t in pairs]
    if not pairs:
        return None
    dd = len(pairs[0][0])
    if dd < 2 or any(len(s) != dd or len(t) != dd for s, t in pairs):
        return None
    unknowns = dd * dd

    def rows_for(src, tgt):
        rows = []
        for a in range(dd):
            for b in range(a + 1, dd):
                row = [Fraction(0)] * unknowns
                for c in range(dd):
                    row[a * dd + c] += src[c] * tgt[b]
                    row[b * dd + c] -= src[c] * tgt[a]
                rows.append(row)
        return rows

    stacked: list[list[Fraction]] = []
    threshold = 2 * unknowns
    kernel = None
    rest_start = len(pairs)
    for idx, (src, tgt) in enumerate(pairs):
        stacked.extend(rows_for(src, tgt))
        if len(stacked) >= threshold or idx == len(pairs) - 1:
            kernel = Matrix(stacked).kernel_basis()
            if not kernel:
                return None
            if len(kernel) == 1 or idx == len(pairs) - 1:
                rest_start = idx + 1
                break
            threshold *= 2
    if kernel is None or len(kernel) != 1:
        return None
    vec = kernel[0]
    m = Matrix([vec[r * dd:(r + 1) * dd] for r in range(dd)])
    for src, tgt in pairs[rest_start:]:
        img = m.matvec(src)
        for a in range(dd):
            for b in range(a + 1, dd):
                if img[a] * tgt[b] != img[b] * tgt[a]:
                    return None
    if m.rank() != dd:
        return None
    return m
