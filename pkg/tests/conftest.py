"""Shared independent oracles for the test suite.

These deliberately avoid the package's fraction-free elimination path:
ranks come from brute-force minor enumeration or from textbook Gaussian
elimination with rational division, so they can certify the fast path.
"""

import itertools
from fractions import Fraction

from mfkit.linalg import Matrix


def determinant(rows) -> Fraction:
    """Recursive Laplace expansion; fine for the small oracle cases."""
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * Fraction(rows[0][j]) * determinant(minor)
    return total


def minor_rank(m: Matrix) -> int:
    """Largest k such that some k x k minor is nonzero."""
    entries = [[m[i, j] for j in range(m.cols)] for i in range(m.rows)]
    for k in range(min(m.rows, m.cols), 0, -1):
        for rows in itertools.combinations(range(m.rows), k):
            for cols in itertools.combinations(range(m.cols), k):
                sub = [[entries[i][j] for j in cols] for i in rows]
                if determinant(sub) != 0:
                    return k
    return 0


def gauss_rank(m: Matrix) -> int:
    """Plain rational Gaussian elimination, dividing by pivots."""
    rows = [[m[i, j] for j in range(m.cols)] for i in range(m.rows)]
    rank = 0
    for c in range(m.cols):
        pivot = next((i for i in range(rank, m.rows) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        piv = rows[rank][c]
        rows[rank] = [x / piv for x in rows[rank]]
        for i in range(m.rows):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def span_equal(a: Matrix, b: Matrix) -> bool:
    """Row spaces coincide: both ranks equal the stacked rank."""
    ra, rb = gauss_rank(a), gauss_rank(b)
    return ra == rb == gauss_rank(a.vstack(b))
