"""Projective points over the rationals and frame-transport projectivities.

Points are stored as exact homogeneous coordinate tuples.  Equality is
projective (up to a nonzero scalar) and is decided by cross-multiplication,
never by normalizing representatives; the canonical integer representative
exists only for hashing and readable output.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DegenerateFrame, DimensionMismatch, SingularMatrix
from .linalg import Matrix


class ProjectivePoint:
    """A point of d-dimensional projective space, d+1 homogeneous coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        cs = tuple(Fraction(c) for c in coords)
        if not cs:
            raise ValueError("a projective point needs at least one coordinate")
        if not any(cs):
            raise ValueError("the zero vector is not a projective point")
        self.coords = cs

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def canonical(self) -> tuple[int, ...]:
        """Primitive integer representative, first nonzero coordinate positive."""
        lcm = 1
        for x in self.coords:
            d = x.denominator
            lcm = lcm // gcd(lcm, d) * d
        ints = [int(x * lcm) for x in self.coords]
        g = 0
        for v in ints:
            g = gcd(g, v)
        first = next(v for v in ints if v)
        if first < 0:
            g = -g
        return tuple(v // g for v in ints)

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        if len(self.coords) != len(other.coords):
            return False
        return projective_equal(self, other)

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return "[" + " : ".join(str(c) for c in self.canonical()) + "]"


def coordinate_point(dim: int, index: int) -> ProjectivePoint:
    """The index-th coordinate point of P^dim."""
    return ProjectivePoint([int(i == index) for i in range(dim + 1)])


def unit_point(dim: int) -> ProjectivePoint:
    """The point [1 : ... : 1] of P^dim."""
    return ProjectivePoint([1] * (dim + 1))


def standard_frame(dim: int) -> list[ProjectivePoint]:
    """The dim+2 coordinate points of P^dim followed by the unit point."""
    return [coordinate_point(dim, i) for i in range(dim + 1)] + [unit_point(dim)]


def projective_equal(p: ProjectivePoint, q: ProjectivePoint) -> bool:
    """True iff p and q differ by a nonzero scalar.

    Decided by the rank-1 test on the 2 x (d+1) matrix with rows p, q,
    i.e. by cross-multiplication; no representative is ever normalized.
    """
    a, b = p.coords, q.coords
    if len(a) != len(b):
        raise DimensionMismatch(f"points of dimension {len(a)-1} and {len(b)-1}")
    i = next(k for k, x in enumerate(a) if x)
    if not b[i]:
        return False
    return all(a[k] * b[i] == b[k] * a[i] for k in range(len(a)))


def projectivity_from_frames(source, target) -> Matrix:
    """The projectivity carrying one frame to another, as a matrix.

    Both arguments are sequences of d+2 points of P^d with every d+1 of
    them linearly independent.  The returned (d+1)x(d+1) matrix M is
    invertible, unique up to a global scalar, and satisfies
    M * source[i] ~ target[i] for every i.
    """
    source = list(source)
    target = list(target)
    if len(source) != len(target):
        raise DimensionMismatch("frames of different sizes")
    d = source[0].dim
    if any(p.dim != d for p in source + target):
        raise DimensionMismatch("frame points of mixed dimensions")
    if len(source) != d + 2:
        raise DimensionMismatch(f"a frame of P^{d} has {d + 2} points, got {len(source)}")
    return _frame_matrix(target) * _frame_matrix(source).inverse()


def _frame_matrix(points) -> Matrix:
    """Matrix sending the standard frame to the given frame."""
    d = points[0].dim
    a = Matrix.from_columns([p.coords for p in points[: d + 1]])
    try:
        alpha = a.solve(points[d + 1].coords)
    except SingularMatrix:
        raise DegenerateFrame(f"points 0..{d} are linearly dependent") from None
    for i, x in enumerate(alpha):
        if x == 0:
            raise DegenerateFrame(
                f"dropping point {i} from the first {d + 1} leaves a dependent set "
                f"with the last point"
            )
    cols = [[x * alpha[j] for x in a.column(j)] for j in range(d + 1)]
    return Matrix.from_columns(cols)


def apply_matrix(m: Matrix, p: ProjectivePoint) -> ProjectivePoint:
    """Image of a point under a projectivity given by a matrix."""
    return ProjectivePoint(m.matvec(p.coords))
