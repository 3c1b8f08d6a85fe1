"""Coordinatewise Cremona inversion and the birational system on P^(2n-3).

The inversion x_i -> 1/x_i, written with cleared denominators as
x_i -> prod_{j != i} x_j, is a birational involution fixing the unit point
and blowing down the coordinate hyperplanes.  It carries lines through the
unit point to rational normal curves through the full standard frame, which
is what makes it the projective shadow of forgetting a marked point.

The companion system here lives on P^(2n-3): forms of degree n-1 vanishing
to order n-2 at the standard frame of 2n-1 points.  Its dimension is the
same Catalan count as the contracting system one dimension up, and its
associated map is birational onto the same image.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CenterPoint, DimensionMismatch, IndeterminacyPoint
from .forms import LinearSystem, linear_system_basis
from .projective import ProjectivePoint, projective_equal, standard_frame, unit_point


def cremona_involution(x: ProjectivePoint) -> ProjectivePoint:
    """Coordinatewise inversion with cleared denominators.

    The image coordinate i is the product of all other coordinates; on
    points with every coordinate nonzero this squares to the identity.
    Points with two or more zero coordinates map to the zero vector and
    raise IndeterminacyPoint.
    """
    coords = x.coords
    out = []
    for i in range(len(coords)):
        v = 1
        for j, c in enumerate(coords):
            if j != i:
                v *= c
                if not v:
                    break
        out.append(v)
    if not any(out):
        raise IndeterminacyPoint(f"{x!r} has at least two zero coordinates")
    return ProjectivePoint(out)


def project_from_unit(x: ProjectivePoint) -> ProjectivePoint:
    """Linear projection from the unit point, dropping one dimension.

    Coordinates are x_i - x_last for i < last; the center itself raises
    CenterPoint.
    """
    if projective_equal(x, unit_point(x.dim)):
        raise CenterPoint("cannot project the center of projection")
    last = x.coords[-1]
    return ProjectivePoint([c - last for c in x.coords[:-1]])


def project_from_coordinate_point(x: ProjectivePoint, index: int) -> ProjectivePoint:
    """Linear projection from the index-th coordinate point (drops it)."""
    if not 0 <= index <= x.dim:
        raise DimensionMismatch(f"no coordinate point {index} in P^{x.dim}")
    rest = [c for i, c in enumerate(x.coords) if i != index]
    if not any(rest):
        raise CenterPoint("cannot project the center of projection")
    return ProjectivePoint(rest)


@dataclass(frozen=True)
class BirationalSystem:
    """Degree-(n-1) forms on P^(2n-3), order n-2 at the standard frame."""

    n: int
    system: LinearSystem

    @property
    def dimension(self) -> int:
        return self.system.dimension

    @property
    def basis(self):
        return self.system.basis

    def apply(self, y: ProjectivePoint) -> ProjectivePoint:
        return self.system.map_point(y)


@lru_cache(maxsize=None)
def birational_system(n: int) -> BirationalSystem:
    """Kumar-style system for 2n points; dimension is the Catalan count.

    For n = 2 the multiplicity n-2 imposes nothing and the system is all
    linear forms on P^1.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    ambient = 2 * n - 3
    frame = standard_frame(ambient)
    if n == 2:
        constraints = []
    else:
        constraints = [(p, n - 2) for p in frame]
    return BirationalSystem(n, linear_system_basis(ambient, n - 1, constraints))
