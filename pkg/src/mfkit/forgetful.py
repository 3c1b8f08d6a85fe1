"""The contracting linear system on P^(2n-2) and its point-to-configuration map.

Fix the 2n standard base points of P^(2n-2): the 2n-1 coordinate points
followed by the unit point.  The degree-n forms vanishing to order n-1 at
all of them form a linear system of dimension (2n)!/((n+1)! n!) whose
associated map contracts every rational normal curve through the base
points to a single image point.  Vanishing to order n-1 at the coordinate
points alone forces a form to be a combination of the square-free
monomials x_I over n-subsets I of the coordinates; the unit point then
imposes one linear condition per (n-2)-subset J, namely that the
coefficients of the monomials containing J sum to zero.  The system is
computed as the exact kernel of that subset-incidence matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import BaseLocusPoint, DegenerateConfiguration, DimensionMismatch
from .forms import HomogeneousForm, LinearSystem, linear_system_basis
from .linalg import Matrix
from .projective import (
    ProjectivePoint,
    coordinate_point,
    projectivity_from_frames,
    unit_point,
)


def system_dimension(n: int) -> int:
    """(2n)!/((n+1)! n!), the dimension of the contracting system."""
    return factorial(2 * n) // (factorial(n + 1) * factorial(n))


def standard_base(n: int) -> tuple[ProjectivePoint, ...]:
    """The 2n base points of P^(2n-2): coordinate points, then the unit point."""
    if n < 2:
        raise ValueError("need n >= 2")
    d = 2 * n - 2
    return tuple(coordinate_point(d, i) for i in range(d + 1)) + (unit_point(d),)


def monomial_subsets(n: int) -> tuple[tuple[int, ...], ...]:
    """The n-subsets of the 2n-1 coordinates, in canonical monomial order."""
    return tuple(itertools.combinations(range(2 * n - 1), n))


def incidence_matrix(n: int) -> Matrix:
    """Containment matrix of (n-2)-subsets against n-subsets of 2n-1 indices.

    Rows are indexed by the (n-2)-subsets J, columns by the n-subsets I;
    the entry is 1 exactly when J is contained in I.  It always has full
    row rank, so the conditions it encodes are independent.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    cols = monomial_subsets(n)
    col_sets = [frozenset(c) for c in cols]
    rows = []
    for j_sub in itertools.combinations(range(2 * n - 1), n - 2):
        j_set = frozenset(j_sub)
        rows.append([1 if j_set <= c else 0 for c in col_sets])
    return Matrix(rows)


@dataclass(frozen=True)
class ForgetfulSystem:
    """The contracting system for a given n, with its square-free support."""

    n: int
    subsets: tuple[tuple[int, ...], ...]
    system: LinearSystem

    @property
    def dimension(self) -> int:
        return self.system.dimension

    @property
    def basis(self) -> tuple[HomogeneousForm, ...]:
        return self.system.basis

    def apply(self, x: ProjectivePoint) -> ProjectivePoint:
        """Image of x under the associated map of the system."""
        return self.system.map_point(x)

    def jacobian_rank(self, x: ProjectivePoint) -> int:
        """Exact rank of the matrix of first partials of the basis at x.

        The projective dimension of the image near a generic point is this
        rank minus one.  Raises BaseLocusPoint when x is in the base locus.
        """
        if self.system.vanishes_at(x):
            raise BaseLocusPoint(f"{x!r} lies in the base locus")
        rows = [
            [f.differentiate(v).evaluate(x) for v in range(2 * self.n - 1)]
            for f in self.basis
        ]
        return Matrix(rows).rank()


@lru_cache(maxsize=None)
def forgetful_system(n: int) -> ForgetfulSystem:
    """The contracting system, cut out combinatorially.

    Basis vectors are the canonical kernel basis of the incidence matrix,
    re-encoded as square-free forms of degree n in 2n-1 variables.
    """
    subsets = monomial_subsets(n)
    nv = 2 * n - 1
    basis = []
    for vec in incidence_matrix(n).kernel_basis():
        terms = {}
        for subset, coeff in zip(subsets, vec):
            if coeff:
                exps = [0] * nv
                for i in subset:
                    exps[i] = 1
                terms[tuple(exps)] = coeff
        basis.append(HomogeneousForm(nv, n, terms))
    constraints = tuple((p, n - 1) for p in standard_base(n))
    system = LinearSystem(2 * n - 2, n, tuple(basis), constraints)
    return ForgetfulSystem(n, subsets, system)


def forgetful_system_generic(n: int) -> LinearSystem:
    """The same system, cut out by raw derivative conditions at all 2n points.

    Dense and slow compared to the combinatorial route (practical for
    n <= 4); used to cross-check that both constructions span the same
    space of forms.
    """
    constraints = [(p, n - 1) for p in standard_base(n)]
    return linear_system_basis(2 * n - 2, n, constraints)


def base_automorphism(n: int, perm) -> Matrix:
    """The unique projectivity permuting the 2n base points by ``perm``.

    ``perm`` maps positions 0..2n-1 to positions; the matrix M satisfies
    M * base[i] ~ base[perm[i]].
    """
    perm = tuple(perm)
    if sorted(perm) != list(range(2 * n)):
        raise ValueError(f"not a permutation of 0..{2 * n - 1}")
    base = standard_base(n)
    return projectivity_from_frames(base, [base[perm[i]] for i in range(2 * n)])


def config_of_point(n: int, x: ProjectivePoint) -> tuple[ProjectivePoint, ...]:
    """The 2n parameters where the curve through base + {x} meets the base.

    With the curve through (coordinate points, unit point, x) normalized
    so the unit point sits at (1:0) and x at (0:1), the i-th coordinate
    point sits at parameter (1 : x_i).  The configuration is therefore
    ((1:x_1), ..., (1:x_{2n-1}), (1:0)); it depends on the representative
    of x only up to a Moebius transformation, which downstream bracket
    invariants do not see.
    """
    if x.dim != 2 * n - 2:
        raise DimensionMismatch(f"point of P^{x.dim}, expected P^{2 * n - 2}")
    coords = x.coords
    for i, v in enumerate(coords):
        if v == 0:
            raise DegenerateConfiguration(
                f"coordinate {i} of {x!r} vanishes: x lies on a coordinate hyperplane"
            )
    for i in range(len(coords)):
        for j in range(i + 1, len(coords)):
            if coords[i] == coords[j]:
                raise DegenerateConfiguration(
                    f"coordinates {i} and {j} of {x!r} coincide"
                )
    points = [ProjectivePoint((Fraction(1), v)) for v in coords]
    points.append(ProjectivePoint((1, 0)))
    return tuple(points)


def dimension_formulas(n: int) -> dict[str, int]:
    """The three agreeing counts for the system dimension."""
    return {
        "basis": forgetful_system(n).dimension,
        "subset_difference": comb(2 * n - 1, n) - comb(2 * n - 1, n - 2),
        "hook_count": system_dimension(n),
    }
