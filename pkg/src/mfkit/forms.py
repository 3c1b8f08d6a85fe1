"""Homogeneous multivariate forms and point-multiplicity linear systems.

A form of degree r vanishes at a point p with multiplicity y when all of
its order-(y-1) partial derivatives vanish at p.  Linear systems are cut
out by stacking these derivative conditions and taking the exact kernel.

The canonical monomial order everywhere is graded lexicographic with
x0 > x1 > ...; it fixes the column order of every condition matrix and the
coordinate order of every associated map.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import binary
from .errors import (
    BaseLocusPoint,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidMultiplicity,
)
from .linalg import Matrix
from .projective import ProjectivePoint


@lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of the given total degree, graded-lex descending."""
    if num_vars <= 0:
        raise ValueError("need at least one variable")
    if num_vars == 1:
        return ((degree,),)
    out = []
    for e0 in range(degree, -1, -1):
        for rest in monomials(num_vars - 1, degree - e0):
            out.append((e0,) + rest)
    return tuple(out)


def _falling(a: int, k: int) -> int:
    v = 1
    for i in range(k):
        v *= a - i
    return v


class HomogeneousForm:
    """Sparse homogeneous polynomial over the rationals."""

    __slots__ = ("num_vars", "degree", "terms")

    def __init__(self, num_vars: int, degree: int, terms=None):
        self.num_vars = num_vars
        self.degree = degree
        clean = {}
        for exps, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != num_vars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent tuple {exps}")
            if sum(exps) != degree:
                raise ValueError(f"monomial {exps} has degree {sum(exps)}, not {degree}")
            clean[exps] = clean.get(exps, Fraction(0)) + coeff
        self.terms = {e: c for e, c in clean.items() if c}

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls, num_vars: int, degree: int) -> "HomogeneousForm":
        return cls(num_vars, degree, {})

    @classmethod
    def monomial(cls, num_vars: int, exps, coeff=1) -> "HomogeneousForm":
        exps = tuple(exps)
        return cls(num_vars, sum(exps), {exps: Fraction(coeff)})

    @classmethod
    def linear(cls, coeffs) -> "HomogeneousForm":
        coeffs = list(coeffs)
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = Fraction(c)
        return cls(n, 1, terms)

    @classmethod
    def from_coefficients(cls, num_vars: int, degree: int, vec) -> "HomogeneousForm":
        """Form with the given dense coefficient vector in canonical order."""
        mons = monomials(num_vars, degree)
        vec = list(vec)
        if len(vec) != len(mons):
            raise DimensionMismatch(f"expected {len(mons)} coefficients, got {len(vec)}")
        return cls(num_vars, degree, dict(zip(mons, vec)))

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_vector(self) -> tuple[Fraction, ...]:
        """Dense coefficients in the canonical monomial order."""
        return tuple(self.terms.get(m, Fraction(0)) for m in monomials(self.num_vars, self.degree))

    def __eq__(self, other):
        if not isinstance(other, HomogeneousForm):
            return NotImplemented
        return (self.num_vars, self.degree, self.terms) == (
            other.num_vars,
            other.degree,
            other.terms,
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(exps) if e
            )
            if not mono:
                bits.append(str(c))
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        return " + ".join(bits).replace("+ -", "- ")

    # -- arithmetic ---------------------------------------------------

    def _require_same_shape(self, other):
        if self.num_vars != other.num_vars or self.degree != other.degree:
            raise DimensionMismatch("forms of different shapes")

    def __add__(self, other):
        self._require_same_shape(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return HomogeneousForm(self.num_vars, self.degree, terms)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c) -> "HomogeneousForm":
        c = Fraction(c)
        return HomogeneousForm(
            self.num_vars, self.degree, {e: c * v for e, v in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scaled(other)
        if self.num_vars != other.num_vars:
            raise DimensionMismatch("multiplying forms in different variable counts")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return HomogeneousForm(self.num_vars, self.degree + other.degree, terms)

    __rmul__ = __mul__

    # -- calculus and evaluation ---------------------------------------

    def differentiate(self, var_index: int) -> "HomogeneousForm":
        """Formal partial derivative; the zero form of degree-1 lower if empty."""
        if not 0 <= var_index < self.num_vars:
            raise IndexOutOfRange(f"variable {var_index} of {self.num_vars}")
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[var_index]
            if e:
                de = list(exps)
                de[var_index] = e - 1
                de = tuple(de)
                terms[de] = terms.get(de, Fraction(0)) + coeff * e
        return HomogeneousForm(self.num_vars, max(self.degree - 1, 0), terms)

    def evaluate(self, point) -> Fraction:
        """Value at a chosen representative.

        Scaling the representative by c scales the value by c^degree, so
        only projective comparisons of values of equal-degree forms are
        meaningful downstream.
        """
        coords = point.coords if isinstance(point, ProjectivePoint) else tuple(point)
        if len(coords) != self.num_vars:
            raise DimensionMismatch(
                f"point with {len(coords)} coordinates in {self.num_vars} variables"
            )
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(coords, exps):
                if e:
                    if not x:
                        v = Fraction(0)
                        break
                    v *= Fraction(x) ** e
            total += v
        return total

    def restrict_to_line(self, p, q):
        """Substitute x = s*p + t*q; a binary form of the same degree."""
        pc = p.coords if isinstance(p, ProjectivePoint) else tuple(p)
        qc = q.coords if isinstance(q, ProjectivePoint) else tuple(q)
        if len(pc) != self.num_vars or len(qc) != self.num_vars:
            raise DimensionMismatch("line endpoints in the wrong space")
        out = (Fraction(0),) * (self.degree + 1)
        for exps, coeff in self.terms.items():
            term = (Fraction(1),)
            for x, y, e in zip(pc, qc, exps):
                for _ in range(e):
                    term = binary.bmul(term, (Fraction(x), Fraction(y)))
            out = binary.badd(out, binary.bscale(term, coeff))
        return out

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        mons = [m for m in monomials(self.num_vars, self.degree) if m in self.terms]
        return {
            "degree": self.degree,
            "num_vars": self.num_vars,
            "terms": [
                {"exponents": list(m), "coeff": str(self.terms[m])} for m in mons
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HomogeneousForm":
        terms = {
            tuple(t["exponents"]): Fraction(t["coeff"]) for t in data["terms"]
        }
        return cls(data["num_vars"], data["degree"], terms)


def multiplicity_conditions(
    ambient_dim: int, degree: int, point: ProjectivePoint, mult: int
) -> Matrix:
    """Condition matrix for vanishing at ``point`` with the given multiplicity.

    One row per derivative operator of order mult-1 (graded-lex over the
    operator exponents), one column per degree-``degree`` monomial in the
    canonical order.  A coefficient vector lies in the kernel iff all those
    partials of the corresponding form vanish at the point.
    """
    if mult < 1 or mult > degree:
        raise InvalidMultiplicity(f"multiplicity {mult} for degree {degree}")
    nv = ambient_dim + 1
    if point.dim != ambient_dim:
        raise DimensionMismatch(f"point of P^{point.dim} in P^{ambient_dim}")
    coords = point.coords
    cols = monomials(nv, degree)
    rows = []
    for beta in monomials(nv, mult - 1):
        row = []
        for alpha in cols:
            if any(b > a for a, b in zip(alpha, beta)):
                row.append(Fraction(0))
                continue
            v = Fraction(1)
            for a, b, x in zip(alpha, beta, coords):
                v *= _falling(a, b)
                if not v:
                    break
                e = a - b
                if e:
                    if not x:
                        v = Fraction(0)
                        break
                    v *= Fraction(x) ** e
            row.append(v)
        rows.append(row)
    return Matrix(rows)


@dataclass(frozen=True)
class LinearSystem:
    """A linear system of forms: exact kernel basis plus its constraints."""

    ambient_dim: int
    degree: int
    basis: tuple[HomogeneousForm, ...]
    constraints: tuple[tuple[ProjectivePoint, int], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def coefficient_matrix(self) -> Matrix:
        """Basis coefficient vectors as rows, canonical monomial columns."""
        return Matrix([f.coefficient_vector() for f in self.basis])

    def map_point(self, x: ProjectivePoint) -> ProjectivePoint:
        """Evaluate the ordered basis at x, as a point of the target space.

        Independent of the representative of x since all basis members
        share one degree.  Raises BaseLocusPoint when every member vanishes.
        """
        values = tuple(f.evaluate(x) for f in self.basis)
        if not any(values):
            raise BaseLocusPoint(f"{x!r} lies in the base locus")
        return ProjectivePoint(values)

    def vanishes_at(self, x: ProjectivePoint) -> bool:
        return all(f.evaluate(x) == 0 for f in self.basis)


def linear_system_basis(ambient_dim: int, degree: int, constraints) -> LinearSystem:
    """All degree-``degree`` forms on P^ambient_dim meeting the constraints.

    ``constraints`` is a sequence of (point, multiplicity) pairs; an empty
    sequence yields the complete system of all forms of that degree.
    """
    constraints = tuple((p, int(m)) for p, m in constraints)
    nv = ambient_dim + 1
    mons = monomials(nv, degree)
    if not constraints:
        basis = tuple(
            HomogeneousForm.monomial(nv, m) for m in mons
        )
        return LinearSystem(ambient_dim, degree, basis, ())
    stacked = None
    for point, mult in constraints:
        block = multiplicity_conditions(ambient_dim, degree, point, mult)
        stacked = block if stacked is None else stacked.vstack(block)
    basis = tuple(
        HomogeneousForm.from_coefficients(nv, degree, vec)
        for vec in stacked.kernel_basis()
    )
    return LinearSystem(ambient_dim, degree, basis, constraints)
