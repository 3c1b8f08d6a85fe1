"""Rational normal curves given by exact parametrizations.

Through any d+3 points of P^d in general position there is exactly one
rational normal curve of degree d.  It is constructed here in closed form:
transport the first d+1 points to the coordinate simplex, write the last
two in those coordinates as p and q, and parametrize coordinatewise by

    f_i(s, t) = p_i * q_i * prod_{j != i} (s*q_j - t*p_j),

which hits the (d+2)-nd point at (1:0), the (d+3)-rd at (0:1) and the i-th
simplex point at (p_i : q_i).  Applying the transport matrix returns the
curve through the original points.
"""

from __future__ import annotations

from fractions import Fraction

from . import binary
from .errors import DegenerateConfiguration, DimensionMismatch, SingularMatrix
from .linalg import Matrix
from .projective import ProjectivePoint, projective_equal


class ParamCurve:
    """A degree-d curve in P^d as d+1 binary forms of degree d."""

    __slots__ = ("ambient_dim", "components", "transport")

    def __init__(self, ambient_dim: int, components, transport: Matrix | None = None):
        d = ambient_dim
        comps = tuple(tuple(Fraction(c) for c in comp) for comp in components)
        if len(comps) != d + 1 or any(len(c) != d + 1 for c in comps):
            raise DimensionMismatch(f"a curve in P^{d} needs {d + 1} forms of degree {d}")
        self.ambient_dim = d
        self.components = comps
        self.transport = transport
        if Matrix(comps).rank() != d + 1:
            raise DegenerateConfiguration("components are linearly dependent: curve is degenerate")
        g = comps[0]
        for c in comps[1:]:
            g = binary.bgcd(g, c)
            if binary.degree(g) == 0:
                break
        if binary.degree(g) > 0:
            raise DegenerateConfiguration(f"components share the factor {g}: base point")

    def eval(self, param: ProjectivePoint) -> ProjectivePoint:
        """Point of the curve at a parameter (s : t) of P^1."""
        if param.dim != 1:
            raise DimensionMismatch("parameters live on the projective line")
        s, t = param.coords
        return ProjectivePoint([binary.beval(c, s, t) for c in self.components])

    def parameter_of(self, x: ProjectivePoint) -> ProjectivePoint | None:
        """The unique parameter mapping to x, or None when x is off the curve.

        The proportionality conditions x_i * c_j(s,t) = x_j * c_i(s,t) are
        binary forms; their common factor is computed by gcd.  A common
        root is a parameter hitting x, and since the parametrization is
        injective the common factor is a power of a single linear form,
        necessarily rational.
        """
        if x.dim != self.ambient_dim:
            raise DimensionMismatch("point in the wrong ambient space")
        i = next(k for k, v in enumerate(x.coords) if v)
        xi = x.coords[i]
        ci = self.components[i]
        g = None
        for j, cj in enumerate(self.components):
            if j == i:
                continue
            minor = tuple(xi * a - x.coords[j] * b for a, b in zip(cj, ci))
            if binary.is_zero(minor):
                continue
            g = minor if g is None else binary.bgcd(g, minor)
            if binary.degree(g) == 0:
                return None
        if g is None:
            return None
        while binary.degree(g) > 1:
            ds, dt = binary.deriv_s(g), binary.deriv_t(g)
            h = None
            for der in (ds, dt):
                if not binary.is_zero(der):
                    h = der if h is None else binary.bgcd(h, der)
            if h is None:
                return None
            reduced = binary.bgcd(g, h)
            if binary.degree(reduced) >= binary.degree(g):
                return None
            g = reduced
        if binary.degree(g) != 1:
            return None
        root = ProjectivePoint(binary.linear_root(g))
        if projective_equal(self.eval(root), x):
            return root
        return None

    def to_dict(self) -> dict:
        out = {
            "ambient_dim": self.ambient_dim,
            "components": [[str(c) for c in comp] for comp in self.components],
        }
        if self.transport is not None:
            out["transport"] = [[str(x) for x in row] for row in
                                (self.transport.row(i) for i in range(self.transport.rows))]
        return out


def standard_rnc(d: int) -> ParamCurve:
    """The curve (s^d : s^(d-1) t : ... : t^d)."""
    comps = []
    for i in range(d + 1):
        c = [Fraction(0)] * (d + 1)
        c[i] = Fraction(1)
        comps.append(c)
    return ParamCurve(d, comps)


def rnc_through(points) -> ParamCurve:
    """The unique rational normal curve through d+3 general points of P^d.

    General position means every d+1 of the points are linearly
    independent; violations raise DegenerateConfiguration with a witness.
    Parameters are normalized so the (d+2)-nd point sits at (1:0) and the
    (d+3)-rd at (0:1).
    """
    points = list(points)
    d = points[0].dim
    if any(p.dim != d for p in points):
        raise DimensionMismatch("points of mixed dimensions")
    if len(points) != d + 3:
        raise DegenerateConfiguration(f"need {d + 3} points in P^{d}, got {len(points)}")
    a = Matrix.from_columns([p.coords for p in points[: d + 1]])
    try:
        ainv = a.inverse()
    except SingularMatrix:
        raise DegenerateConfiguration(
            f"points 0..{d} are linearly dependent"
        ) from None
    p = ainv.matvec(points[d + 1].coords)
    q = ainv.matvec(points[d + 2].coords)
    for name, vec, other in (("second-to-last", p, d + 1), ("last", q, d + 2)):
        for i, v in enumerate(vec):
            if v == 0:
                raise DegenerateConfiguration(
                    f"the {name} point is dependent on points "
                    f"{[j for j in range(d + 1) if j != i]}"
                )
    for i in range(d + 1):
        for j in range(i + 1, d + 1):
            if p[i] * q[j] == p[j] * q[i]:
                raise DegenerateConfiguration(
                    f"coinciding parameter ratios at coordinates {i} and {j}: "
                    f"the last two points are coplanar with points "
                    f"{[k for k in range(d + 1) if k not in (i, j)]}"
                )
    comps = []
    for i in range(d + 1):
        f = (p[i] * q[i],)
        for j in range(d + 1):
            if j != i:
                f = binary.bmul(f, (q[j], -p[j]))
        comps.append(f)
    # transport back: row k of the result is sum_i a[k][i] * f_i
    out = []
    for k in range(d + 1):
        acc = (Fraction(0),) * (d + 1)
        for i in range(d + 1):
            if a[k, i]:
                acc = binary.badd(acc, binary.bscale(comps[i], a[k, i]))
        out.append(acc)
    return ParamCurve(d, out, transport=a)
