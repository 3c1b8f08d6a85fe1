"""Binary forms in a homogeneous parameter (s : t).

A binary form of degree d is a tuple of d+1 Fractions, index i holding the
coefficient of s^(d-i) t^i.  These are the building blocks of parametrized
rational normal curves and of restrictions of forms to lines.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def degree(f) -> int:
    return len(f) - 1


def is_zero(f) -> bool:
    return not any(f)


def bmul(f, g):
    """Product of two binary forms."""
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] += a * b
    return tuple(out)


def badd(f, g):
    if len(f) != len(g):
        raise ValueError("adding binary forms of different degrees")
    return tuple(a + b for a, b in zip(f, g))


def bscale(f, c):
    c = Fraction(c)
    return tuple(c * a for a in f)


def beval(f, s, t) -> Fraction:
    s, t = Fraction(s), Fraction(t)
    d = degree(f)
    total = Fraction(0)
    sp = [Fraction(1)]
    tp = [Fraction(1)]
    for _ in range(d):
        sp.append(sp[-1] * s)
        tp.append(tp[-1] * t)
    for i, a in enumerate(f):
        if a:
            total += a * sp[d - i] * tp[i]
    return total


def deriv_s(f):
    """Formal partial derivative with respect to s (degree drops by one)."""
    d = degree(f)
    if d == 0:
        return (Fraction(0),)
    return tuple(f[i] * (d - i) for i in range(d))


def deriv_t(f):
    d = degree(f)
    if d == 0:
        return (Fraction(0),)
    return tuple(f[i + 1] * (i + 1) for i in range(d))


def divide_linear(f, s0, t0):
    """Exact quotient of f by the linear form t0*s - s0*t, or None.

    The factor vanishes exactly at the parameter (s0 : t0).
    """
    s0, t0 = Fraction(s0), Fraction(t0)
    if s0 == 0 and t0 == 0:
        raise ValueError("(0, 0) is not a parameter")
    d = degree(f)
    if d == 0:
        return None
    if t0:
        q = []
        prev = Fraction(0)
        for i in range(d):
            prev = (f[i] + s0 * prev) / t0
            q.append(prev)
        if f[d] + s0 * prev != 0:
            return None
        return tuple(q)
    # factor is -s0 * t: divisible iff the s^d coefficient vanishes
    if f[0] != 0:
        return None
    return tuple(a / (-s0) for a in f[1:])


def root_multiplicity(f, s0, t0) -> int:
    """Vanishing order of f at the parameter (s0 : t0)."""
    if is_zero(f):
        raise ValueError("the zero form vanishes everywhere")
    count = 0
    while True:
        q = divide_linear(f, s0, t0)
        if q is None:
            return count
        count += 1
        f = q
        if degree(f) < 0 or len(f) == 0:
            return count


def primitive(f):
    """Integer-primitive representative with positive leading coefficient."""
    lcm = 1
    for x in f:
        d = Fraction(x).denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(Fraction(x) * lcm) for x in f]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g == 0:
        return tuple(Fraction(0) for _ in f)
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    return tuple(Fraction(v // g) for v in ints)


def _val_t(f) -> int:
    return next(i for i, a in enumerate(f) if a)


def _val_s(f) -> int:
    d = degree(f)
    return d - max(i for i, a in enumerate(f) if a)


def _poly_gcd(u, v):
    """Gcd of univariate rational polynomials (ascending coefficients)."""

    def trim(p):
        while p and p[-1] == 0:
            p = p[:-1]
        return p

    u, v = trim(list(u)), trim(list(v))
    while v:
        # remainder of u by v
        r = list(u)
        dv = len(v) - 1
        lead = v[-1]
        while len(r) - 1 >= dv and any(r):
            k = len(r) - 1 - dv
            c = r[-1] / lead
            for i in range(dv + 1):
                r[k + i] -= c * v[i]
            r = trim(r)
            if not r:
                break
        u, v = v, r
    if not u:
        return [Fraction(0)]
    lead = u[-1]
    return [c / lead for c in u]


def bgcd(f, g):
    """Gcd of two nonzero binary forms, as a primitive binary form."""
    if is_zero(f) or is_zero(g):
        raise ValueError("bgcd needs nonzero forms")
    vt = min(_val_t(f), _val_t(g))
    vs = min(_val_s(f), _val_s(g))

    def core(h):
        a, b = _val_t(h), degree(h) - _val_s(h)
        return [h[i] for i in range(a, b + 1)]  # ascending in t/s

    u = _poly_gcd(core(f), core(g))
    # rehomogenize: u has degree len(u)-1 in x = t/s, then restore s^vs t^vt
    deg_u = len(u) - 1
    coeffs = [Fraction(0)] * (vt + deg_u + vs + 1)
    for j, c in enumerate(u):
        coeffs[vt + j] = c
    return primitive(coeffs)


def linear_root(f):
    """The parameter annihilating a degree-1 binary form a*s + b*t."""
    if degree(f) != 1:
        raise ValueError("not a linear binary form")
    a, b = f
    return (b, -a)
