"""Exact dense linear algebra over the rationals.

Rank and kernel computations clear each row to a primitive integer row and
then run fraction-free (Bareiss) elimination, so every intermediate entry
is a minor of the scaled input: no denominators appear mid-computation and
coefficient growth stays controlled.  Kernel bases come out of a
fraction-free Gauss-Jordan pass and are returned as primitive integer
vectors, which makes them stable across runs.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionMismatch, SingularMatrix


def _primitive_int_row(row):
    """Scale a row of Fractions to a primitive row of ints."""
    lcm = 1
    for x in row:
        d = x.denominator
        lcm = lcm // gcd(lcm, d) * d
    ints = [int(x * lcm) for x in row]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        ints = [v // g for v in ints]
    return ints


def _eliminate(rows, ncols, reduce_above):
    """Fraction-free elimination in place on integer rows.

    With ``reduce_above`` this is a full Gauss-Jordan pass: afterwards every
    pivot entry holds the same value (the running pivot minor) and pivot
    columns vanish off the pivot row.  Returns the list of pivot columns;
    pivot i lives in row i.
    """
    nrows = len(rows)
    prev = 1
    pivots = []
    r = 0
    for c in range(ncols):
        pr = -1
        for i in range(r, nrows):
            if rows[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        p = prow[c]
        lo = 0 if reduce_above else r + 1
        for i in range(lo, nrows):
            if i == r:
                continue
            row = rows[i]
            m = row[c]
            if m:
                rows[i] = [(p * x - m * y) // prev for x, y in zip(row, prow)]
            elif p != prev:
                rows[i] = [p * x // prev for x in row]
        prev = p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged rows")
        self._data = data
        self.rows = len(data)
        self.cols = width

    # -- construction -------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns) -> "Matrix":
        cols = [list(c) for c in columns]
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    @classmethod
    def from_rows(cls, rows) -> "Matrix":
        return cls(rows)

    # -- access -------------------------------------------------------

    def __getitem__(self, rc):
        r, c = rc
        return self._data[r][c]

    def row(self, i: int):
        return self._data[i]

    def column(self, j: int):
        return tuple(row[j] for row in self._data)

    def entries(self):
        """Row-major tuple of all entries."""
        return tuple(x for row in self._data for x in row)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    # -- arithmetic ---------------------------------------------------

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._data))

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.rows}x{self.cols} times {other.rows}x{other.cols}")
        cols = other.transpose()._data
        return Matrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self._data]
        )

    def matvec(self, vec):
        vec = tuple(vec)
        if len(vec) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vec)} against {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._data)

    def scaled(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix([[c * x for x in row] for row in self._data])

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise DimensionMismatch("stacking matrices of different widths")
        return Matrix(self._data + other._data)

    # -- elimination --------------------------------------------------

    def rank(self) -> int:
        """Exact rank over the rationals."""
        rows = [_primitive_int_row(row) for row in self._data]
        return len(_eliminate(rows, self.cols, reduce_above=False))

    def kernel_basis(self):
        """Basis of the right null space, as primitive integer vectors.

        One vector per free column, in ascending column order; each vector
        is positive at its own free coordinate.  Size is cols - rank.
        """
        rows = [_primitive_int_row(row) for row in self._data]
        pivots = _eliminate(rows, self.cols, reduce_above=True)
        d = rows[len(pivots) - 1][pivots[-1]] if pivots else 1
        pivot_set = set(pivots)
        basis = []
        for f in range(self.cols):
            if f in pivot_set:
                continue
            vec = [0] * self.cols
            vec[f] = d
            for i, c in enumerate(pivots):
                vec[c] = -rows[i][f]
            g = 0
            for v in vec:
                g = gcd(g, v)
            if vec[f] < 0:
                g = -g
            basis.append(tuple(Fraction(v // g) for v in vec))
        return basis

    def inverse(self) -> "Matrix":
        """Inverse by rational Gauss-Jordan; raises SingularMatrix."""
        if self.rows != self.cols:
            raise SingularMatrix("only square matrices can be inverted")
        n = self.rows
        work = [list(row) + [Fraction(int(i == j)) for j in range(n)]
                for i, row in enumerate(self._data)]
        for c in range(n):
            pr = next((i for i in range(c, n) if work[i][c]), None)
            if pr is None:
                raise SingularMatrix(f"no pivot in column {c}")
            if pr != c:
                work[c], work[pr] = work[pr], work[c]
            piv = work[c][c]
            work[c] = [x / piv for x in work[c]]
            for i in range(n):
                if i != c and work[i][c]:
                    m = work[i][c]
                    work[i] = [x - m * y for x, y in zip(work[i], work[c])]
        return Matrix([row[n:] for row in work])

    def solve(self, rhs):
        """Unique solution of self * x = rhs for invertible self."""
        return self.inverse().matvec(rhs)

    def is_scalar_multiple_of(self, other: "Matrix") -> bool:
        """True iff other == c * self for a scalar c (both zero counts)."""
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("comparing matrices of different shapes")
        a = self.entries()
        b = other.entries()
        i = next((k for k, x in enumerate(a) if x), None)
        if i is None:
            return not any(b)
        if not b[i]:
            return False
        return all(a[k] * b[i] == b[k] * a[i] for k in range(len(a)))
