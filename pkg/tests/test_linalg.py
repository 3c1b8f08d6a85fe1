from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import gauss_rank, minor_rank
from mfkit.errors import DegenerateFrame, DimensionMismatch, SingularMatrix
from mfkit.linalg import Matrix
from mfkit.projective import (
    ProjectivePoint,
    projective_equal,
    projectivity_from_frames,
    standard_frame,
)

rationals = st.builds(
    Fraction,
    st.integers(min_value=-9, max_value=9),
    st.integers(min_value=1, max_value=9),
)


def small_matrices(max_dim=5):
    return st.integers(2, max_dim).flatmap(
        lambda r: st.integers(2, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(rationals, min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    ).map(Matrix)


class TestRank:
    def test_identity(self):
        assert Matrix.identity(2).rank() == 2

    def test_zero_matrix(self):
        assert Matrix([[0] * 4 for _ in range(3)]).rank() == 0

    def test_proportional_rows(self):
        assert Matrix([[1, 2], [2, 4]]).rank() == 1

    @given(small_matrices())
    @settings(max_examples=60, deadline=None)
    def test_matches_minor_oracle(self, m):
        assert m.rank() == minor_rank(m)

    @given(small_matrices())
    @settings(max_examples=60, deadline=None)
    def test_matches_gauss_oracle(self, m):
        assert m.rank() == gauss_rank(m)


class TestKernel:
    def test_single_relation(self):
        basis = Matrix([[1, 1]]).kernel_basis()
        assert len(basis) == 1
        assert basis[0] in ((1, -1), (-1, 1)) or basis[0][0] * -1 == basis[0][1]

    def test_injective(self):
        assert Matrix.identity(3).kernel_basis() == []

    def test_three_variable_relation(self):
        m = Matrix([[1, 1, 1]])
        basis = m.kernel_basis()
        assert len(basis) == 2
        for vec in basis:
            assert all(v == 0 for v in m.matvec(vec))
        # spans the same plane as {(1,-1,0), (0,1,-1)}
        reference = Matrix([[1, -1, 0], [0, 1, -1]])
        assert Matrix(basis).vstack(reference).rank() == 2

    @given(small_matrices())
    @settings(max_examples=60, deadline=None)
    def test_rank_nullity_and_exactness(self, m):
        basis = m.kernel_basis()
        assert m.rank() + len(basis) == m.cols
        for vec in basis:
            assert all(v == 0 for v in m.matvec(vec))

    @given(small_matrices())
    @settings(max_examples=30, deadline=None)
    def test_kernel_vectors_independent(self, m):
        basis = m.kernel_basis()
        if basis:
            assert Matrix(basis).rank() == len(basis)


class TestInverse:
    def test_round_trip(self):
        m = Matrix([[2, 1, 0], [1, 3, 1], [0, 1, 1]])
        assert m * m.inverse() == Matrix.identity(3)

    def test_singular(self):
        with pytest.raises(SingularMatrix):
            Matrix([[1, 2], [2, 4]]).inverse()

    def test_solve(self):
        m = Matrix([[2, 0], [0, 4]])
        assert m.solve([2, 8]) == (Fraction(1), Fraction(2))


class TestProjectiveEqual:
    def test_scalar_multiple(self):
        assert projective_equal(ProjectivePoint([1, 2, 3]), ProjectivePoint([2, 4, 6]))

    def test_distinct_coordinate_points(self):
        assert not projective_equal(ProjectivePoint([1, 0, 0]), ProjectivePoint([0, 1, 0]))

    def test_negative_scalar(self):
        assert projective_equal(ProjectivePoint([0, -1, 3]), ProjectivePoint([0, 2, -6]))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            projective_equal(ProjectivePoint([1, 0]), ProjectivePoint([1, 0, 0]))

    @given(st.lists(rationals, min_size=3, max_size=3),
           st.integers(min_value=1, max_value=7))
    @settings(max_examples=40, deadline=None)
    def test_equivalence(self, coords, scale):
        if not any(coords):
            return
        p = ProjectivePoint(coords)
        q = ProjectivePoint([Fraction(scale) * c for c in coords])
        r = ProjectivePoint([Fraction(-1, scale) * c for c in coords])
        assert projective_equal(p, p)
        assert projective_equal(p, q) and projective_equal(q, p)
        assert projective_equal(q, r) and projective_equal(p, r)

    def test_hash_through_canonical(self):
        assert hash(ProjectivePoint([2, 4, 6])) == hash(ProjectivePoint([1, 2, 3]))
        assert ProjectivePoint([Fraction(1, 2), 1]) == ProjectivePoint([1, 2])


class TestFrames:
    def test_identity_frame(self):
        f = standard_frame(2)
        m = projectivity_from_frames(f, f)
        assert m.is_scalar_multiple_of(Matrix.identity(3))

    def test_swap_last_coordinate_with_unit(self):
        # solved by hand from the four proportionality constraints
        f = standard_frame(2)
        target = [f[0], f[1], f[3], f[2]]
        m = projectivity_from_frames(f, target)
        assert m.is_scalar_multiple_of(Matrix([[-1, 0, 1], [0, -1, 1], [0, 0, 1]]))

    def test_swap_two_coordinate_points(self):
        f = standard_frame(2)
        target = [f[1], f[0], f[2], f[3]]
        m = projectivity_from_frames(f, target)
        assert m.is_scalar_multiple_of(Matrix([[0, 1, 0], [1, 0, 0], [0, 0, 1]]))

    def test_maps_frame_points(self):
        source = [ProjectivePoint(c) for c in [(1, 2, 0), (0, 1, 1), (1, 0, 3), (2, 2, 1)]]
        a = Matrix([[1, 2, 3], [0, 1, 4], [5, 6, 0]])
        assert a.rank() == 3
        target = [ProjectivePoint(a.matvec(p.coords)) for p in standard_frame(2)]
        m = projectivity_from_frames(source, target)
        for s, t in zip(source, target):
            assert projective_equal(ProjectivePoint(m.matvec(s.coords)), t)

    def test_round_trip_is_scalar(self):
        source = standard_frame(3)
        a = Matrix([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [2, 0, 0, 1]])
        assert a.rank() == 4
        target = [ProjectivePoint(a.matvec(p.coords)) for p in source]
        fwd = projectivity_from_frames(source, target)
        back = projectivity_from_frames(target, source)
        assert (fwd * back).is_scalar_multiple_of(Matrix.identity(4))
        assert fwd.is_scalar_multiple_of(a)

    def test_degenerate_frame(self):
        bad = [ProjectivePoint(c) for c in [(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, 1, 1)]]
        with pytest.raises(DegenerateFrame):
            projectivity_from_frames(bad, standard_frame(2))
        # last point in the span of two others
        bad2 = [ProjectivePoint(c) for c in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0)]]
        with pytest.raises(DegenerateFrame):
            projectivity_from_frames(standard_frame(2), bad2)
