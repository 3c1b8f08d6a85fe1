from fractions import Fraction

import pytest

from conftest import minor_rank
from mfkit import binary
from mfkit.errors import DimensionMismatch, IndexOutOfRange, InvalidMultiplicity
from mfkit.forms import (
    HomogeneousForm,
    linear_system_basis,
    monomials,
    multiplicity_conditions,
)
from mfkit.linalg import Matrix
from mfkit.projective import ProjectivePoint, standard_frame, unit_point
from mfkit.sampling import RationalSampler


def form(num_vars, text_terms):
    """Tiny helper: build from {exponent tuple: coeff}."""
    degree = sum(next(iter(text_terms)))
    return HomogeneousForm(num_vars, degree, text_terms)


x0x1 = {(1, 1, 0): 1}
x0sq_x1 = {(2, 1, 0): 1}


class TestCalculus:
    def test_power_rule(self):
        f = form(3, x0sq_x1)
        assert f.differentiate(0) == form(3, {(1, 1, 0): 2})

    def test_missing_variable(self):
        f = form(3, x0x1)
        assert f.differentiate(2).is_zero()

    def test_difference(self):
        f = form(3, {(1, 1, 0): 1, (1, 0, 1): -1})  # x0x1 - x0x2
        assert f.differentiate(1) == form(3, {(1, 0, 0): 1})

    def test_index_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            form(3, x0x1).differentiate(3)


class TestEvaluate:
    f = form(3, {(1, 1, 0): 1, (1, 0, 1): -1})  # x0x1 - x0x2

    def test_unit_point(self):
        assert self.f.evaluate(ProjectivePoint([1, 1, 1])) == 0

    def test_generic_point(self):
        assert self.f.evaluate(ProjectivePoint([1, 2, 3])) == -1

    def test_coordinate_line(self):
        g = form(3, {(1, 1, 1): 1})
        assert g.evaluate(ProjectivePoint([1, 1, 0])) == 0

    def test_representative_scaling(self):
        value = self.f.evaluate([1, 2, 3])
        scaled = self.f.evaluate([5, 10, 15])
        assert scaled == value * 5 ** self.f.degree

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            self.f.evaluate([1, 2])


class TestMultiplicityConditions:
    def test_simple_vanishing_at_coordinate_point(self):
        m = multiplicity_conditions(2, 2, ProjectivePoint([1, 0, 0]), 1)
        assert (m.rows, m.cols) == (1, 6)
        # only the x0^2 coefficient is constrained
        expected = [1 if mono == (2, 0, 0) else 0 for mono in monomials(3, 2)]
        assert list(m.row(0)) == expected

    def test_double_point_at_coordinate_point(self):
        m = multiplicity_conditions(2, 3, ProjectivePoint([1, 0, 0]), 2)
        kernel = m.kernel_basis()
        killed = {(3, 0, 0), (2, 1, 0), (2, 0, 1)}
        surviving = [mono for mono in monomials(3, 3) if mono not in killed]
        # kernel = span of the monomials with x0-exponent at most 1
        assert len(kernel) == len(surviving)
        for vec in kernel:
            for mono, coeff in zip(monomials(3, 3), vec):
                if mono in killed:
                    assert coeff == 0

    def test_unit_point_row_of_ones(self):
        m = multiplicity_conditions(2, 2, ProjectivePoint([1, 1, 1]), 1)
        assert (m.rows, m.cols) == (1, 6)
        assert all(v == 1 for v in m.row(0))

    def test_invalid_multiplicity(self):
        p = ProjectivePoint([1, 0, 0])
        with pytest.raises(InvalidMultiplicity):
            multiplicity_conditions(2, 2, p, 0)
        with pytest.raises(InvalidMultiplicity):
            multiplicity_conditions(2, 2, p, 3)


class TestLinearSystemBasis:
    def test_pencil_of_conics(self):
        points = standard_frame(2)  # four points of P^2 in general position
        system = linear_system_basis(2, 2, [(p, 1) for p in points])
        assert system.dimension == 2
        # oracle: the 4x6 evaluation matrix has rank 4
        rows = [[_mono_value(mono, p) for mono in monomials(3, 2)] for p in points]
        assert minor_rank(Matrix(rows)) == 4
        for f in system.basis:
            for p in points:
                assert f.evaluate(p) == 0

    def test_all_linear_forms_on_line(self):
        system = linear_system_basis(1, 1, [])
        assert system.dimension == 2

    def test_quadrics_through_five_points_of_p3(self):
        points = standard_frame(3)  # five general points of P^3
        system = linear_system_basis(3, 2, [(p, 1) for p in points])
        assert system.dimension == 5

    def test_basis_is_independent(self):
        points = standard_frame(2)
        system = linear_system_basis(2, 2, [(p, 1) for p in points])
        assert system.coefficient_matrix().rank() == system.dimension


def _mono_value(mono, point):
    v = Fraction(1)
    for c, e in zip(point.coords, mono):
        v *= Fraction(c) ** e
    return v


def _random_kernel_form(sampler, ambient, degree, constraints):
    """A random form satisfying the constraints, via the exact kernel."""
    stacked = None
    for point, mult in constraints:
        block = multiplicity_conditions(ambient, degree, point, mult)
        stacked = block if stacked is None else stacked.vstack(block)
    kernel = stacked.kernel_basis()
    assert kernel, "constraints admit no nonzero form"
    nv = ambient + 1
    combo = [Fraction(0)] * len(kernel[0])
    for vec in kernel:
        c = sampler.rational()
        combo = [a + c * b for a, b in zip(combo, vec)]
    if not any(combo):
        combo = list(kernel[0])
    return HomogeneousForm.from_coefficients(nv, degree, combo)


class TestVanishingOrderFacts:
    """The classical facts about high-multiplicity vanishing, checked exactly."""

    def test_order_cascade(self):
        # if every order-(y-1) partial vanishes at p, so does every
        # order-(y-2) partial: homogeneity makes the conditions nested
        sampler = RationalSampler(seed=3)
        p = ProjectivePoint([1, 2, 3])
        for _ in range(10):
            f = _random_kernel_form(sampler, 2, 4, [(p, 3)])
            lower = multiplicity_conditions(2, 4, p, 2)
            assert all(v == 0 for v in lower.matvec(f.coefficient_vector()))

    def test_restriction_to_line_vanishes_identically(self):
        # multiplicities y_p + y_q > r force vanishing on the whole line
        sampler = RationalSampler(seed=4)
        p = ProjectivePoint([1, 0, 0])
        q = ProjectivePoint([0, 1, 1])
        for _ in range(5):
            f = _random_kernel_form(sampler, 2, 3, [(p, 2), (q, 2)])
            assert binary.is_zero(f.restrict_to_line(p, q))

    def test_restriction_to_line_root_orders(self):
        # multiplicities y_p + y_q <= r leave roots of order >= the
        # multiplicities themselves at the two parameters
        sampler = RationalSampler(seed=5)
        p = ProjectivePoint([1, 0, 0])
        q = ProjectivePoint([0, 1, 1])
        saw_nonzero = False
        for _ in range(10):
            f = _random_kernel_form(sampler, 2, 4, [(p, 2), (q, 2)])
            restricted = f.restrict_to_line(p, q)
            if binary.is_zero(restricted):
                continue
            saw_nonzero = True
            assert binary.root_multiplicity(restricted, 1, 0) >= 2
            assert binary.root_multiplicity(restricted, 0, 1) >= 2
        assert saw_nonzero

    def test_near_maximal_multiplicity_spreads_to_lines(self):
        # forms with multiplicity r-1 at general points vanish to order
        # r-2 along the lines joining two of the points
        base = standard_frame(4)  # six general points of P^4
        system = linear_system_basis(4, 3, [(p, 2) for p in base])
        assert system.dimension == 5
        sampler = RationalSampler(seed=6)
        pairs = [(0, 5), (1, 2), (4, 5), (2, 5)]
        for i, j in pairs:
            p, q = base[i], base[j]
            for _ in range(5):
                a = sampler.rational(nonzero=True)
                b = sampler.rational(nonzero=True)
                z = ProjectivePoint([a * x + b * y for x, y in zip(p.coords, q.coords)])
                conditions = multiplicity_conditions(4, 3, z, 3 - 2)
                for f in system.basis:
                    assert all(
                        v == 0 for v in conditions.matvec(f.coefficient_vector())
                    )


class TestSerialization:
    def test_round_trip(self):
        f = form(3, {(1, 1, 0): Fraction(2, 3), (1, 0, 1): -1})
        assert HomogeneousForm.from_dict(f.to_dict()) == f

    def test_terms_in_canonical_order(self):
        f = form(3, {(0, 1, 1): 1, (2, 0, 0): 1})
        listed = [tuple(t["exponents"]) for t in f.to_dict()["terms"]]
        assert listed == [(2, 0, 0), (0, 1, 1)]
