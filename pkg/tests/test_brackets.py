import itertools
from fractions import Fraction

import pytest

from mfkit.brackets import (
    Stability,
    apply_mobius,
    bracket,
    catalan,
    classify_stability,
    fit_linear_map,
    git_point,
    noncrossing_matchings,
)
from mfkit.linalg import Matrix
from mfkit.projective import ProjectivePoint, projective_equal
from mfkit.sampling import RationalSampler


def config(*pairs):
    return tuple(ProjectivePoint(p) for p in pairs)


def all_matchings(points):
    """Exhaustive perfect-matching oracle."""
    points = list(points)
    if not points:
        yield ()
        return
    first = points[0]
    for k in range(1, len(points)):
        partner = points[k]
        rest = points[1:k] + points[k + 1:]
        for sub in all_matchings(rest):
            yield ((first, partner),) + sub


def crosses(matching):
    for (a, b), (c, d) in itertools.combinations(matching, 2):
        if a < c < b < d or c < a < d < b:
            return True
    return False


class TestMatchings:
    def test_base_case(self):
        assert noncrossing_matchings(1) == (((0, 1),),)

    def test_two_pairs(self):
        assert noncrossing_matchings(2) == (((0, 1), (2, 3)), ((0, 3), (1, 2)))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_exhaustive_filter(self, n):
        ours = set(frozenset(m) for m in noncrossing_matchings(n))
        brute = set(
            frozenset(m)
            for m in all_matchings(range(2 * n))
            if not crosses(tuple(sorted(m)))
        )
        assert ours == brute

    @pytest.mark.parametrize("n", range(1, 9))
    def test_catalan_count(self, n):
        assert len(noncrossing_matchings(n)) == catalan(n)


class TestGitPoint:
    def test_worked_example(self):
        c = config((1, 1), (1, 2), (1, 3), (1, 0))
        image = git_point(2, c)
        # (12)(34) = 1 * -3, (14)(23) = -1 * 1, projectively [3 : 1]
        assert projective_equal(image, ProjectivePoint([3, 1]))

    def test_four_coincident_points_vanish(self):
        c = config((1, 1), (1, 1), (1, 1), (1, 1), (1, 2), (1, 3))
        assert git_point(3, c) is None

    def test_mobius_invariance(self):
        sampler = RationalSampler(seed=21)
        c = config((1, 1), (1, 2), (1, 3), (1, 0), (2, 1), (1, 5))
        for _ in range(5):
            while True:
                g = Matrix([[sampler.rational() for _ in range(2)] for _ in range(2)])
                if g.rank() == 2:
                    break
            moved = apply_mobius(g, c)
            assert projective_equal(git_point(3, c), git_point(3, moved))

    def test_representative_scaling_is_invisible(self):
        c1 = config((1, 1), (1, 2), (1, 3), (1, 0))
        c2 = config((2, 2), (1, 2), (-3, -6), (5, 0))
        assert projective_equal(git_point(2, c1), git_point(2, c2))

    def test_permutation_covariance(self):
        # one sign-permutation matrix works for every configuration
        sampler = RationalSampler(seed=22)
        sigma = (2, 0, 3, 1)

        def sample_config():
            return config(*[(1, sampler.rational()) for _ in range(4)])

        pairs = []
        while len(pairs) < 6:
            c = sample_config()
            moved = tuple(c[sigma[i]] for i in range(4))
            a, b = git_point(2, c), git_point(2, moved)
            if a is not None and b is not None:
                pairs.append((a, b))
        p = fit_linear_map(pairs)
        assert p is not None
        for _ in range(5):
            c = sample_config()
            moved = tuple(c[sigma[i]] for i in range(4))
            a, b = git_point(2, c), git_point(2, moved)
            if a is None:
                continue
            assert projective_equal(ProjectivePoint(p.matvec(a.coords)), b)


class TestStability:
    def test_distinct_points_are_stable(self):
        c = config((1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 0))
        assert classify_stability(3, c) is Stability.STABLE

    def test_balanced_collision_is_strictly_semistable(self):
        c = config((1, 1), (1, 1), (1, 1), (1, 2), (1, 2), (1, 2))
        assert classify_stability(3, c) is Stability.STRICTLY_SEMISTABLE
        assert git_point(3, c) is not None

    def test_heavy_collision_is_unstable_and_vanishes(self):
        c = config((1, 1), (1, 1), (1, 1), (1, 1), (1, 2), (1, 3))
        assert classify_stability(3, c) is Stability.UNSTABLE
        assert git_point(3, c) is None

    def test_collision_detected_projectively(self):
        c = config((1, 1), (2, 2), (-1, -1), (3, 3), (1, 2), (1, 3))
        assert classify_stability(3, c) is Stability.UNSTABLE

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_zero_vector_iff_unstable_on_profiles(self, n):
        def partitions(total, largest=None):
            largest = largest or total
            if total == 0:
                yield ()
                return
            for head in range(min(total, largest), 0, -1):
                for rest in partitions(total - head, head):
                    yield (head,) + rest

        for part in partitions(2 * n):
            c = []
            for idx, size in enumerate(part):
                c.extend([ProjectivePoint((1, idx + 1))] * size)
            c = tuple(c)
            zero = git_point(n, c) is None
            assert zero == (max(part) > n), part
            if max(part) == n and len(part) >= 2:
                assert classify_stability(n, c) is Stability.STRICTLY_SEMISTABLE


class TestFitLinearMap:
    def test_recovers_known_matrix(self):
        sampler = RationalSampler(seed=23)
        m = Matrix([[1, 2, 0], [0, 1, 1], [3, 0, 1]])
        assert m.rank() == 3
        pairs = []
        for _ in range(9):
            x = sampler.point(2)
            pairs.append((x, ProjectivePoint(m.matvec(x.coords))))
        fitted = fit_linear_map(pairs)
        assert fitted is not None
        assert fitted.is_scalar_multiple_of(m)

    def test_identity(self):
        pts = [ProjectivePoint(c) for c in [(1, 0), (0, 1), (1, 1), (1, 2), (2, 5)]]
        fitted = fit_linear_map([(p, p) for p in pts])
        assert fitted is not None
        assert fitted.is_scalar_multiple_of(Matrix.identity(2))

    def test_underdetermined_returns_none(self):
        p = ProjectivePoint([1, 2])
        assert fit_linear_map([(p, p)]) is None

    def test_inconsistent_returns_none(self):
        pts = [ProjectivePoint(c) for c in [(1, 0), (0, 1), (1, 1), (1, 2)]]
        pairs = [(p, p) for p in pts]
        pairs.append((ProjectivePoint((1, 3)), ProjectivePoint((1, 4))))
        assert fit_linear_map(pairs) is None


class TestBracket:
    def test_antisymmetry(self):
        p, q = ProjectivePoint((1, 2)), ProjectivePoint((3, 4))
        assert bracket(p, q) == -bracket(q, p)
        assert bracket(p, p) == 0
