"""The alternating integral engine: triangular solves, the distribution
identity, kernel normalization, and p-adic truncation diagnostics."""
import math
import random
from fractions import Fraction as F

import pytest

from eulertwist import (
    PLUS_INFINITY,
    char_twist_integral,
    cyclotomic_field,
    distribution_identity_check,
    eulerian_recurrence,
    padic_truncation,
    poly_twist_integral,
    principal_character,
    quadratic_character,
)
from eulertwist.errors import NotPadicallyConvergent, SingularFunctionalEquation
from eulertwist.fermionic import (
    IntegralSpec,
    alternating_kernel_ratio_check,
    series_limit_check,
)


class TestPolyTwistIntegral:
    def test_zeroth_moment_is_one(self):
        for ratio in (F(1, 2), F(3), F(2, 7)):
            spec = IntegralSpec(n=0, shift=F(5, 3), twist=1, ratio=ratio)
            assert poly_twist_integral(spec) == 1

    def test_first_moment(self):
        q = F(2)
        spec = IntegralSpec(n=1, shift=0, twist=1, ratio=1 / q)
        assert poly_twist_integral(spec) == F(-1, 3)  # -1/(1+q)

    def test_second_moment(self):
        q = F(2)
        spec = IntegralSpec(n=2, shift=0, twist=1, ratio=1 / q)
        assert poly_twist_integral(spec) == (1 - q) / (1 + q) ** 2

    def test_singular_pivot(self):
        with pytest.raises(SingularFunctionalEquation):
            poly_twist_integral(IntegralSpec(n=1, shift=0, twist=F(-1), ratio=F(1)))

    @pytest.mark.parametrize("q", [F(2), F(3), F(5, 2)])
    @pytest.mark.parametrize("n", range(9))
    def test_witt_identity_with_classical_polynomials(self, n, q):
        lhs = poly_twist_integral(IntegralSpec(n=n, shift=0, twist=1, ratio=1 / q))
        rhs = F(-1) ** n * eulerian_recurrence(n).evaluate(-q) / (1 + q) ** n
        assert lhs == rhs

    def test_functional_equation_residual(self):
        rng = random.Random(3)
        field = cyclotomic_field(3)
        for _ in range(20):
            n = rng.randint(0, 5)
            shift = F(rng.randint(-4, 4), rng.randint(1, 5))
            ratio = F(rng.randint(1, 6), rng.randint(1, 6))
            twist = field.zeta_power(rng.randint(0, 2))
            moments = [
                poly_twist_integral(IntegralSpec(n=k, shift=shift, twist=twist, ratio=ratio))
                for k in range(n + 1)
            ]
            plugged = ratio * twist * sum(
                math.comb(n, k) * moments[k] for k in range(n + 1)
            ) + moments[n]
            assert plugged == (1 + ratio) * shift**n

    def test_linearity_via_shifted_binomials(self):
        field = cyclotomic_field(3)
        twist = field.zeta()
        ratio = F(2, 3)
        shift = F(3, 4)
        for n in range(6):
            direct = poly_twist_integral(IntegralSpec(n=n, shift=shift, twist=twist, ratio=ratio))
            expanded = sum(
                math.comb(n, k)
                * shift ** (n - k)
                * poly_twist_integral(IntegralSpec(n=k, shift=0, twist=twist, ratio=ratio))
                for k in range(n + 1)
            )
            assert direct == expanded


class TestCharTwistIntegral:
    def test_quadratic_anchor(self):
        assert char_twist_integral(0, quadratic_character(3), 1, F(2)) == -1

    def test_trivial_character(self):
        for q in (F(2), F(3), F(7, 2)):
            assert char_twist_integral(0, principal_character(1), 1, q) == 1

    def test_reduces_to_poly_integral_at_modulus_one(self):
        q = F(2)
        lhs = char_twist_integral(1, principal_character(1), 1, q)
        assert lhs == F(-1, 3)
        assert lhs == poly_twist_integral(IntegralSpec(n=1, shift=0, twist=1, ratio=1 / q))

    def test_singular_pivot(self):
        field = cyclotomic_field(1)
        with pytest.raises(SingularFunctionalEquation):
            char_twist_integral(0, principal_character(1), field.from_rational(F(-2)), F(2))


class TestDistributionIdentity:
    def test_anchor(self):
        report = distribution_identity_check(0, quadratic_character(3), 1, F(2))
        assert report.lhs == -1
        assert report.equal

    def test_modulus_one_is_structural(self):
        for n in range(4):
            report = distribution_identity_check(n, principal_character(1), 1, F(3))
            assert report.equal

    def test_cyclotomic_point(self):
        zeta = cyclotomic_field(3).zeta()
        for n in range(5):
            report = distribution_identity_check(n, quadratic_character(5), zeta, F(3))
            assert report.equal


def test_kernel_ratio_is_q_squared():
    rng = random.Random(17)
    for d in (1, 3, 5):
        for q in (F(2), F(3), F(5, 2)):
            for _ in range(5):
                values = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(d)]
                assert alternating_kernel_ratio_check(d, values, q).equal


class TestPadicTruncation:
    def test_constant_integrand_is_exact_at_every_level(self):
        report = padic_truncation(0, F(4), 3, 4)
        for level in report.levels:
            assert level.partial == 1
            assert level.valuation == PLUS_INFINITY

    def test_first_moment_anchor(self):
        report = padic_truncation(1, F(4), 3, 3)
        assert report.exact == F(-1, 5)
        level1 = report.levels[1]
        assert level1.partial == F(-2, 13)
        assert level1.partial - report.exact == F(3, 65)
        assert level1.valuation == 1

    def test_level_zero_is_the_first_summand(self):
        report = padic_truncation(0, F(4), 3, 0)
        assert report.levels[0].partial == 1

    @pytest.mark.parametrize("p", [3, 5])
    @pytest.mark.parametrize("n", range(3))
    def test_valuation_growth(self, p, n):
        q = F(1 + p)
        for char in (None, quadratic_character(p)):
            report = padic_truncation(n, q, p, 3, char=char)
            vals = [lv.valuation for lv in report.levels]
            assert all(v >= lv.level for lv, v in zip(report.levels, vals))
            assert all(vals[i] <= vals[i + 1] for i in range(len(vals) - 1))

    def test_regime_guards(self):
        with pytest.raises(NotPadicallyConvergent):
            padic_truncation(1, F(2), 3, 2)  # v_3(q-1) = 0
        with pytest.raises(NotPadicallyConvergent):
            padic_truncation(1, F(4), 3, 2, char=quadratic_character(5))  # 5 not a power of 3
        with pytest.raises(ValueError):
            padic_truncation(1, F(4), 4, 2)  # p must be prime


class TestSeriesLimit:
    def test_quadratic_anchor(self):
        report = series_limit_check(0, quadratic_character(3), F(4), 3, 4)
        assert report.series_value == F(-4, 13)
        assert report.ratio == 16
        for level in report.levels:
            assert level.valuation >= level.level

    @pytest.mark.parametrize("n", range(4))
    def test_ratio_constant_in_n(self, n):
        report = series_limit_check(n, quadratic_character(3), F(4), 3, 2)
        assert report.ratio == F(4) ** 2

    def test_modulus_one_limit_includes_index_zero_term(self):
        report = series_limit_check(0, principal_character(1), F(4), 3, 3)
        assert report.limit == 2 * (report.series_value + 1)
        for level in report.levels:
            assert level.valuation >= level.level

    def test_scaled_limit_is_q_squared_times_true_series(self):
        q = F(6)
        report = series_limit_check(2, quadratic_character(5), q, 5, 2)
        assert report.scaled_limit == q**2 * 2 * report.series_value
