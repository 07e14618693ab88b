"""Rationals, q-brackets, valuations, and cyclotomic field arithmetic."""
import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulertwist import (
    PLUS_INFINITY,
    Poly,
    cyclotomic_field,
    cyclotomic_polynomial,
    embed_complex,
    galois_conjugate,
    lift_to_field,
    padic_valuation,
    q_bracket,
    q_bracket_neg,
)
from eulertwist.cyclotomic import cyclotomic_from_json
from eulertwist.errors import (
    DivisionByZero,
    FieldMismatch,
    NotAPrimitiveEmbedding,
    PoleAtMinusOne,
)
from eulertwist.ntheory import euler_phi
from eulertwist.rationals import format_rational, parse_rational


def random_element(field, rng):
    coeffs = tuple(
        F(rng.randint(-20, 20), rng.randint(1, 10)) for _ in range(field.degree)
    )
    return field.reduce(list(coeffs))


class TestCyclotomicPolynomial:
    def test_small_orders(self):
        assert cyclotomic_polynomial(1) == Poly.from_ints(-1, 1)
        assert cyclotomic_polynomial(3) == Poly.from_ints(1, 1, 1)
        assert cyclotomic_polynomial(9) == Poly.from_ints(1, 0, 0, 1, 0, 0, 1)

    @pytest.mark.parametrize("n", range(1, 31))
    def test_divides_x_n_minus_1(self, n):
        x_n_minus_1 = Poly.of(*([-1] + [0] * (n - 1) + [1]))
        quotient, remainder = divmod(x_n_minus_1, cyclotomic_polynomial(n))
        assert remainder.is_zero()
        assert cyclotomic_polynomial(n).degree == euler_phi(n)


class TestFieldArithmetic:
    def test_product_reduces(self):
        z = cyclotomic_field(3).zeta()
        assert (1 + z) * (-z) == 1

    def test_inverse_of_one(self):
        for n in (1, 3, 5, 9):
            assert cyclotomic_field(n).one.inverse() == 1

    def test_zeta_has_order_n(self):
        z = cyclotomic_field(3).zeta()
        assert z * z * z == 1

    @pytest.mark.parametrize("n", [1, 3, 5, 9])
    def test_field_axioms_random(self, n):
        field = cyclotomic_field(n)
        rng = random.Random(1000 + n)
        for _ in range(200):
            a = random_element(field, rng)
            b = random_element(field, rng)
            c = random_element(field, rng)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            if not a.is_zero():
                assert a * a.inverse() == 1

    def test_inverse_of_zero_raises(self):
        with pytest.raises(DivisionByZero):
            cyclotomic_field(3).zero.inverse()

    def test_field_mismatch_raises(self):
        with pytest.raises(FieldMismatch):
            cyclotomic_field(3).zeta() + cyclotomic_field(5).zeta()

    def test_lift_to_larger_field(self):
        z3 = cyclotomic_field(3).zeta()
        f9 = cyclotomic_field(9)
        assert lift_to_field(z3, f9) == f9.zeta_power(3)
        a = 1 + 2 * z3
        b = lift_to_field(a, f9)
        assert lift_to_field(a * a, f9) == b * b


class TestComplexEmbedding:
    def test_order_one(self):
        assert embed_complex(cyclotomic_field(1).zeta(), 1) == 1 + 0j

    def test_primitive_cube_root(self):
        value = embed_complex(cyclotomic_field(3).zeta(), 1)
        assert abs(value - complex(-0.5, math.sqrt(3) / 2)) < 1e-15

    def test_vanishing_root_sum(self):
        z = cyclotomic_field(3).zeta()
        assert abs(embed_complex(1 + z + z * z, 1)) < 1e-15

    def test_non_coprime_index_rejected(self):
        with pytest.raises(NotAPrimitiveEmbedding):
            embed_complex(cyclotomic_field(9).zeta(), 3)

    def test_ring_homomorphism(self):
        rng = random.Random(7)
        field = cyclotomic_field(9)
        for _ in range(50):
            a = field.reduce([F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(6)])
            b = field.reduce([F(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(6)])
            lhs = embed_complex(a * b, 1)
            rhs = embed_complex(a, 1) * embed_complex(b, 1)
            assert abs(lhs - rhs) < 1e-12

    def test_galois_conjugate_tracks_embedding(self):
        field = cyclotomic_field(9)
        a = 2 + field.zeta_power(2) - 3 * field.zeta_power(5)
        assert abs(embed_complex(galois_conjugate(a, 2), 1) - embed_complex(a, 2)) < 1e-12


class TestQBrackets:
    def test_two_bracket_is_one_plus_q(self):
        assert q_bracket(2, F(3)) == 4

    def test_alternating_bracket(self):
        assert q_bracket_neg(3, F(1)) == 1

    def test_limit_at_one(self):
        assert q_bracket(5, F(1)) == 5

    def test_pole(self):
        with pytest.raises(PoleAtMinusOne):
            q_bracket_neg(2, F(-1))

    @given(
        st.integers(min_value=0, max_value=40),
        st.fractions(min_value=-8, max_value=8, max_denominator=20),
    )
    def test_defining_identity(self, x, q):
        if q == 1:
            return
        assert q_bracket(x, q) * (1 - q) + q**x == 1


class TestPadicValuation:
    def test_examples(self):
        assert padic_valuation(F(1, 5), 5) == -1
        assert padic_valuation(F(0), 5) == PLUS_INFINITY
        assert padic_valuation(F(50, 3), 5) == 2

    @given(
        st.fractions(max_denominator=1000),
        st.fractions(max_denominator=1000),
        st.sampled_from([3, 5, 7]),
    )
    def test_multiplicative(self, a, b, p):
        if a == 0 or b == 0:
            return
        assert padic_valuation(a * b, p) == padic_valuation(a, p) + padic_valuation(b, p)

    def test_non_prime_rejected(self):
        with pytest.raises(ValueError):
            padic_valuation(F(1), 6)


class TestSerialization:
    def test_rational_wire_format(self):
        assert format_rational(F(-4)) == "-4/1"
        assert parse_rational("-4/1") == F(-4)
        assert parse_rational("5/2") == F(5, 2)
        assert parse_rational("7") == F(7)

    def test_cyclotomic_round_trip(self):
        field = cyclotomic_field(5)
        a = field.reduce([F(1, 2), F(-3), F(0), F(7, 3)])
        doc = a.to_json()
        assert doc["order"] == 5
        assert len(doc["coeffs"]) == euler_phi(5)
        assert cyclotomic_from_json(doc) == a
