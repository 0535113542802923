"""Hyperreal arithmetic, order, principal values and standard parts."""

from fractions import Fraction as F

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from omegasum import (
    OMEGA,
    Hyperreal,
    HyperTerm,
    Polynomial,
    eval_poly_at_shifted_omega,
)

from _catalog import H
from _strategies import fractions, hyper_terms, hyperreals


class TestArithmetic:
    def test_spaced_ones_add_to_omega(self):
        left = H((F(1, 2), 1, 1), (F(1, 4), 0, 1))
        right = H((F(1, 2), 1, 1), (F(-1, 4), 0, 1))
        assert left + right == OMEGA

    def test_additive_identity(self):
        x = H((3, 2, 1), (-1, 0, 2))
        assert x + Hyperreal() == x

    def test_shifted_naturals_sum(self):
        # values of 1+2+3+... and 2+3+4+..., added at the value level
        a = H((F(1, 2), 2, 1), (F(1, 2), 1, 1))
        b = H((F(1, 2), 2, 1), (F(3, 2), 1, 1))
        assert a + b == H((1, 2, 1), (2, 1, 1))

    def test_omega_squared(self):
        assert OMEGA * OMEGA == H((1, 2, 1))

    def test_multiplicative_identity(self):
        x = H((F(5, 3), -1, 1), (1, 0, 3))
        assert x * Hyperreal.from_rational(1) == x

    def test_exponential_bases_multiply(self):
        powers_of_two = H((1, 0, 2), (-1, 0, 1))  # 2^w - 1
        half_pow = H((1, 0, F(1, 2)))
        assert powers_of_two * half_pow == H((1, 0, 1), (-1, 0, F(1, 2)))

    def test_scalar_mixing(self):
        assert OMEGA + 1 == H((1, 1, 1), (1, 0, 1))
        assert 2 * OMEGA == H((2, 1, 1))
        assert OMEGA / 2 == H((F(1, 2), 1, 1))
        assert (OMEGA - OMEGA).is_zero()

    def test_power(self):
        assert OMEGA**3 == H((1, 3, 1))
        assert (OMEGA + 1) ** 2 == H((1, 2, 1), (2, 1, 1), (1, 0, 1))
        assert Hyperreal.term(2, 1) ** -2 == H((F(1, 4), -2, 1))

    def test_zero_coefficient_term_collapses(self):
        assert Hyperreal.term(0, 5, 2).is_zero()
        with pytest.raises(ValueError):
            HyperTerm(0, 1, 1)
        with pytest.raises(ValueError):
            HyperTerm(1, 1, -2)


class TestOrder:
    def test_omega_plus_one_is_greater(self):
        assert OMEGA + 1 > OMEGA

    def test_reflexive_equality(self):
        x = H((1, 1, 1), (2, 0, 3))
        assert x.compare(x) == 0

    def test_exponential_dominates_polynomial(self):
        assert OMEGA < Hyperreal.term(1, 0, 2)
        # finite-scale confirmation at n = 64
        assert F(64) < F(2) ** 64

    def test_infinitesimal_positive(self):
        assert Hyperreal.term(1, -1) > 0
        assert Hyperreal.term(1, -1) < F(1, 10**9)


class TestPrincipalAndHalo:
    def test_naturals_principal(self):
        assert H((F(1, 2), 2, 1), (F(1, 2), 1, 1)).principal_value() == H((F(1, 2), 2, 1))

    def test_zero_principal(self):
        assert Hyperreal().principal_value() == Hyperreal()

    def test_shared_principal_family(self):
        omega_sq = H((1, 2, 1))
        assert H((1, 2, 1), (5, 1, 1)).principal_value() == omega_sq
        assert H((1, 2, 1), (-12, 1, 1)).principal_value() == omega_sq
        assert H((1, 2, 1), (23, 0, 1)).principal_value() == omega_sq

    def test_same_halo_for_shifted_series_values(self):
        a = H((F(1, 2), 2, 1), (F(1, 2), 1, 1))
        b = H((F(1, 2), 2, 1), (F(3, 2), 1, 1)) + 1
        assert a != b
        assert a.same_halo(b)

    def test_same_halo_reflexive(self):
        x = H((2, 3, 1))
        assert x.same_halo(x)

    def test_spaced_ones_same_halo(self):
        assert H((F(1, 2), 1, 1), (F(1, 4), 0, 1)).same_halo(
            H((F(1, 2), 1, 1), (F(-1, 4), 0, 1))
        )


class TestStandardPart:
    def test_convergent_geometric(self):
        assert H((2, 0, 1), (-2, 0, F(1, 2))).standard_part() == 2

    def test_zero(self):
        assert Hyperreal().standard_part() == 0

    def test_infinite_value_has_none(self):
        assert H((F(1, 2), 2, 1), (F(1, 2), 1, 1)).standard_part() is None
        assert H((1, 0, 2)).standard_part() is None
        assert H((1, 0, 2), (5, -3, 1)).standard_part() is None

    def test_pure_infinitesimal(self):
        assert H((1, -1, 1)).standard_part() == 0
        assert H((1, 0, F(1, 2))).standard_part() == 0
        assert H((3, 0, 1), (1, -2, 1)).standard_part() == 3


class TestRatioPrincipal:
    def test_arithmetic_series_ratio(self):
        d1, d2 = F(3), F(5)
        a = H((d1 / 2, 2, 1), (7, 1, 1))
        b = H((d2 / 2, 2, 1), (-2, 1, 1), (1, 0, 1))
        assert a.ratio_principal(b) == Hyperreal.from_rational(d1 / d2)

    def test_self_ratio_is_one(self):
        x = H((F(2, 3), 5, 2))
        assert x.ratio_principal(x) == Hyperreal.from_rational(1)

    def test_growth_ratio_monomial(self):
        powers_of_two = H((1, 0, 2), (-1, 0, 1))
        assert powers_of_two.ratio_principal(OMEGA) == H((1, -1, 2))
        # the quotient really grows: 2^n/n at n = 64 dwarfs its value at n = 8
        assert F(2**64, 64) > F(2**8, 8)

    def test_zero_numerator(self):
        assert Hyperreal().ratio_principal(OMEGA) == Hyperreal()

    def test_zero_divisor_raises(self):
        with pytest.raises(ZeroDivisionError):
            OMEGA.ratio_principal(Hyperreal())


class TestPolyAtShiftedOmega:
    def test_one_more_term(self):
        assert eval_poly_at_shifted_omega(Polynomial([0, 1]), 1) == OMEGA + 1

    def test_identity_shift(self):
        assert eval_poly_at_shifted_omega(Polynomial([0, 1]), 0) == OMEGA

    def test_triangular_shift_down(self):
        p = Polynomial([0, F(1, 2), F(1, 2)])  # n^2/2 + n/2
        assert eval_poly_at_shifted_omega(p, -1) == H((F(1, 2), 2, 1), (F(-1, 2), 1, 1))


class TestProperties:
    @given(st.lists(hyper_terms(), max_size=5))
    def test_canonicalization_idempotent(self, terms):
        x = Hyperreal(terms)
        assert Hyperreal(x.terms) == x
        keys = [t.key for t in x.terms]
        assert keys == sorted(keys, reverse=True)
        assert all(t.coeff != 0 for t in x.terms)

    @settings(max_examples=1000, deadline=None)
    @given(hyperreals(), hyperreals(), hyperreals())
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + Hyperreal() == a
        assert a * Hyperreal.from_rational(1) == a

    @given(hyperreals(), hyperreals(), hyperreals())
    def test_total_order_consistent_with_addition(self, a, b, c):
        assert (a < b) + (a == b) + (a > b) == 1
        if a < b:
            assert a + c < b + c

    @given(hyperreals(), hyperreals(), hyperreals())
    def test_order_respects_positive_multiplication(self, a, b, w):
        if a < b and w > 0:
            assert a * w < b * w

    @given(hyperreals())
    def test_principal_value_idempotent(self, x):
        assert x.principal_value().principal_value() == x.principal_value()

    @given(hyperreals(), hyperreals(), hyperreals())
    def test_same_halo_equivalence(self, a, b, c):
        assert a.same_halo(a)
        if a.same_halo(b):
            assert b.same_halo(a)
        if a.same_halo(b) and b.same_halo(c):
            assert a.same_halo(c)

    @settings(deadline=None)
    @given(hyper_terms(), hyper_terms())
    def test_dominance_matches_finite_growth(self, t1, t2):
        """The symbolic order agrees with c*n^p*b^n comparisons from some N <= 1000."""
        a, b = HyperTerm(*t1), HyperTerm(*t2)
        if a == b:
            return
        expected = Hyperreal((a,)).compare(Hyperreal((b,)))
        last_flip = 0
        for n in range(1, 401):
            diff = a.value_at(n) - b.value_at(n)
            sign = (diff > 0) - (diff < 0)
            if sign != expected:
                last_flip = n
        assert last_flip < 400, f"sign still wrong at n={last_flip}"
