"""Tests for q-integers, q-binomials, Pochhammer symbols and quantum powers."""

from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrk.core.exact import QLaurent, QRat
from qrk.core.qkit import (
    gauss_sum,
    poch,
    q_binomial,
    q_binomial_poly,
    q_factorial,
    q_int,
    quantum_pow,
    quantum_pow_inf,
    shifted_pow,
    triangular,
)
from qrk.errors import PreconditionError, ZeroDenominatorError


# ─── Helpers ──────────────────────────────────────────────────────────────────

def _poly(*coeffs: int, low: int = 0) -> QLaurent:
    return QLaurent(list(coeffs), low)


_q = QLaurent.monomial(1)


# ─── q-integers ───────────────────────────────────────────────────────────────

class TestQInt:
    def test_small_values(self):
        assert q_int(0) == 0
        assert q_int(1) == 1
        assert q_int(3) == _poly(1, 1, 1)

    def test_negative_argument(self):
        assert q_int(-2) == QLaurent([-1, -1], low=-2)

    def test_base_power(self):
        assert q_int(3, 2) == _poly(1, 0, 1, 0, 1)
        assert q_int(2, -1) == QLaurent([1, 1], low=-1)

    def test_zero_base_power_rejected(self):
        with pytest.raises(PreconditionError):
            q_int(3, 0)

    @given(st.integers(min_value=-20, max_value=20))
    def test_classical_limit(self, n):
        assert q_int(n).eval_at(1) == n

    def test_factorial(self):
        assert q_factorial(0) == 1
        assert q_factorial(3) == _poly(1, 2, 2, 1)
        assert q_factorial(3, 2) == _poly(1, 0, 2, 0, 2, 0, 1)
        with pytest.raises(PreconditionError):
            q_factorial(-1)

    def test_triangular(self):
        assert [triangular(n) for n in range(5)] == [0, 1, 3, 6, 10]


# ─── q-binomials ──────────────────────────────────────────────────────────────

class TestQBinomial:
    def test_four_choose_two(self):
        assert q_binomial(4, 2) == _poly(1, 1, 2, 1, 1)

    def test_out_of_range_is_zero(self):
        assert q_binomial(3, 5).is_zero()
        assert q_binomial(3, -1).is_zero()

    def test_negative_upper_index(self):
        assert q_binomial(-1, 3) == QLaurent.monomial(-6, -1)

    def test_poly_rejects_out_of_range(self):
        with pytest.raises(PreconditionError):
            q_binomial_poly(2, 3)

    @given(st.integers(min_value=1, max_value=14), st.data())
    def test_pascal_rule(self, n, data):
        k = data.draw(st.integers(min_value=1, max_value=n))
        expected = q_binomial(n - 1, k - 1) + q_binomial(n - 1, k) * _q**k
        assert q_binomial(n, k) == expected

    @given(st.integers(min_value=0, max_value=14), st.data())
    def test_symmetry_and_limit(self, n, data):
        k = data.draw(st.integers(min_value=0, max_value=n))
        assert q_binomial(n, k) == q_binomial(n, n - k)
        assert q_binomial(n, k).eval_at(1) == comb(n, k)

    def test_gauss_alternating_sums(self):
        assert gauss_sum(3).is_zero()
        assert gauss_sum(4) == _poly(1, -1) * _poly(1, 0, 0, -1)


# ─── Pochhammer and shifted powers ────────────────────────────────────────────

class TestPochhammer:
    def test_positive_length(self):
        expected = _poly(1, -1) * _poly(1, 0, -1) * _poly(1, 0, 0, -1)
        assert poch(_q, _q, 3) == expected

    def test_empty_product(self):
        assert poch(5, _q, 0) == 1

    def test_negative_length(self):
        assert poch(_q**2, _q, -1) == QRat(1, _poly(1, -1))

    def test_negative_length_with_vanishing_factor(self):
        with pytest.raises(ZeroDenominatorError):
            poch(_q, _q, -1)

    def test_shifted_power(self):
        assert shifted_pow(1, 1, 2) == _poly(2, 2)
        assert shifted_pow(_q, 3, 0) == 1

    def test_shifted_power_rejects_negative_exponent(self):
        with pytest.raises(PreconditionError):
            shifted_pow(1, 1, -1)


# ─── Quantum powers ───────────────────────────────────────────────────────────

class TestQuantumPow:
    def test_two_squared(self):
        assert quantum_pow(2, 2) == _poly(1, 1) * _poly(1, 0, 1)

    def test_base_one(self):
        assert quantum_pow(1, 7) == 1

    @given(st.integers(min_value=0, max_value=5), st.integers(min_value=0, max_value=5))
    def test_classical_limit(self, a, n):
        assert quantum_pow(a, n).eval_at(1) == a**n

    def test_factorial_ratio_form(self):
        for a in range(1, 11):
            for n in range(1, 11):
                expected = QRat(q_int(a) ** n * q_factorial(n, a), q_factorial(n))
                assert QRat.of(quantum_pow(a, n)) == expected, (a, n)

    def test_pochhammer_ratio_form(self):
        q = QRat.gen()
        for a in range(1, 11):
            q_a = q**a
            for n in range(21):
                assert QRat.of(quantum_pow(a, n)) * poch(q, q, n) == poch(q_a, q_a, n), (a, n)

    def test_infinite_product_counts_distinct_parts(self):
        assert quantum_pow_inf(2, 5) == _poly(1, 1, 1, 2, 2, 3)

    def test_negative_arguments_rejected(self):
        with pytest.raises(PreconditionError):
            quantum_pow(-1, 2)
        with pytest.raises(PreconditionError):
            quantum_pow_inf(2, -1)
        with pytest.raises(PreconditionError):
            quantum_pow_inf(0, 4)
