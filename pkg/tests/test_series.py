"""Tests for truncated x-series and the adaptive infinite sums."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrk.core.exact import QLaurent, QRat
from qrk.core.qkit import q_binomial, q_int
from qrk.core.series import (
    XSeries,
    first_difference,
    jackson_integral,
    jackson_sum_01,
    merge_exponents,
    product_expand,
    q_derivative,
    series_log,
    series_qlog,
    series_recip,
    shifted_recip,
    shifted_series,
    subst_qx,
    truncated_q_sum,
    truncated_sum,
)
from qrk.errors import PreconditionError, TruncationError, ValuationError, ZeroDenominatorError


# ─── Helpers ──────────────────────────────────────────────────────────────────

_q = QLaurent.monomial(1)


def _x(order: int) -> XSeries:
    return XSeries.monomial(1, order)


def _coeffs(series: XSeries) -> list[QRat]:
    return list(series.coeffs)


_q_coeffs = st.builds(
    QLaurent,
    st.lists(st.integers(min_value=-3, max_value=3), min_size=1, max_size=3),
)
_alphas = st.fractions(min_value=-4, max_value=4, max_denominator=7)


def _series(order: int) -> st.SearchStrategy[XSeries]:
    return st.lists(_q_coeffs, min_size=1, max_size=order + 1).map(
        lambda values: XSeries.from_coeffs(values, order)
    )


# ─── XSeries ──────────────────────────────────────────────────────────────────

class TestXSeries:
    def test_from_coeffs_pads_and_truncates(self):
        assert XSeries.from_coeffs([1, 2], 3).coeffs == tuple(QRat.of(c) for c in (1, 2, 0, 0))
        assert XSeries.from_coeffs([1, 2, 3], 1).order == 1

    def test_negative_order_rejected(self):
        with pytest.raises(PreconditionError):
            XSeries.zero(-1)

    def test_coefficient_beyond_order(self):
        with pytest.raises(TruncationError):
            XSeries.zero(3).coefficient(4)

    def test_mixed_orders_truncate_to_minimum(self):
        assert (XSeries.geometric(5) + XSeries.geometric(3)).order == 3

    def test_geometric_reciprocal(self):
        assert series_recip(XSeries.geometric(6)) == XSeries.from_coeffs([1, -1], 6)

    @given(_series(5).filter(lambda f: not f[0].is_zero()))
    @settings(max_examples=25)
    def test_reciprocal_is_an_involution(self, f):
        assert series_recip(series_recip(f)) == f

    def test_reciprocal_of_shifted_product_gives_binomials(self):
        recip = series_recip(shifted_series(1, -1, 3, 5))
        assert _coeffs(recip) == [q_binomial(2 + n, n) for n in range(6)]

    def test_reciprocal_needs_constant_term(self):
        with pytest.raises(ZeroDenominatorError):
            series_recip(_x(4))

    def test_shift_keeps_order(self):
        shifted = XSeries.geometric(4).shift(2)
        assert shifted.order == 4
        assert shifted.valuation() == 2

    def test_negative_power(self):
        assert XSeries.from_coeffs([1, -1], 5) ** -2 == XSeries.from_coeffs(range(1, 7), 5)

    def test_render(self):
        assert str(XSeries.geometric(3)) == "1 + x + x^2 + x^3 + O(x^4)"
        assert str(XSeries.from_coeffs([0, _q], 1)) == "(q)*x + O(x^2)"


# ─── Logarithms and q-calculus ────────────────────────────────────────────────

class TestSeriesCalculus:
    def test_classical_log(self):
        expected = XSeries.from_coeffs([0, *(Fraction(1, n) for n in range(1, 6))], 5)
        assert series_log(XSeries.geometric(5)) == expected

    def test_log_needs_unit_constant(self):
        with pytest.raises(PreconditionError):
            series_log(XSeries.constant(2, 3))

    def test_qlog_of_x(self):
        expected = XSeries.from_coeffs(
            [0, 1, QRat(-1, q_int(2)), QRat(1, q_int(3)), QRat(-1, q_int(4))], 4
        )
        assert series_qlog(_x(4)) == expected

    def test_qlog_reduces_to_log_at_q_one(self):
        classical = series_log(XSeries.from_coeffs([1, 1], 6))
        assert series_qlog(_x(6)).specialize(1) == classical

    def test_qlog_needs_zero_constant(self):
        with pytest.raises(PreconditionError):
            series_qlog(XSeries.geometric(3))

    def test_q_derivative_of_monomial(self):
        derivative = q_derivative(XSeries.monomial(3, 5))
        assert derivative.order == 4
        assert derivative == XSeries.monomial(2, 4, q_int(3))

    def test_q_derivative_needs_positive_order(self):
        with pytest.raises(PreconditionError):
            q_derivative(XSeries.constant(1, 0))

    @given(st.fractions(min_value=-3, max_value=3, max_denominator=10).filter(lambda v: v != 1))
    def test_q_derivative_matches_difference_quotient(self, q0):
        f = XSeries.from_coeffs([1, _q, 2, QRat(1, q_int(3))], 3)
        at_q0 = f.specialize(q0)
        expected = [
            at_q0[n + 1].constant_value() * (q0 ** (n + 1) - 1) / (q0 - 1) for n in range(3)
        ]
        assert q_derivative(f).specialize(q0) == XSeries.from_coeffs(expected, 2)

    @given(_series(10), _series(10))
    @settings(max_examples=15)
    def test_q_leibniz_rule(self, f, g):
        expected = subst_qx(f) * q_derivative(g) + q_derivative(f) * g
        assert q_derivative(f * g) == expected

    @given(_alphas, st.integers(min_value=1, max_value=6))
    @settings(max_examples=20)
    def test_derivative_of_shifted_reciprocal(self, alpha, k):
        f = XSeries.monomial(k, 8) * shifted_recip(alpha, k, 8)
        expected = XSeries.monomial(k - 1, 7, q_int(k)) * shifted_recip(alpha, k + 1, 7)
        assert q_derivative(f) == expected

    @given(_alphas, st.integers(min_value=1, max_value=5))
    @settings(max_examples=20)
    def test_derivative_of_doubled_shifted_reciprocal(self, alpha, k):
        f = XSeries.monomial(k, 8) * shifted_recip(alpha, 2 * k, 8)
        linear = XSeries.from_coeffs([1, QRat.of(alpha) * QRat.gen() ** k], 7)
        expected = XSeries.monomial(k - 1, 7, q_int(k)) * linear * shifted_recip(alpha, 2 * k + 1, 7)
        assert q_derivative(f) == expected

    def test_jackson_integral_inverts_derivative(self):
        f = XSeries.from_coeffs([7, 1, _q, 3], 3)
        assert jackson_integral(q_derivative(f)) == f - 7

    def test_subst_qx(self):
        assert subst_qx(XSeries.geometric(2)) == XSeries.from_coeffs([1, _q, _q**2], 2)
        assert subst_qx(XSeries.geometric(1), -1) == XSeries.from_coeffs([1, QLaurent.monomial(-1)], 1)


# ─── Products ─────────────────────────────────────────────────────────────────

class TestProducts:
    def test_euler_reciprocal_gives_partitions(self):
        expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert _coeffs(product_expand({1: -1}, 10)) == [QRat.of(c) for c in expected]

    def test_pentagonal_numbers(self):
        euler = {k: 1 for k in range(1, 13)}
        expected = [1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]
        assert _coeffs(product_expand(euler, 12)) == [QRat.of(c) for c in expected]

    def test_rejects_nonpositive_index(self):
        with pytest.raises(PreconditionError):
            product_expand({0: 1}, 4)

    def test_merge_cancels(self):
        assert merge_exponents({1: 1, 3: 2}, {1: -1, 2: 3}) == {2: 3, 3: 2}

    def test_shifted_series(self):
        expected = XSeries.from_coeffs([1, q_int(2), _q], 3)
        assert shifted_series(1, 1, 2, 3) == expected

    def test_shifted_recip_inverts_shifted_series(self):
        product = shifted_series(1, -_q**2, 3, 6)
        assert shifted_recip(_q**2, 3, 6) == series_recip(product)

    def test_shifted_recip_empty_product(self):
        assert shifted_recip(_q, 0, 3) == XSeries.constant(1, 3)


# ─── Adaptive sums ────────────────────────────────────────────────────────────

class TestTruncatedSums:
    def test_sum_of_monomials_is_geometric(self):
        total = truncated_sum(lambda k: XSeries.monomial(k, 6), lambda k: k, 6)
        assert total == XSeries.geometric(6)

    def test_bounds_must_increase(self):
        with pytest.raises(ValuationError):
            truncated_sum(lambda k: XSeries.constant(1, 4), lambda k: 0, 4)

    def test_term_below_declared_bound(self):
        with pytest.raises(ValuationError):
            truncated_sum(lambda k: XSeries.constant(1, 4), lambda k: k, 4)

    def test_cap_stops_runaway_sums(self):
        with pytest.raises(ValuationError):
            truncated_sum(lambda k: XSeries.monomial(k, 50), lambda k: k, 50, cap=5)

    def test_q_sum(self):
        total = truncated_q_sum(lambda k: QRat.of(_q**k), lambda k: k, 5)
        assert total == QLaurent([1] * 6)

    def test_first_difference(self):
        a = XSeries.from_coeffs([1, 2, 3, 4], 3)
        b = XSeries.from_coeffs([1, 2, 0, 4], 3)
        assert first_difference(a, b) == 2
        assert first_difference(a, a) is None
        assert first_difference(a, b, start=3) is None


# ─── Jackson sums on [0, 1] ───────────────────────────────────────────────────

class TestJacksonSum:
    def test_constant_integrand(self):
        assert jackson_sum_01([1], [1], 1, 6) == QLaurent.one("Q")

    def test_linear_integrand(self):
        expected = QLaurent([1, -1, 1, -1, 1, -1], var="Q")
        assert jackson_sum_01([0, 1], [1], 1, 5) == expected

    def test_rejects_denominator_without_unit_constant(self):
        with pytest.raises(PreconditionError):
            jackson_sum_01([1], [0, 1], 1, 4)
