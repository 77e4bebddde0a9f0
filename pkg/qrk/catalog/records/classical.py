"""Classical (q = 1) harmonic-number identities and their generating functions."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from qrk.catalog.record import ORDER, RANGE, IdentityRecord, Params, upto
from qrk.catalog.records._common import harmonic, odd_harmonic, series_of, x_term
from qrk.core.series import XSeries, product_expand, series_log
from qrk.schemas.verdict import VerificationMode


def binomial_odd_sum(n: int) -> Fraction:
    """sum_k C(N,k) (-2)^{k-1} / k."""
    return sum((Fraction(comb(n, k) * (-2) ** (k - 1), k) for k in range(1, n + 1)), Fraction(0))


def _log_ratio(order: int) -> XSeries:
    """log((1 + x) / (1 - x))."""
    one_plus_x = XSeries.from_coeffs([1, 1], order)
    return series_log(one_plus_x * XSeries.geometric(order))


def _eq7_rhs(params: Params) -> XSeries:
    order = params["T"]
    return (_log_ratio(order) * XSeries.geometric(order)).scale(Fraction(1, 2))


def _odd_powers(order: int) -> XSeries:
    """sum_s x^{2s+1} / (2s+1)."""
    return series_of(lambda n: Fraction(1, n) if n % 2 else 0, order)


def _eq10_rhs(params: Params) -> XSeries:
    """sum_{k>=1} (-2)^{k-1} / k * (x / (1 - x))^k."""
    order = params["T"]
    y = XSeries.geometric(order).shift(1)
    total = XSeries.zero(order)
    power = y
    for k in range(1, order + 1):
        total = total + power.scale(Fraction((-2) ** (k - 1), k))
        power = power * y
    return total


def _eq12_rhs(params: Params) -> XSeries:
    """sum_{k>=0} (-2)^k x^k / (1 - x)^{k+2}."""
    order = params["T"]
    total = XSeries.zero(order)
    for k in range(order + 1):
        total = total + x_term(k, (-2) ** k, lambda rest, k=k: product_expand({1: -(k + 2)}, rest), order)
    return total


def _eq39_rhs(params: Params) -> XSeries:
    """log((1 - x^L) / (1 - x)^L) / (L (1 - x))."""
    order, mod = params["T"], params["L"]
    ratio = product_expand({mod: 1, 1: -mod}, order)
    return (series_log(ratio) * XSeries.geometric(order)).scale(Fraction(1, mod))


def harmonic_mod3_binomial(n: int) -> Fraction:
    """sum_k (-3)^{k-1} / k * C(N+k, 2k)."""
    return sum(
        (Fraction((-3) ** (k - 1) * comb(n + k, 2 * k), k) for k in range(1, n + 1)),
        Fraction(0),
    )


def floor_half_binomial(n: int) -> Fraction:
    """sum_k C(N,k) (-1)^{k-1} / k - sum_{k<=N} (-1)^{k-1} / k."""
    binomial = sum((Fraction(comb(n, k) * (-1) ** (k - 1), k) for k in range(1, n + 1)), Fraction(0))
    alternating = sum((Fraction((-1) ** (k - 1), k) for k in range(1, n + 1)), Fraction(0))
    return binomial - alternating


def _eq43_lhs(params: Params) -> XSeries:
    order = params["T"]
    return series_of(
        lambda n: sum((Fraction(comb(n, k) * (-1) ** (k - 1), k) for k in range(1, n + 1)), Fraction(0)),
        order,
    )


def _eq43_rhs(params: Params) -> XSeries:
    """-log(1 - x) / (1 - x)."""
    order = params["T"]
    return -(series_log(product_expand({1: 1}, order)) * XSeries.geometric(order))


def _eq44_sides(params: Params) -> tuple[XSeries, XSeries]:
    order = params["T"]
    lhs = series_log(product_expand({1: 1}, order)) + series_log(XSeries.from_coeffs([1, 1], order))
    return lhs, series_log(product_expand({2: 1}, order))


def _eq54_lhs(params: Params) -> XSeries:
    """sum x^k / k - sum x^{3k} / (3k)."""
    return series_of(lambda n: Fraction(1, n) if n % 3 else 0, params["T"])


def _eq54_rhs(params: Params) -> XSeries:
    """sum_{k>=1} (-1)^{k-1} 3^{k-1} x^k / (k (1 - x)^{2k})."""
    order = params["T"]
    total = XSeries.zero(order)
    for k in range(1, order + 1):
        weight = Fraction((-1) ** (k - 1) * 3 ** (k - 1), k)
        total = total + x_term(k, weight, lambda rest, k=k: product_expand({1: -2 * k}, rest), order)
    return total


RECORDS: list[IdentityRecord] = [
    IdentityRecord(
        id="eq2",
        summary="sum_k C(N,k) (-2)^{k-1} / k = G_N, the odd harmonic number",
        mode=VerificationMode.FINITE,
        defaults={"N": RANGE},
        lhs=lambda params, n: binomial_odd_sum(n),
        rhs=lambda params, n: odd_harmonic(n),
        points=upto("N", 1),
        size="N",
    ),
    IdentityRecord(
        id="eq7",
        summary="sum G_N x^N = log((1 + x) / (1 - x)) / (2 (1 - x))",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: series_of(odd_harmonic, params["T"]),
        rhs=_eq7_rhs,
    ),
    IdentityRecord(
        id="eq10",
        summary="sum x^{2s+1} / (2s+1) = sum (-2)^{k-1} / k (x / (1 - x))^k",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: _odd_powers(params["T"]),
        rhs=_eq10_rhs,
    ),
    IdentityRecord(
        id="eq12",
        summary="1 / (1 - x^2) = sum (-2)^k x^k / (1 - x)^{k+2}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: product_expand({2: -1}, params["T"]),
        rhs=_eq12_rhs,
    ),
    IdentityRecord(
        id="eq39",
        summary="harmonic sums skipping multiples of L: log((1 - x^L) / (1 - x)^L) / (L (1 - x))",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER, "L": 3},
        lhs=lambda params: series_of(lambda n: harmonic(n, skip=params["L"]), params["T"]),
        rhs=_eq39_rhs,
    ),
    IdentityRecord(
        id="eq41",
        summary="G_{N|3} = sum_k (-3)^{k-1} / k C(N+k, 2k)",
        mode=VerificationMode.FINITE,
        defaults={"N": RANGE},
        lhs=lambda params, n: harmonic(n, skip=3),
        rhs=lambda params, n: harmonic_mod3_binomial(n),
        points=upto("N", 1),
        size="N",
    ),
    IdentityRecord(
        id="eq42",
        summary="sum_k C(N,k) (-1)^{k-1} / k - sum_{k<=N} (-1)^{k-1} / k = sum_{k<=N/2} 1 / k",
        mode=VerificationMode.FINITE,
        defaults={"N": 30},
        lhs=lambda params, n: floor_half_binomial(n),
        rhs=lambda params, n: harmonic(n // 2),
        points=upto("N", 1),
        size="N",
    ),
    IdentityRecord(
        id="eq43",
        summary="sum_N [sum_k C(N,k) (-1)^{k-1} / k] x^N = -log(1 - x) / (1 - x)",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=_eq43_lhs,
        rhs=_eq43_rhs,
    ),
    IdentityRecord(
        id="eq44",
        summary="log(1 - x) + log(1 + x) = log(1 - x^2)",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: _eq44_sides(params)[0],
        rhs=lambda params: _eq44_sides(params)[1],
    ),
    IdentityRecord(
        id="eq54",
        summary="sum x^k / k - sum x^{3k} / (3k) = sum (-1)^{k-1} 3^{k-1} x^k / (k (1 - x)^{2k})",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=_eq54_lhs,
        rhs=_eq54_rhs,
    ),
]
