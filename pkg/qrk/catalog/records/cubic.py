"""Cubic expansions over <3^k> and the collected 1 / (1 - x^L) forms."""

from __future__ import annotations

from qrk.catalog.record import ORDER, IdentityRecord, Params, upto
from qrk.catalog.records._common import inv_qint, qmono, qpow, recip, series_of, x_term
from qrk.catalog.records.symmetric import eq14_rhs
from qrk.core.exact import QRat, qsum
from qrk.core.qkit import q_binomial, triangular
from qrk.core.series import XSeries, product_expand, q_derivative, truncated_sum
from qrk.schemas.verdict import VerificationMode


def _non_multiples_of_three(order: int) -> XSeries:
    """sum_{3 does not divide k} x^k / [k]."""
    return series_of(lambda n: inv_qint(n) if n % 3 else 0, order)


def eq56_rhs(order: int) -> XSeries:
    """sum_{k>=1} (-1)^{k-1} <3^{k-1}> q^{-binomial(k,2)} x^k / ([k] (1 -+ q^{-k} x)^{2k})."""
    return truncated_sum(
        lambda k: x_term(
            k,
            qmono(-triangular(k - 1), (-1) ** (k - 1)) * qpow(3, k - 1) * inv_qint(k),
            recip(qmono(-k), 2 * k),
            order,
        ),
        lambda k: k,
        order,
        start=1,
    )


def _cubic_term(k: int, order: int) -> XSeries:
    """(-x)^k <3^k> q^{-binomial(k+1,2)} / (1 -+ q^{-k-1} x)^{2k+3}."""
    return x_term(
        k,
        qmono(-triangular(k), (-1) ** k) * qpow(3, k),
        recip(qmono(-k - 1), 2 * k + 3),
        order,
    )


def cubic_sum(order: int, last: int | None = None) -> XSeries:
    """sum_k of the cubic terms, infinite when ``last`` is None."""
    if last is None:
        return truncated_sum(lambda k: _cubic_term(k, order), lambda k: k, order)
    total = XSeries.zero(order)
    for k in range(min(last, order) + 1):
        total = total + _cubic_term(k, order)
    return total


def _eq62_lhs(params: Params, n: int) -> XSeries:
    order = params["T"]
    return XSeries.from_coeffs([1, 1, 1], order) * cubic_sum(order, last=n)


def _eq62_rhs(params: Params, n: int) -> XSeries:
    """1 / (1 - x) + (-1)^N x^{N+1} <3^{N+1}> q^{-binomial(N+2,2)} / (1 -+ q^{-N-1} x)^{2N+3}."""
    order = params["T"]
    tail = x_term(
        n + 1,
        qmono(-triangular(n + 1), (-1) ** n) * qpow(3, n + 1),
        recip(qmono(-n - 1), 2 * n + 3),
        order,
    )
    return XSeries.geometric(order) + tail


def cubic_finite_sum(n: int) -> QRat:
    """sum_k (-1)^k q^{-binomial(k+1,2) - (k+1)(N-k)} <3^k> [N+k+2, 2k+2]."""
    return qsum(
        q_binomial(n + k + 2, 2 * k + 2)
        * qpow(3, k)
        * qmono(-triangular(k) - (k + 1) * (n - k), (-1) ** k)
        for k in range(n + 1)
    )


def _eq66_lhs(n: int) -> tuple[QRat, QRat]:
    value = cubic_finite_sum(n)
    return value, value.subs(-1)


def _eq66_rhs(n: int) -> tuple[QRat, QRat]:
    expected = QRat.of(1 if n % 3 == 0 else 0)
    return expected, expected


def _eq67_1_rhs(params: Params) -> XSeries:
    """sum (-x)^k q^{binomial(k+1,2)} / (1 -+ x)^{k+2}."""
    order = params["T"]
    return truncated_sum(
        lambda k: x_term(k, qmono(triangular(k), (-1) ** k), recip(1, k + 2), order),
        lambda k: k,
        order,
    )


RECORDS: list[IdentityRecord] = [
    IdentityRecord(
        id="eq56",
        summary="sum_{3 does not divide k} x^k / [k] expanded over <3^{k-1}> / (1 -+ q^{-k} x)^{2k}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: _non_multiples_of_three(params["T"]),
        rhs=lambda params: eq56_rhs(params["T"]),
    ),
    IdentityRecord(
        id="eq58",
        summary="the q-derivative of the eq56 expansion is (1 + x) / (1 - x^3)",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: q_derivative(eq56_rhs(params["T"] + 1)),
        rhs=lambda params: XSeries.from_coeffs([1, 1], params["T"]) * product_expand({3: -1}, params["T"]),
    ),
    IdentityRecord(
        id="eq60",
        summary="1 / (1 - x^3) = sum (-x)^k <3^k> q^{-binomial(k+1,2)} / (1 -+ q^{-k-1} x)^{2k+3}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: product_expand({3: -1}, params["T"]),
        rhs=lambda params: cubic_sum(params["T"]),
    ),
    IdentityRecord(
        id="eq62",
        summary="(1 + x + x^2) times the partial cubic sum telescopes to 1 / (1 - x) plus one tail term",
        mode=VerificationMode.FINITE,
        defaults={"N": 8, "T": 16},
        lhs=_eq62_lhs,
        rhs=_eq62_rhs,
        points=upto("N"),
        size="N",
    ),
    IdentityRecord(
        id="eq66",
        summary="sum_k (-1)^k q^{-binomial(k+1,2)} <3^k> q^{-(k+1)(N-k)} [N+k+2, 2k+2] = [3 divides N], invariant under q -> 1/q",
        mode=VerificationMode.FINITE,
        defaults={"N": 15},
        lhs=lambda params, n: _eq66_lhs(n),
        rhs=lambda params, n: _eq66_rhs(n),
        points=upto("N"),
        size="N",
    ),
    IdentityRecord(
        id="eq67.1",
        summary="1 / (1 - x) = sum (-x)^k q^{binomial(k+1,2)} / (1 -+ x)^{k+2}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: XSeries.geometric(params["T"]),
        rhs=_eq67_1_rhs,
    ),
    IdentityRecord(
        id="eq67.2",
        summary="1 / (1 - x^2) = sum (-x)^k <2^k> / (1 -+ x)^{k+2}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: product_expand({2: -1}, params["T"]),
        rhs=eq14_rhs,
    ),
    IdentityRecord(
        id="eq67.3",
        summary="1 / (1 - x^3) = sum (-x)^k <3^k> q^{-binomial(k+1,2)} / (1 -+ q^{-k-1} x)^{2k+3}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: product_expand({3: -1}, params["T"]),
        rhs=lambda params: cubic_sum(params["T"]),
    ),
]
