"""q-logarithm identities: the Log(1 + a x) family and the harmonic chain through [k]."""

from __future__ import annotations

from collections.abc import Callable

from qrk.catalog.record import ORDER, RANGE, SEED, IdentityRecord, Params, random_rationals, upto
from qrk.catalog.records._common import inv_qint, qmono, recip, series_of, x_term
from qrk.core.exact import QRat, qsum
from qrk.core.qkit import q_binomial, shifted_pow, triangular
from qrk.core.series import XSeries, series_qlog, truncated_sum
from qrk.schemas.verdict import VerificationMode


def _a(params: Params) -> QRat:
    return QRat.of(random_rationals(params["seed"], 1)[0])


def _ab(params: Params) -> tuple[QRat, QRat]:
    a, b = random_rationals(params["seed"], 2)
    return QRat.of(a), QRat.of(b)


def eq33_lhs(params: Params) -> XSeries:
    """1 / (1 - x) + a / (1 + a x)."""
    order, a = params["T"], _a(params)
    return XSeries.geometric(order) + XSeries.geometric(order, -a).scale(a)


def eq33_rhs(params: Params) -> XSeries:
    """sum_k (-1)^k (a (+) 1)^{k+1} x^k / (1 -+ x)^{k+2}."""
    order, a = params["T"], _a(params)
    return truncated_sum(
        lambda k: x_term(k, (-1) ** k * shifted_pow(a, 1, k + 1), recip(1, k + 2), order),
        lambda k: k,
        order,
    )


def _eq34_rhs(params: Params, n: int) -> QRat:
    a = _a(params)
    return qsum(
        q_binomial(n + 1, k + 1) * (-1) ** k * shifted_pow(a, 1, k + 1) for k in range(n + 1)
    )


def _q_log(z_coeff: QRat | int, order: int) -> XSeries:
    """Log(1 + c x)."""
    return series_qlog(XSeries.monomial(1, order, z_coeff))


def eq35_lhs(params: Params) -> XSeries:
    """-Log(1 - x) + Log(1 + a x)."""
    order = params["T"]
    return -_q_log(-1, order) + _q_log(_a(params), order)


def _log_difference_rhs(order: int, weight: Callable[[int], QRat]) -> XSeries:
    """sum_k (-1)^k weight(k) x^{k+1} / ([k+1] (1 -+ x)^{k+1})."""
    return truncated_sum(
        lambda k: x_term(k + 1, (-1) ** k * weight(k) * inv_qint(k + 1), recip(1, k + 1), order),
        lambda k: k + 1,
        order,
    )


def eq35_rhs(params: Params) -> XSeries:
    a = _a(params)
    return _log_difference_rhs(params["T"], lambda k: shifted_pow(a, 1, k + 1))


def _eq37_lhs(params: Params) -> XSeries:
    order = params["T"]
    a, b = _ab(params)
    return _q_log(a, order) - _q_log(b, order)


def _eq37_rhs(params: Params) -> XSeries:
    a, b = _ab(params)
    return _log_difference_rhs(
        params["T"], lambda k: shifted_pow(a, 1, k + 1) - shifted_pow(b, 1, k + 1)
    )


def _eq46_lhs(n: int) -> QRat:
    return qsum(
        q_binomial(n, k) * qmono(triangular(k), (-1) ** (k - 1)) * inv_qint(k) for k in range(1, n + 1)
    )


def _eq46_rhs(n: int) -> QRat:
    alternating = qsum(qmono(k, (-1) ** (k - 1)) * inv_qint(k) for k in range(1, n + 1))
    even = qsum(qmono(2 * k, 2) * inv_qint(2 * k) for k in range(1, n // 2 + 1))
    return alternating + even


def _harmonic_pair(order: int) -> XSeries:
    """sum (-1)^{k-1} x^k / [k] + sum 2 x^{2k} / [2k]."""
    return series_of(
        lambda n: 0 if n == 0 else ((-1) ** (n - 1) + (0 if n % 2 else 2)) * inv_qint(n),
        order,
    )


def _q_harmonic(order: int) -> XSeries:
    """sum x^k / [k]."""
    return series_of(lambda n: inv_qint(n) if n else 0, order)


def _eq49_lhs(params: Params) -> XSeries:
    """sum_{k>=1} (-1)^{k-1} q^{binomial(k,2)} x^k / ([k] (1 -+ x)^k)."""
    order = params["T"]
    return truncated_sum(
        lambda k: x_term(k, qmono(triangular(k - 1), (-1) ** (k - 1)) * inv_qint(k), recip(1, k), order),
        lambda k: k,
        order,
        start=1,
    )


def _eq50_lhs(params: Params) -> XSeries:
    """sum_{k>=1} (-x)^{k-1} q^{binomial(k,2)} / (1 -+ x)^{k+1}."""
    order = params["T"]
    return truncated_sum(
        lambda k: x_term(k - 1, qmono(triangular(k - 1), (-1) ** (k - 1)), recip(1, k + 1), order),
        lambda k: k - 1,
        order,
        start=1,
    )


def _eq50_rhs(params: Params) -> XSeries:
    """sum (-x)^{k-1} + 2 sum x^{2k-1}."""
    return series_of(lambda n: (-1) ** n + (2 if n % 2 else 0), params["T"])


def _eq51_lhs(params: Params) -> XSeries:
    """sum_{k>=0} (-x)^k q^{binomial(k+1,2)} / (1 -+ x)^{k+2}."""
    order = params["T"]
    return truncated_sum(
        lambda k: x_term(k, qmono(triangular(k), (-1) ** k), recip(1, k + 2), order),
        lambda k: k,
        order,
    )


def _eq53_lhs(n: int) -> QRat:
    return _eq46_lhs(n)


def _eq53_rhs(n: int) -> QRat:
    return qsum(qmono(k) * inv_qint(k) for k in range(1, n + 1))


RECORDS: list[IdentityRecord] = [
    IdentityRecord(
        id="eq33",
        summary="1 / (1 - x) + a / (1 + a x) = sum_k (-1)^k (a (+) 1)^{k+1} x^k / (1 -+ x)^{k+2}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER, "seed": SEED},
        lhs=eq33_lhs,
        rhs=eq33_rhs,
        tags=("random",),
    ),
    IdentityRecord(
        id="eq34",
        summary="1 + (-1)^N a^{N+1} = sum_k [N+1, k+1] (-1)^k (a (+) 1)^{k+1}",
        mode=VerificationMode.FINITE,
        defaults={"N": RANGE, "seed": SEED},
        lhs=lambda params, n: 1 + (-1) ** n * _a(params) ** (n + 1),
        rhs=_eq34_rhs,
        points=upto("N"),
        size="N",
        tags=("random",),
    ),
    IdentityRecord(
        id="eq35",
        summary="-Log(1 - x) + Log(1 + a x) = sum_k (-1)^k (a (+) 1)^{k+1} x^{k+1} / ([k+1] (1 -+ x)^{k+1})",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER, "seed": SEED},
        lhs=eq35_lhs,
        rhs=eq35_rhs,
        tags=("random",),
    ),
    IdentityRecord(
        id="eq37",
        summary="Log(1 + a x) - Log(1 + b x) through the shifted powers of a and b",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER, "seed": SEED},
        lhs=_eq37_lhs,
        rhs=_eq37_rhs,
        tags=("random",),
    ),
    IdentityRecord(
        id="eq46",
        summary="sum_k [N, k] (-1)^{k-1} q^{binomial(k+1,2)} / [k] = sum (-1)^{k-1} q^k / [k] + 2 sum q^{2k} / [2k]",
        mode=VerificationMode.FINITE,
        defaults={"N": RANGE},
        lhs=lambda params, n: _eq46_lhs(n),
        rhs=lambda params, n: _eq46_rhs(n),
        points=upto("N", 1),
        size="N",
    ),
    IdentityRecord(
        id="eq49",
        summary="sum (-1)^{k-1} q^{binomial(k,2)} t^k / ([k] (1 -+ t)^k) = sum (-1)^{k-1} t^k / [k] + 2 sum t^{2k} / [2k]",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=_eq49_lhs,
        rhs=lambda params: _harmonic_pair(params["T"]),
    ),
    IdentityRecord(
        id="eq50",
        summary="sum (-t)^{k-1} q^{binomial(k,2)} / (1 -+ t)^{k+1} = sum (-t)^{k-1} + 2 sum t^{2k-1}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=_eq50_lhs,
        rhs=_eq50_rhs,
    ),
    IdentityRecord(
        id="eq51",
        summary="sum (-t)^k q^{binomial(k+1,2)} / (1 -+ t)^{k+2} = 1 / (1 - t)",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=_eq51_lhs,
        rhs=lambda params: XSeries.geometric(params["T"]),
    ),
    IdentityRecord(
        id="eq52",
        summary="sum (-1)^{k-1} t^k / [k] + 2 sum t^{2k} / [2k] = sum t^k / [k]",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: _harmonic_pair(params["T"]),
        rhs=lambda params: _q_harmonic(params["T"]),
    ),
    IdentityRecord(
        id="eq53",
        summary="sum_k [N, k] (-1)^{k-1} q^{binomial(k+1,2)} / [k] = sum_{k<=N} q^k / [k]",
        mode=VerificationMode.FINITE,
        defaults={"N": RANGE},
        lhs=lambda params, n: _eq53_lhs(n),
        rhs=lambda params, n: _eq53_rhs(n),
        points=upto("N", 1),
        size="N",
    ),
]
