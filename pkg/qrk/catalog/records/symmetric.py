"""Expansions over the shifted factorials (1 (+) q)^k and the symmetric q-binomial sums."""

from __future__ import annotations

from fractions import Fraction

from qrk.catalog.record import ORDER, RANGE, SEED, IdentityRecord, Params, random_rationals, upto
from qrk.catalog.records._common import inv_qint, qmono, qpow, recip, series_of, x_term
from qrk.core.exact import QRat, qsum
from qrk.core.qkit import gauss_sum, poch, q_binomial, shifted_pow, triangular
from qrk.core.series import XSeries, truncated_sum
from qrk.schemas.verdict import VerificationMode


def _even_powers(order: int) -> XSeries:
    return series_of(lambda n: 0 if n % 2 else 1, order)


def eq14_rhs(params: Params) -> XSeries:
    """sum_k (-1)^k <2^k> x^k / (1 -+ x)^{k+2}."""
    order = params["T"]
    return truncated_sum(
        lambda k: x_term(k, (-1) ** k * qpow(2, k), recip(1, k + 2), order),
        lambda k: k,
        order,
    )


def _eq16_rhs(params: Params) -> XSeries:
    """sum_k (-1)^k <2^k> x^k / (1 -+ q x)^{k+1}."""
    order = params["T"]
    q = QRat.gen()
    return truncated_sum(
        lambda k: x_term(k, (-1) ** k * qpow(2, k), recip(q, k + 1), order),
        lambda k: k,
        order,
    )


def _eq19_rhs(n: int) -> QRat:
    return qsum(
        q_binomial(n, k) * (-1) ** k * qpow(2, k) * qmono(n - k) for k in range(n + 1)
    )


def _eq20_rhs(n: int) -> QRat:
    return qsum(
        q_binomial(n, k) * qmono(k, (-1) ** k) * qpow(2, n - k) for k in range(n + 1)
    )


def _randoms(params: Params, count: int) -> list[Fraction]:
    return random_rationals(params["seed"], count)


def _eq21_side(params: Params, n: int, swap: bool) -> QRat:
    a, b, v = _randoms(params, 3)
    if swap:
        a, b = b, a
    return qsum(q_binomial(n, k) * QRat.of(a) ** k * shifted_pow(b, v, n - k) for k in range(n + 1))


def _eq23_side(params: Params, n: int, swap: bool) -> QRat:
    a, b, u, v = _randoms(params, 4)
    if swap:
        a, b = b, a
    return qsum(
        q_binomial(n, k) * shifted_pow(a, u, k) * shifted_pow(b, v, n - k) for k in range(n + 1)
    )


def _eq110_rhs(n: int) -> tuple[QRat, ...]:
    """[n, k] = sum_s [n+1, k-s] (-1)^s q^{s(n-k) + binomial(s+1, 2)}, for every k."""
    return tuple(
        qsum(
            q_binomial(n + 1, k - s) * qmono(s * (n - k) + triangular(s), (-1) ** s)
            for s in range(k + 1)
        )
        for k in range(n + 1)
    )


def _gauss_rhs(n: int) -> QRat:
    if n % 2:
        return QRat.zero()
    return poch(QRat.gen(), QRat.gen() ** 2, n // 2)


def eq26_lhs(params: Params) -> XSeries:
    """sum_s x^{2s+1} / [2s+1]."""
    return series_of(lambda n: inv_qint(n) if n % 2 else 0, params["T"])


def eq26_rhs(params: Params) -> XSeries:
    """sum_k (-1)^k <2^k> / [k+1] x^{k+1} / (1 -+ x)^{k+1}."""
    order = params["T"]
    return truncated_sum(
        lambda k: x_term(k + 1, (-1) ** k * qpow(2, k) * inv_qint(k + 1), recip(1, k + 1), order),
        lambda k: k + 1,
        order,
    )


def odd_q_harmonic(n: int) -> QRat:
    """g_N = sum_{j<=N odd} q^j / [j]."""
    return qsum(inv_qint(j) * qmono(j) for j in range(1, n + 1, 2))


def _eq27_rhs(params: Params) -> XSeries:
    """sum_{k>=1} (-1)^{k-1} <2^{k-1}> q^k / [k] x^k / (1 -+ x)^{k+1}."""
    order = params["T"]
    return truncated_sum(
        lambda k: x_term(
            k, (-1) ** (k - 1) * qpow(2, k - 1) * inv_qint(k) * qmono(k), recip(1, k + 1), order
        ),
        lambda k: k,
        order,
        start=1,
    )


def _eq31_rhs(n: int) -> QRat:
    return qsum(
        q_binomial(n, k) * (-1) ** (k - 1) * qpow(2, k - 1) * qmono(k) * inv_qint(k)
        for k in range(1, n + 1)
    )


RECORDS: list[IdentityRecord] = [
    IdentityRecord(
        id="eq14",
        summary="sum x^{2s} = sum_k (-1)^k <2^k> x^k / (1 -+ x)^{k+2}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: _even_powers(params["T"]),
        rhs=eq14_rhs,
    ),
    IdentityRecord(
        id="eq16",
        summary="1 / (1 + x) = sum_k (-1)^k <2^k> x^k / (1 -+ q x)^{k+1}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: XSeries.geometric(params["T"], -1),
        rhs=_eq16_rhs,
    ),
    IdentityRecord(
        id="eq19",
        summary="(-1)^N = sum_k [N, k] (-1)^k <2^k> q^{N-k}",
        mode=VerificationMode.FINITE,
        defaults={"N": 15},
        lhs=lambda params, n: QRat.of((-1) ** n),
        rhs=lambda params, n: _eq19_rhs(n),
        points=upto("N"),
        size="N",
    ),
    IdentityRecord(
        id="eq20",
        summary="1 = sum_k [N, k] (-q)^k <2^{N-k}>",
        mode=VerificationMode.FINITE,
        defaults={"N": 15},
        lhs=lambda params, n: QRat.one(),
        rhs=lambda params, n: _eq20_rhs(n),
        points=upto("N"),
        size="N",
    ),
    IdentityRecord(
        id="eq21",
        summary="sum_k [N, k] a^k (b (+) v)^{N-k} is symmetric in a and b",
        mode=VerificationMode.FINITE,
        defaults={"N": 8, "seed": SEED},
        lhs=lambda params, n: _eq21_side(params, n, swap=False),
        rhs=lambda params, n: _eq21_side(params, n, swap=True),
        points=upto("N"),
        size="N",
        tags=("random",),
    ),
    IdentityRecord(
        id="eq23",
        summary="sum_k [N, k] (a (+) u)^k (b (+) v)^{N-k} is symmetric in a and b",
        mode=VerificationMode.FINITE,
        defaults={"N": 8, "seed": SEED},
        lhs=lambda params, n: _eq23_side(params, n, swap=False),
        rhs=lambda params, n: _eq23_side(params, n, swap=True),
        points=upto("N"),
        size="N",
        tags=("random",),
    ),
    IdentityRecord(
        id="eq110",
        summary="[n, k] = sum_s [n+1, k-s] (-1)^s q^{s(n-k) + binomial(s+1, 2)}",
        mode=VerificationMode.FINITE,
        defaults={"n": 12},
        lhs=lambda params, n: tuple(q_binomial(n, k) for k in range(n + 1)),
        rhs=lambda params, n: _eq110_rhs(n),
        points=upto("n"),
        size="n",
    ),
    IdentityRecord(
        id="gauss",
        summary="sum_l [N, l] (-1)^l = 0 for odd N, (q; q^2)_{N/2} for even N",
        mode=VerificationMode.FINITE,
        defaults={"N": 16},
        lhs=lambda params, n: gauss_sum(n),
        rhs=lambda params, n: _gauss_rhs(n),
        points=upto("N"),
        size="N",
    ),
    IdentityRecord(
        id="eq26",
        summary="sum x^{2s+1} / [2s+1] = sum_k (-1)^k <2^k> / [k+1] x^{k+1} / (1 -+ x)^{k+1}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=eq26_lhs,
        rhs=eq26_rhs,
    ),
    IdentityRecord(
        id="eq27",
        summary="sum_N g_N x^N = sum_k (-1)^{k-1} <2^{k-1}> q^k / [k] x^k / (1 -+ x)^{k+1}",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: series_of(odd_q_harmonic, params["T"]),
        rhs=_eq27_rhs,
    ),
    IdentityRecord(
        id="eq31",
        summary="g_N = sum_k [N, k] (-1)^{k-1} <2^{k-1}> q^k / [k]",
        mode=VerificationMode.FINITE,
        defaults={"N": RANGE},
        lhs=lambda params, n: odd_q_harmonic(n),
        rhs=lambda params, n: _eq31_rhs(n),
        points=upto("N", 1),
        size="N",
    ),
]
