"""Quantum powers <a^n>: factorial relations, infinite products and the q-geometric series."""

from __future__ import annotations

from qrk.catalog.record import Q_ORDER, RANGE, IdentityRecord, Params
from qrk.catalog.records._common import qmono
from qrk.catalog.transforms import geometric_check
from qrk.core.exact import QLaurent, QRat, qrat_normalize
from qrk.core.qkit import (
    poch,
    q_factorial,
    q_int,
    quantum_pow,
    quantum_pow_inf,
    triangular,
)
from qrk.core.series import merge_exponents, product_expand, truncated_q_sum
from qrk.schemas.verdict import VerificationMode


def _power_points(params: Params) -> list[tuple[int, int]]:
    return [(a, n) for a in range(1, params["a_max"] + 1) for n in range(params["N"] + 1)]


def _eq69_lhs(params: Params, point: tuple[int, int]) -> QRat:
    a, n = point
    q = QRat.gen()
    return QRat.of(quantum_pow(a, n)) * poch(q, q, n)


def _eq69_rhs(params: Params, point: tuple[int, int]) -> QRat:
    a, n = point
    q_a = QRat.gen() ** a
    return poch(q_a, q_a, n)


def _eq75_lhs(params: Params, point: tuple[int, int]) -> QRat:
    a, n = point
    return QRat.of(quantum_pow(a, n))


def _eq75_rhs(params: Params, point: tuple[int, int]) -> QRat:
    """[a]^n [n]_{q^a}! / [n]!."""
    a, n = point
    return qrat_normalize(q_int(a) ** n * q_factorial(n, a), q_factorial(n))


def _eq77_lhs(params: Params, mod: int) -> QLaurent:
    """<(2L)^inf> / (<L^inf> <2^inf>), expanded."""
    order = params["T"]
    numerator = quantum_pow_inf(2 * mod, order)
    denominator = (quantum_pow_inf(mod, order) * quantum_pow_inf(2, order)).truncate(order)
    return QRat(numerator, denominator).expand(order)


def _eq77_rhs(params: Params, mod: int) -> QLaurent:
    """prod over n not divisible by L of (1 - q^n) / (1 - q^{2n})."""
    order = params["T"]
    parts = [{n: 1, 2 * n: -1} for n in range(1, order + 1) if n % mod]
    series = product_expand(merge_exponents(*parts), order)
    return QLaurent([c.constant_value() for c in series.coeffs])


def _eq79_lhs(params: Params) -> QLaurent:
    """sum_k q^{binomial(k+1,2)} / <2^{k+1}>."""
    return truncated_q_sum(
        lambda k: QRat(qmono(triangular(k)), quantum_pow(2, k + 1)),
        triangular,
        params["T"],
    )


RECORDS: list[IdentityRecord] = [
    IdentityRecord(
        id="eq69",
        summary="<a^n> (q; q)_n = (q^a; q^a)_n",
        mode=VerificationMode.FINITE,
        defaults={"a_max": 10, "N": 20},
        lhs=_eq69_lhs,
        rhs=_eq69_rhs,
        points=_power_points,
        size="N",
    ),
    IdentityRecord(
        id="eq75",
        summary="<a^n> = [a]^n [n]_{q^a}! / [n]!",
        mode=VerificationMode.FINITE,
        defaults={"a_max": 10, "N": 10},
        lhs=_eq75_lhs,
        rhs=_eq75_rhs,
        points=lambda params: [
            (a, n) for a in range(1, params["a_max"] + 1) for n in range(1, params["N"] + 1)
        ],
        size="N",
    ),
    IdentityRecord(
        id="eq77",
        summary="<(2L)^inf> / (<L^inf> <2^inf>) = prod_{L does not divide n} (1 - q^n) / (1 - q^{2n}), L = 2, 3",
        mode=VerificationMode.Q_SERIES,
        defaults={"T": Q_ORDER},
        lhs=_eq77_lhs,
        rhs=_eq77_rhs,
        points=lambda params: (2, 3),
    ),
    IdentityRecord(
        id="eq79",
        summary="sum_k q^{binomial(k+1,2)} / <2^{k+1}> = 1",
        mode=VerificationMode.Q_SERIES,
        defaults={"T": Q_ORDER},
        lhs=_eq79_lhs,
        rhs=lambda params: QLaurent.one(),
    ),
    IdentityRecord(
        id="eq80",
        summary="sum_{k<=N} q^{binomial(k+1,2)} / <2^{k+1}> = 1 - q^{binomial(N+2,2)} / <2^{N+1}>",
        mode=VerificationMode.FINITE,
        defaults={"N": RANGE},
        check=lambda params: geometric_check(params["N"]),
        size="N",
    ),
]
