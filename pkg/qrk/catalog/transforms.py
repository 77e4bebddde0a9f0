"""q-deformed difference operator, Euler transformation and geometric progression checks."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from qrk.core.exact import QLaurent, QRat, qsum
from qrk.core.qkit import double_q_factorial, q_binomial, q_int, quantum_pow, triangular
from qrk.core.reporting import make_verdict, start_timer
from qrk.core.series import (
    XSeries,
    first_exponent_difference,
    jackson_sum_01,
    series_qlog,
    truncated_q_sum,
)
from qrk.schemas.verdict import Verdict, VerificationMode

logger = logging.getLogger(__name__)


def _term(a: Sequence[Any], j: int) -> QRat:
    return QRat.of(a[j]) if 0 <= j < len(a) else QRat.zero()


def delta_op(a: Sequence[Any], ell: int, k: int, weight: Any = None) -> QRat:
    """(D^{l+1} a)_k = (D^l a)_{k+1} - w^l (D^l a)_k with w = q unless a weight is given."""
    w = QRat.gen() if weight is None else QRat.of(weight)
    values = [_term(a, j) for j in range(k, k + ell + 1)]
    for step in range(ell):
        factor = w**step
        values = [values[j + 1] - factor * values[j] for j in range(len(values) - 1)]
    return values[0]


def delta_explicit(a: Sequence[Any], ell: int, k: int) -> QRat:
    """sum_s a_{k+l-s} (-1)^s q^{binomial(s, 2)} [l, s]."""
    return qsum(
        _term(a, k + ell - s) * q_binomial(ell, s) * QLaurent.monomial(triangular(s - 1), (-1) ** s)
        for s in range(ell + 1)
    )


# ── Euler transformation ──


def _alternating(a: Sequence[Any], base: QRat, q_order: int, var: str = "q") -> QLaurent:
    """sum_k (-base)^k a_k as a q-expansion."""
    total = qsum(_term(a, k) * (-base) ** k for k in range(len(a)))
    return total.expand(q_order).with_var(var)


def euler_transform_sides(a: Sequence[Any], q_order: int) -> tuple[QLaurent, QLaurent]:
    q = QRat.gen()
    lhs = _alternating(a, q, q_order)
    lowest = min((v for v in (_term(a, k).valuation() for k in range(len(a))) if v is not None), default=0)
    rhs = truncated_q_sum(
        lambda ell: (-q) ** ell * delta_op(a, ell, 0) / quantum_pow(2, ell + 1),
        lambda ell: ell + lowest,
        q_order,
    )
    return lhs, rhs


def lemma_sum(k: int, q_order: int) -> QLaurent:
    """sum_s q^{binomial(s,2)+s} [k+s, s] / (1 (+) q)^{k+s+1}."""
    return truncated_q_sum(
        lambda s: q_binomial(k + s, s) * QLaurent.monomial(triangular(s)) / quantum_pow(2, k + s + 1),
        triangular,
        q_order,
    )


def euler_transform_check(a: Sequence[Any], q_order: int, lemma_max: int = 8) -> Verdict:
    started = start_timer()
    lhs, rhs = euler_transform_sides(a, q_order)
    checks: list[tuple[str, QLaurent, QLaurent]] = [("transform", lhs, rhs)]
    for k in range(lemma_max + 1):
        checks.append((f"lemma-{k}", lemma_sum(k, q_order), QLaurent.one()))
    return _series_verdict("eq84", {"q_order": q_order, "support": len(a)}, started, checks)


# ── Geometric progression ──


def geometric_partial(n: int) -> QRat:
    return qsum(
        QRat(QLaurent.monomial(triangular(k + 1)), quantum_pow(2, k + 1)) for k in range(n + 1)
    )


def geometric_closed(n: int) -> QRat:
    return 1 - QRat(QLaurent.monomial(triangular(n + 2)), quantum_pow(2, n + 1))


def geometric_check(n: int) -> Verdict:
    """sum_{k<=N} q^{binomial(k+1,2)} / <2^{k+1}> = 1 - q^{binomial(N+2,2)} / <2^{N+1}>, for 0..N."""
    started = start_timer()
    failure: int | None = None
    witness: dict[str, str] = {}
    for m in range(n + 1):
        lhs, rhs = geometric_partial(m), geometric_closed(m)
        if lhs != rhs:
            failure, witness = m, {"lhs": str(lhs), "rhs": str(rhs)}
            break
    return make_verdict(
        "eq80", VerificationMode.FINITE, {"N": n}, started, first_failure=failure, witness=witness
    )


# ── Two classical series, quantized ──


def log_two_sides(q_order: int) -> tuple[QLaurent, QLaurent]:
    """sum (-q)^k / [k+1] against its Euler transform."""
    lhs = qsum(QRat(QLaurent.monomial(k, (-1) ** k), q_int(k + 1)) for k in range(q_order + 1))
    rhs = truncated_q_sum(
        lambda ell: QRat(QLaurent.monomial(triangular(ell + 1)), q_int(ell + 1) * quantum_pow(2, ell + 1)),
        lambda ell: triangular(ell + 1),
        q_order,
    )
    return lhs.expand(q_order), rhs


def log_two_from_qlog(q_order: int) -> QLaurent:
    """q^{-1} Log(1 + z) at z = q, read from series_qlog."""
    log_series = series_qlog(XSeries.monomial(1, q_order + 1))
    return qsum(log_series[k + 1] * QLaurent.monomial(k) for k in range(q_order + 1)).expand(q_order)


def odd_reciprocal(k: int) -> QRat:
    """1 / [2k+1]_Q."""
    return QRat(1, q_int(2 * k + 1, var="Q"))


def odd_delta_closed(ell: int) -> QRat:
    """(-1)^l Q^{l + 2 binomial(l,2)} [2l]!! / [2l+1]!!, all in base Q."""
    numerator = double_q_factorial(2 * ell, var="Q").shift(ell + 2 * triangular(ell - 1))
    return QRat(numerator.scale((-1) ** ell), double_q_factorial(2 * ell + 1, var="Q"))


def arctan_sides(q_order: int) -> tuple[QLaurent, QLaurent, QLaurent]:
    """sum (-Q^2)^k / [2k+1]_Q, its Jackson-integral form, and its Euler transform."""
    q_squared = QRat(QLaurent.monomial(2, 1, "Q"))
    direct = qsum((-q_squared) ** k * odd_reciprocal(k) for k in range(q_order // 2 + 1))
    jackson = jackson_sum_01([1], [1, 0, QRat.gen()], base_power=2, q_order=q_order)
    transform = truncated_q_sum(
        lambda ell: (-q_squared) ** ell
        * odd_delta_closed(ell)
        / quantum_pow(2, ell + 1).subs(2, "Q"),
        lambda ell: ell * ell + 2 * ell,
        q_order,
    )
    return direct.expand(q_order), jackson, transform.with_var("Q")


_FAMILY_IDS = {None: "knopp", "log": "eq91b", "arctan": "eq92b"}


def knopp_examples_check(q_order: int, family: str | None = None, delta_max: int = 5) -> Verdict:
    """Quantized log 2 and pi / 4 series; ``family`` restricts to "log" or "arctan"."""
    started = start_timer()
    checks: list[tuple[str, Any, Any]] = []
    if family in (None, "log"):
        lhs, rhs = log_two_sides(q_order)
        checks.append(("log-transform", lhs, rhs))
        checks.append(("log-qlog", lhs, log_two_from_qlog(q_order)))
    if family in (None, "arctan"):
        direct, jackson, transform = arctan_sides(q_order)
        checks.append(("arctan-jackson", direct, jackson))
        checks.append(("arctan-transform", direct, transform))
    harmonic = [QRat(1, q_int(k + 1)) for k in range(delta_max + 1)]
    odd = [odd_reciprocal(k) for k in range(delta_max + 1)]
    q_squared = QLaurent.monomial(2, 1, "Q")
    for ell in range(delta_max + 1):
        expected = QRat(QLaurent.monomial(triangular(ell), (-1) ** ell), q_int(ell + 1))
        checks.append((f"log-delta-{ell}", delta_op(harmonic, ell, 0), expected))
        checks.append((f"arctan-delta-{ell}", delta_op(odd, ell, 0, weight=q_squared), odd_delta_closed(ell)))
    checks.extend(_classical_limits(delta_max + 1))
    if family is not None:
        checks = [c for c in checks if c[0].startswith(family)]
    return _series_verdict(_FAMILY_IDS[family], {"q_order": q_order}, started, checks)


def _classical_limits(terms: int) -> list[tuple[str, Any, Any]]:
    """Term-wise q = 1 images of both transforms: log 2 and pi / 4 partial sums."""
    checks: list[tuple[str, Any, Any]] = []
    for ell in range(terms):
        log_term = QRat(
            QLaurent.monomial(triangular(ell + 1)), q_int(ell + 1) * quantum_pow(2, ell + 1)
        ).eval_at(1)
        checks.append((f"log-limit-{ell}", log_term, Fraction(1, (ell + 1) * 2 ** (ell + 1))))
        odd_term = (odd_delta_closed(ell) * (-1) ** ell).eval_at(1) / 2 ** (ell + 1)
        even_double = _double_factorial(2 * ell)
        odd_double = _double_factorial(2 * ell + 1)
        checks.append((f"arctan-limit-{ell}", odd_term, Fraction(even_double, 2 ** (ell + 1) * odd_double)))
    return checks


def _double_factorial(n: int) -> int:
    result = 1
    for k in range(n, 0, -2):
        result *= k
    return result


def _series_verdict(
    identity_id: str,
    params: dict[str, int | str],
    started: float,
    checks: Sequence[tuple[str, Any, Any]],
) -> Verdict:
    failure: str | None = None
    witness: dict[str, str] = {}
    for name, lhs, rhs in checks:
        if isinstance(lhs, QLaurent) and isinstance(rhs, QLaurent):
            exponent = first_exponent_difference(lhs, rhs)
            if exponent is not None:
                failure = f"{name}@{exponent}"
                witness = {"lhs": str(lhs.coefficient(exponent)), "rhs": str(rhs.coefficient(exponent))}
                break
        elif lhs != rhs:
            failure = name
            witness = {"lhs": str(lhs), "rhs": str(rhs)}
            break
    return make_verdict(
        identity_id,
        VerificationMode.Q_SERIES,
        params,
        started,
        first_failure=failure,
        witness=witness,
    )
