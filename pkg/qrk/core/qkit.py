"""q-integers, q-binomials, Pochhammer symbols and quantum powers."""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import Any

from qrk.core.exact import QLaurent, QRat, qrat_normalize
from qrk.errors import PreconditionError, ZeroDenominatorError

logger = logging.getLogger(__name__)


def triangular(n: int) -> int:
    """n(n+1)/2, so triangular(k - 1) is binomial(k, 2)."""
    return n * (n + 1) // 2


def q_int(n: int, r: int = 1, var: str = "q") -> QLaurent:
    """[n]_{q^r} = 1 + q^r + ... + q^{r(n-1)}; [-n]_Q = -Q^{-n} [n]_Q."""
    if r == 0:
        raise PreconditionError("q_int base exponent r must be nonzero")
    if n == 0:
        return QLaurent.zero(var)
    if n < 0:
        return -(q_int(-n, r, var).shift(r * n))
    if r > 0:
        values: list[int] = [0] * (r * (n - 1) + 1)
        for i in range(n):
            values[r * i] = 1
        return QLaurent(values, 0, var)
    return q_int(n, -r, var).subs(-1)


def q_factorial(n: int, r: int = 1, var: str = "q") -> QLaurent:
    """[n]_{q^r}! = [1][2]...[n] in base q^r; [0]! = 1."""
    if n < 0:
        raise PreconditionError("q_factorial requires n >= 0")
    result = QLaurent.one(var)
    for k in range(2, n + 1):
        result = result * q_int(k, r, var)
    return result


def double_q_factorial(n: int, r: int = 1, var: str = "q") -> QLaurent:
    """[n]!! = [n][n-2]... down to [1] or [2], in base q^r."""
    result = QLaurent.one(var)
    for k in range(n, 0, -2):
        result = result * q_int(k, r, var)
    return result


@lru_cache(maxsize=None)
def _pascal_row(n: int) -> tuple[QLaurent, ...]:
    if n == 0:
        return (QLaurent.one(),)
    prev = _pascal_row(n - 1)
    row = [QLaurent.one()]
    for k in range(1, n):
        row.append(prev[k - 1] + prev[k].shift(k))
    row.append(QLaurent.one())
    return tuple(row)


def q_binomial_poly(n: int, k: int, var: str = "q") -> QLaurent:
    """[n, k] for 0 <= k <= n as an integer polynomial, from cached q-Pascal rows."""
    if n < 0 or k < 0 or k > n:
        raise PreconditionError("q_binomial_poly requires 0 <= k <= n")
    value = _pascal_row(n)[k]
    return value if var == "q" else value.with_var(var)


def q_binomial(n: int, k: int, var: str = "q") -> QRat:
    """[n, k] = [n][n-1]...[n-k+1] / [k]!; zero for k < 0."""
    if k < 0:
        return QRat.zero(var)
    if n >= 0:
        if k > n:
            return QRat.zero(var)
        return QRat.of(q_binomial_poly(n, k, var))
    numerator = QLaurent.one(var)
    for i in range(k):
        numerator = numerator * q_int(n - i, 1, var)
    return qrat_normalize(numerator, q_factorial(k, var=var))


def poch(a: Any, b: Any, n: int) -> QRat:
    """(a; b)_n = prod_{s<n} (1 - a b^s); negative n via 1 / prod_{s=1}^{-n} (1 - a b^{-s})."""
    a_r = QRat.of(a)
    b_r = QRat.of(b)
    one = QRat.one(a_r.var if not a_r.is_constant() else b_r.var)
    if n >= 0:
        result = one
        power = one
        for _ in range(n):
            result = result * (one - a_r * power)
            power = power * b_r
        return result
    if b_r.is_zero():
        raise ZeroDenominatorError("(a; b)_n with negative n needs b != 0")
    inverse_b = one / b_r
    denominator = one
    power = inverse_b
    for _ in range(-n):
        factor = one - a_r * power
        if factor.is_zero():
            raise ZeroDenominatorError(f"vanishing factor in ({a_r}; {b_r})_{n}")
        denominator = denominator * factor
        power = power * inverse_b
    return one / denominator


def shifted_pow(u: Any, v: Any, k: int, var: str = "q") -> QRat:
    """(u (+) v)^k = prod_{i<k} (u + q^i v)."""
    if k < 0:
        raise PreconditionError("shifted_pow requires k >= 0")
    u_r = QRat.of(u, var)
    v_r = QRat.of(v, var)
    result = QRat.one(var)
    for i in range(k):
        result = result * (u_r + v_r * QLaurent.monomial(i, 1, var))
    return result


@lru_cache(maxsize=None)
def _quantum_pow(a: int, n: int) -> QLaurent:
    result = QLaurent.one()
    for k in range(1, n + 1):
        result = result * q_int(a, k)
    return result


def quantum_pow(a: int, n: int, var: str = "q") -> QLaurent:
    """<a^n> = prod_{k=1}^n [a]_{q^k}."""
    if a < 0 or n < 0:
        raise PreconditionError("quantum_pow requires a >= 0 and n >= 0")
    value = _quantum_pow(a, n)
    return value if var == "q" else value.with_var(var)


def quantum_pow_inf(a: int, q_order: int, var: str = "q") -> QLaurent:
    """<a^inf> = prod_{k>=1} [a]_{q^k}, truncated after q^{q_order}."""
    if a < 1 or q_order < 0:
        raise PreconditionError("quantum_pow_inf requires a >= 1 and q_order >= 0")
    # factors with k > q_order are 1 modulo q^{q_order + 1}
    result = QLaurent.one(var)
    for k in range(1, q_order + 1):
        result = (result * q_int(a, k, var)).truncate(q_order)
    return result


def gauss_sum(n: int) -> QRat:
    """Alternating row sum sum_l [n, l] (-1)^l."""
    return QRat.of(sum(((-1) ** k * c for k, c in enumerate(_pascal_row(n))), QLaurent.zero()))
