"""Truncated power series in x with rational-function coefficients in q."""

from __future__ import annotations

import logging
from collections.abc import Callable, Iterable, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from qrk.config import get_settings
from qrk.core.exact import QLaurent, QRat, qsum
from qrk.core.qkit import q_binomial_poly, q_int
from qrk.errors import (
    PreconditionError,
    TruncationError,
    ValuationError,
    ZeroDenominatorError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class XSeries:
    """sum_{n<=T} c_n x^n + O(x^{T+1}); exactly T+1 coefficients are stored."""

    coeffs: tuple[QRat, ...]

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise PreconditionError("an XSeries needs at least one coefficient")

    # ========== Constructors ==========

    @classmethod
    def from_coeffs(cls, values: Iterable[Any], order: int) -> XSeries:
        """Pad with zeros (or truncate) to exactly ``order + 1`` coefficients."""
        if order < 0:
            raise PreconditionError("series order must be nonnegative")
        coeffs = [QRat.of(v) for v in values][: order + 1]
        coeffs.extend(QRat.zero() for _ in range(order + 1 - len(coeffs)))
        return cls(tuple(coeffs))

    @classmethod
    def zero(cls, order: int) -> XSeries:
        return cls.from_coeffs((), order)

    @classmethod
    def constant(cls, value: Any, order: int) -> XSeries:
        return cls.from_coeffs([value], order)

    @classmethod
    def monomial(cls, n: int, order: int, coeff: Any = 1) -> XSeries:
        """coeff * x^n; zero when n exceeds the order."""
        if n < 0:
            raise PreconditionError("x exponents must be nonnegative")
        values: list[Any] = [0] * (order + 1)
        if n <= order:
            values[n] = coeff
        return cls.from_coeffs(values, order)

    @classmethod
    def geometric(cls, order: int, ratio: Any = 1) -> XSeries:
        """1 / (1 - ratio * x)."""
        r = QRat.of(ratio)
        values = [QRat.one()]
        for _ in range(order):
            values.append(values[-1] * r)
        return cls.from_coeffs(values, order)

    # ========== Queries ==========

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, n: int) -> QRat:
        if n < 0:
            return QRat.zero()
        if n > self.order:
            raise TruncationError(f"coefficient of x^{n} is beyond the truncation order {self.order}")
        return self.coeffs[n]

    __getitem__ = coefficient

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, None when zero to this order."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n
        return None

    def is_zero(self) -> bool:
        return self.valuation() is None

    # ========== Arithmetic ==========

    def _pair(self, other: XSeries) -> tuple[tuple[QRat, ...], tuple[QRat, ...], int]:
        order = min(self.order, other.order)
        return self.coeffs[: order + 1], other.coeffs[: order + 1], order

    def __add__(self, other: Any) -> XSeries:
        if not isinstance(other, XSeries):
            try:
                other = XSeries.constant(other, self.order)
            except TypeError:
                return NotImplemented
        a, b, _ = self._pair(other)
        return XSeries(tuple(x + y for x, y in zip(a, b, strict=True)))

    __radd__ = __add__

    def __neg__(self) -> XSeries:
        return XSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Any) -> XSeries:
        if not isinstance(other, XSeries):
            try:
                other = XSeries.constant(other, self.order)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> XSeries:
        return (-self) + other

    def __mul__(self, other: Any) -> XSeries:
        if isinstance(other, XSeries):
            return series_mul(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> XSeries:
        if isinstance(other, XSeries):
            return series_mul(self, series_recip(other))
        divisor = QRat.of(other)
        if divisor.is_zero():
            raise ZeroDenominatorError("series divided by zero")
        return self.scale(1 / divisor)

    def __pow__(self, exponent: int) -> XSeries:
        if exponent < 0:
            return series_recip(self) ** (-exponent)
        result = XSeries.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = series_mul(result, base)
            exponent >>= 1
            if exponent:
                base = series_mul(base, base)
        return result

    def scale(self, factor: Any) -> XSeries:
        f = QRat.of(factor)
        return XSeries(tuple(c * f for c in self.coeffs))

    def shift(self, k: int) -> XSeries:
        """Multiply by x^k, keeping the order."""
        if k < 0:
            raise PreconditionError("x shifts must be nonnegative")
        if k == 0:
            return self
        zeros = tuple(QRat.zero() for _ in range(min(k, len(self.coeffs))))
        return XSeries((zeros + self.coeffs)[: len(self.coeffs)])

    def truncate(self, order: int) -> XSeries:
        if order > self.order:
            raise TruncationError(f"cannot extend a series of order {self.order} to {order}")
        return XSeries(self.coeffs[: order + 1])

    def specialize(self, value: Any) -> XSeries:
        """Evaluate every coefficient at q = value."""
        return XSeries(tuple(QRat.of(c.eval_at(value)) for c in self.coeffs))

    def subs_q(self, power: int, var: str | None = None) -> XSeries:
        return XSeries(tuple(c.subs(power, var) for c in self.coeffs))

    def __str__(self) -> str:
        parts: list[str] = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            text = str(c) if c.is_constant() else f"({c})"
            if n == 0:
                parts.append(text)
                continue
            power = "x" if n == 1 else f"x^{n}"
            parts.append(power if c == 1 else f"{text}*{power}")
        parts.append(f"O(x^{self.order + 1})")
        return " + ".join(parts)


# ── Core series operations ──


def series_mul(a: XSeries, b: XSeries) -> XSeries:
    """Cauchy product truncated to min(T_a, T_b)."""
    left, right, order = a._pair(b)
    nonzero_left = [(i, c) for i, c in enumerate(left) if not c.is_zero()]
    out = []
    for n in range(order + 1):
        out.append(qsum(c * right[n - i] for i, c in nonzero_left if i <= n))
    return XSeries(tuple(out))


def series_recip(a: XSeries) -> XSeries:
    """1 / a; a's constant term must be nonzero."""
    a0 = a.coeffs[0]
    if a0.is_zero():
        raise ZeroDenominatorError("series_recip needs a nonzero constant term")
    inverse_a0 = 1 / a0
    out = [inverse_a0]
    nonzero = [(i, c) for i, c in enumerate(a.coeffs) if i > 0 and not c.is_zero()]
    for n in range(1, a.order + 1):
        acc = qsum(c * out[n - i] for i, c in nonzero if i <= n)
        out.append(-(acc * inverse_a0))
    return XSeries(tuple(out))


def series_log(a: XSeries) -> XSeries:
    """Classical logarithm of a series with constant term 1."""
    if a.coeffs[0] != 1:
        raise PreconditionError("series_log needs constant term 1")
    order = a.order
    if order == 0:
        return XSeries.zero(0)
    derivative = XSeries(tuple(a.coeffs[n + 1] * (n + 1) for n in range(order)))
    quotient = series_mul(derivative, series_recip(a.truncate(order - 1)))
    out = [QRat.zero()]
    for n in range(1, order + 1):
        out.append(quotient.coeffs[n - 1] * Fraction(1, n))
    return XSeries(tuple(out))


def series_qlog(z: XSeries) -> XSeries:
    """Log(1 + z) = sum_k (-1)^k z^{k+1} / [k+1]; z's constant term must be 0."""
    if not z.coeffs[0].is_zero():
        raise PreconditionError("series_qlog needs z with zero constant term")
    order = z.order
    total = XSeries.zero(order)
    power = z
    for k in range(order):
        if power.is_zero():
            break
        weight = QRat(QLaurent.constant((-1) ** k), q_int(k + 1))
        total = total + power.scale(weight)
        power = series_mul(power, z)
    return total


def q_derivative(a: XSeries) -> XSeries:
    """x^n -> [n] x^{n-1}; the result has order T - 1."""
    if a.order < 1:
        raise PreconditionError("q_derivative needs a series of order >= 1")
    return XSeries(tuple(a.coeffs[n + 1] * q_int(n + 1) for n in range(a.order)))


def jackson_integral(a: XSeries) -> XSeries:
    """x^n -> x^{n+1} / [n+1]; the result has order T + 1."""
    out = [QRat.zero()]
    for n, c in enumerate(a.coeffs):
        out.append(c / q_int(n + 1))
    return XSeries(tuple(out))


def subst_qx(a: XSeries, power: int = 1) -> XSeries:
    """f(x) -> f(q^power x)."""
    return XSeries(
        tuple(c * QLaurent.monomial(n * power) for n, c in enumerate(a.coeffs))
    )


def product_expand(exponents: Mapping[int, int], order: int) -> XSeries:
    """prod_k (1 - x^k)^{e_k} truncated at x^order; negative e_k divide."""
    values = [0] * (order + 1)
    values[0] = 1
    for k, e in sorted(exponents.items()):
        if k < 1:
            raise PreconditionError("product_expand exponents are indexed by k >= 1")
        if k > order or e == 0:
            continue
        if e > 0:
            for _ in range(e):
                for n in range(order, k - 1, -1):
                    values[n] -= values[n - k]
        else:
            # reciprocal of (1 - x^k): b_n = a_n + b_{n-k}
            for _ in range(-e):
                for n in range(k, order + 1):
                    values[n] += values[n - k]
    return XSeries.from_coeffs(values, order)


def merge_exponents(*parts: Mapping[int, int]) -> dict[int, int]:
    """Combine product_expand exponent maps."""
    merged: dict[int, int] = {}
    for part in parts:
        for k, e in part.items():
            merged[k] = merged.get(k, 0) + e
    return {k: e for k, e in merged.items() if e}


# ── Shifted factorial series ──


def shifted_series(u: Any, v: Any, k: int, order: int) -> XSeries:
    """prod_{i<k} (u + q^i v x)."""
    u_r, v_r = QRat.of(u), QRat.of(v)
    values = [QRat.one()] + [QRat.zero()] * order
    for i in range(k):
        step = v_r * QLaurent.monomial(i)
        for n in range(order, 0, -1):
            values[n] = values[n] * u_r + values[n - 1] * step
        values[0] = values[0] * u_r
    return XSeries(tuple(values))


def shifted_recip(alpha: Any, k: int, order: int) -> XSeries:
    """1 / prod_{i<k} (1 - q^i alpha x) = sum_n alpha^n [k-1+n, n] x^n."""
    if k < 0:
        raise PreconditionError("shifted_recip requires k >= 0")
    if k == 0:
        return XSeries.constant(1, order)
    a = QRat.of(alpha)
    values = []
    power = QRat.one()
    for n in range(order + 1):
        values.append(power * q_binomial_poly(k - 1 + n, n))
        power = power * a
    return XSeries(tuple(values))


# ── Adaptive infinite sums ──


def _term_cap(order: int, cap: int | None) -> int:
    if cap is not None:
        return cap
    return get_settings().inf_cap_factor * max(order, 1) + 10


def truncated_sum(
    term: Callable[[int], XSeries],
    order_bound: Callable[[int], int],
    order: int,
    start: int = 0,
    cap: int | None = None,
) -> XSeries:
    """sum_{k>=start} term(k), keeping terms whose declared minimal x-order is <= order.

    ``order_bound(k)`` must strictly increase; a term whose observed valuation is
    below its declared bound aborts the expansion.
    """
    limit = _term_cap(order, cap)
    total = XSeries.zero(order)
    previous: int | None = None
    k = start
    while True:
        bound = order_bound(k)
        if previous is not None and bound <= previous:
            raise ValuationError(f"term orders do not increase at k={k}: {previous} then {bound}")
        if bound > order:
            break
        if k - start >= limit:
            raise ValuationError(f"infinite sum exceeded {limit} terms")
        value = term(k)
        observed = value.valuation()
        if observed is not None and observed < bound:
            raise ValuationError(f"term k={k} has order {observed} below its bound {bound}")
        total = total + value
        previous = bound
        k += 1
    logger.debug("truncated_sum kept %d terms at order %d", k - start, order)
    return total


def truncated_q_sum(
    term: Callable[[int], QRat],
    order_bound: Callable[[int], int],
    q_order: int,
    start: int = 0,
    cap: int | None = None,
) -> QLaurent:
    """q-adic analogue of truncated_sum, expanded after q^{q_order}."""
    limit = _term_cap(q_order, cap)
    total: QLaurent | None = None
    previous: int | None = None
    k = start
    while True:
        bound = order_bound(k)
        if previous is not None and bound <= previous:
            raise ValuationError(f"term orders do not increase at k={k}: {previous} then {bound}")
        if bound > q_order:
            break
        if k - start >= limit:
            raise ValuationError(f"infinite sum exceeded {limit} terms")
        value = term(k)
        observed = value.valuation()
        if observed is not None and observed < bound:
            raise ValuationError(f"term k={k} has order {observed} below its bound {bound}")
        expanded = value.expand(q_order)
        total = expanded if total is None else total + expanded
        previous = bound
        k += 1
    logger.debug("truncated_q_sum kept %d terms at q-order %d", k - start, q_order)
    return total if total is not None else QLaurent.zero()


# ── Jackson sum on [0, 1] ──


def jackson_sum_01(
    numer: Sequence[Any],
    denom: Sequence[Any],
    base_power: int,
    q_order: int,
) -> QLaurent:
    """(1 - Q) sum_j Q^j f(Q^j) with f = numer(t) / denom(t), truncated after Q^{q_order}.

    ``numer`` and ``denom`` are ascending coefficient lists in t whose entries are
    rational functions of q; q is replaced by Q^{base_power}.
    """
    var = "Q"
    nums = [QRat.of(c).subs(base_power, var) for c in numer]
    dens = [QRat.of(c).subs(base_power, var) for c in denom]
    if not dens or dens[0].is_zero() or dens[0].valuation() != 0:
        raise PreconditionError("jackson_sum_01 needs a denominator with unit constant term")
    for c in (*nums, *dens):
        v = c.valuation()
        if v is not None and v < 0:
            raise PreconditionError("jackson_sum_01 coefficients must have nonnegative valuation")

    total = QLaurent.zero(var)
    for j in range(q_order + 1):
        numerator = qsum(c * QLaurent.monomial(i * j, 1, var) for i, c in enumerate(nums))
        denominator = qsum(c * QLaurent.monomial(i * j, 1, var) for i, c in enumerate(dens))
        if denominator.is_zero():
            raise ZeroDenominatorError(f"integrand has a pole at t = Q^{j}")
        term = numerator / denominator * QLaurent.monomial(j, 1, var)
        total = total + term.expand(q_order).with_var(var)
    return (total * QLaurent([1, -1], 0, var)).truncate(q_order)


def first_difference(a: XSeries, b: XSeries, start: int = 0) -> int | None:
    """Smallest n >= start (within the common order) where the coefficients differ."""
    order = min(a.order, b.order)
    for n in range(start, order + 1):
        if a.coeffs[n] != b.coeffs[n]:
            return n
    return None


def first_exponent_difference(a: QLaurent, b: QLaurent) -> int | None:
    """Smallest exponent where two q-expansions disagree."""
    difference = a - b
    return difference.valuation()
