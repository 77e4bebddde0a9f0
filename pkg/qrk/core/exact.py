"""Exact rationals, Laurent polynomials and rational functions in one variable."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction
from math import gcd, lcm
from typing import Any

from sympy.polys.domains import ZZ
from sympy.polys.euclidtools import dup_inner_gcd

from qrk.errors import (
    EvaluationError,
    InexactDivisionError,
    VariableMismatchError,
    ZeroDenominatorError,
)

logger = logging.getLogger(__name__)

BigRat = Fraction
Scalar = int | Fraction


# ── Scalars ──


def to_scalar(value: Any) -> Scalar:
    """Canonical scalar: int when integral, reduced Fraction otherwise."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"Expected int or Fraction, got {type(value).__name__}")


def _canon(value: Scalar) -> Scalar:
    if type(value) is Fraction and value.denominator == 1:
        return value.numerator
    return value


def _div_scalar(a: Scalar, b: Scalar) -> Scalar:
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return _canon(Fraction(a) / b)


def _render_scalar(value: Scalar) -> str:
    return str(value)


# ── Laurent polynomials ──


class QLaurent:
    """Immutable Laurent polynomial: coefficients ascending from ``low``.

    The first and last stored coefficients are nonzero; zero is the empty tuple
    with ``low == 0``.
    """

    __slots__ = ("low", "coeffs", "var")

    low: int
    coeffs: tuple[Scalar, ...]
    var: str

    def __init__(self, coeffs: Iterable[Any] = (), low: int = 0, var: str = "q") -> None:
        self._assign([to_scalar(c) for c in coeffs], low, var)

    @classmethod
    def _build(cls, values: list[Scalar], low: int, var: str) -> QLaurent:
        obj = cls.__new__(cls)
        obj._assign(values, low, var)
        return obj

    def _assign(self, values: list[Scalar], low: int, var: str) -> None:
        start, end = 0, len(values)
        while start < end and values[start] == 0:
            start += 1
        while end > start and values[end - 1] == 0:
            end -= 1
        if start == end:
            low, stored = 0, ()
        else:
            low, stored = low + start, tuple(_canon(v) for v in values[start:end])
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", stored)
        object.__setattr__(self, "var", var)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("QLaurent is immutable")

    # ========== Constructors ==========

    @classmethod
    def zero(cls, var: str = "q") -> QLaurent:
        return cls._build([], 0, var)

    @classmethod
    def one(cls, var: str = "q") -> QLaurent:
        return cls._build([1], 0, var)

    @classmethod
    def constant(cls, value: Any, var: str = "q") -> QLaurent:
        return cls._build([to_scalar(value)], 0, var)

    @classmethod
    def monomial(cls, exponent: int, coeff: Any = 1, var: str = "q") -> QLaurent:
        return cls._build([to_scalar(coeff)], exponent, var)

    @classmethod
    def from_dict(cls, terms: Mapping[int, Any], var: str = "q") -> QLaurent:
        if not terms:
            return cls.zero(var)
        low, high = min(terms), max(terms)
        values: list[Scalar] = [0] * (high - low + 1)
        for exponent, coeff in terms.items():
            values[exponent - low] += to_scalar(coeff)
        return cls._build(values, low, var)

    # ========== Queries ==========

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def valuation(self) -> int | None:
        return self.low if self.coeffs else None

    def degree(self) -> int | None:
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, exponent: int) -> Scalar:
        index = exponent - self.low
        if 0 <= index < len(self.coeffs):
            return self.coeffs[index]
        return 0

    def items(self) -> Iterator[tuple[int, Scalar]]:
        for i, c in enumerate(self.coeffs):
            if c != 0:
                yield self.low + i, c

    def constant_value(self) -> Scalar:
        return self.coefficient(0)

    # ========== Arithmetic ==========

    def _unify(self, other: QLaurent) -> str:
        if self.var == other.var or other.is_constant():
            return self.var
        if self.is_constant():
            return other.var
        raise VariableMismatchError(f"cannot combine polynomials in {self.var} and {other.var}")

    def _lift(self, other: Any) -> QLaurent | None:
        if isinstance(other, QLaurent):
            return other
        if isinstance(other, (int, Fraction)):
            return QLaurent._build([to_scalar(other)], 0, self.var)
        return None

    def _combine(self, other: QLaurent, sign: int) -> QLaurent:
        var = self._unify(other)
        if not other.coeffs:
            return QLaurent._build(list(self.coeffs), self.low, var)
        if not self.coeffs:
            return QLaurent._build([sign * c for c in other.coeffs], other.low, var)
        low = min(self.low, other.low)
        high = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out: list[Scalar] = [0] * (high - low)
        offset = self.low - low
        for i, c in enumerate(self.coeffs):
            out[offset + i] = c
        offset = other.low - low
        if sign > 0:
            for i, c in enumerate(other.coeffs):
                out[offset + i] += c
        else:
            for i, c in enumerate(other.coeffs):
                out[offset + i] -= c
        return QLaurent._build(out, low, var)

    def __add__(self, other: Any) -> QLaurent:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self._combine(lifted, 1)

    __radd__ = __add__

    def __sub__(self, other: Any) -> QLaurent:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return self._combine(lifted, -1)

    def __rsub__(self, other: Any) -> QLaurent:
        lifted = self._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted._combine(self, -1)

    def __neg__(self) -> QLaurent:
        return QLaurent._build([-c for c in self.coeffs], self.low, self.var)

    def __mul__(self, other: Any) -> QLaurent:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QLaurent):
            return NotImplemented
        var = self._unify(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QLaurent.zero(var)
        if len(a) < len(b):
            a, b = b, a
        out: list[Scalar] = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb == 0:
                continue
            for i, ca in enumerate(a):
                out[i + j] += ca * cb
        return QLaurent._build(out, self.low + other.low, var)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> QLaurent:
        if exponent < 0:
            raise ValueError("QLaurent powers must be nonnegative; use QRat for inverses")
        result = QLaurent.one(self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Any) -> QLaurent:
        factor = to_scalar(factor)
        if factor == 0:
            return QLaurent.zero(self.var)
        return QLaurent._build([c * factor for c in self.coeffs], self.low, self.var)

    def shift(self, k: int) -> QLaurent:
        """Multiply by var^k."""
        return QLaurent._build(list(self.coeffs), self.low + k, self.var)

    def subs(self, power: int, var: str | None = None) -> QLaurent:
        """Substitute var -> var'^power (power may be negative)."""
        var = var or self.var
        if not self.coeffs:
            return QLaurent.zero(var)
        if power == 0:
            return QLaurent.constant(sum(self.coeffs, start=0), var)
        return QLaurent.from_dict({e * power: c for e, c in self.items()}, var)

    def truncate(self, max_exponent: int) -> QLaurent:
        """Drop every term with exponent above ``max_exponent``."""
        keep = max_exponent - self.low + 1
        if keep >= len(self.coeffs):
            return self
        return QLaurent._build(list(self.coeffs[: max(keep, 0)]), self.low, self.var)

    def with_var(self, var: str) -> QLaurent:
        return QLaurent._build(list(self.coeffs), self.low, var)

    def eval_at(self, value: Any) -> Fraction:
        value = Fraction(value)
        if not self.coeffs:
            return Fraction(0)
        if value == 0:
            if self.low < 0:
                raise EvaluationError(f"{self} has a pole at {self.var} = 0")
            return Fraction(self.coefficient(0))
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc * value**self.low

    # ========== Integer structure ==========

    def integerize(self) -> tuple[Fraction, list[int]]:
        """Split into ``scale * ints`` with ints primitive and the top coefficient positive."""
        denominator = 1
        for c in self.coeffs:
            if isinstance(c, Fraction):
                denominator = lcm(denominator, c.denominator)
        ints = [int(c * denominator) for c in self.coeffs]
        content = 0
        for c in ints:
            content = gcd(content, c)
        if content == 0:
            return Fraction(0), []
        if ints[-1] < 0:
            content = -content
        return Fraction(content, denominator), [c // content for c in ints]

    def content(self) -> Fraction:
        return self.integerize()[0]

    # ========== Protocol ==========

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, QLaurent):
            return NotImplemented
        if self.coeffs != other.coeffs or self.low != other.low:
            return False
        return self.var == other.var or self.is_constant()

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.constant_value())
        return hash((self.low, self.coeffs, self.var))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"QLaurent({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for exponent, coeff in self.items():
            magnitude = abs(coeff)
            if exponent == 0:
                body = _render_scalar(magnitude)
            else:
                mono = self.var if exponent == 1 else f"{self.var}^{exponent}"
                body = mono if magnitude == 1 else f"{_render_scalar(magnitude)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)


# ── Division and gcd ──


def poly_divmod(a: QLaurent, b: QLaurent) -> tuple[QLaurent, QLaurent]:
    """Divide ``a`` by ``b`` after stripping their monomial factors.

    Returns ``(quotient, remainder)`` with ``a == b * quotient + remainder`` and the
    remainder of smaller span than ``b``.
    """
    if b.is_zero():
        raise ZeroDenominatorError("division by the zero polynomial")
    var = a._unify(b)
    if a.is_zero():
        return QLaurent.zero(var), QLaurent.zero(var)
    num = list(reversed(a.coeffs))
    den = list(reversed(b.coeffs))
    lead = den[0]
    span = len(num) - len(den) + 1
    if span <= 0:
        return QLaurent.zero(var), a.with_var(var)
    quotient: list[Scalar] = [0] * span
    for i in range(span):
        c = _div_scalar(num[i], lead)
        quotient[i] = c
        if c != 0:
            for j in range(1, len(den)):
                num[i + j] -= c * den[j]
        num[i] = 0
    remainder = num[span:]
    q = QLaurent._build(list(reversed(quotient)), a.low - b.low, var)
    r = QLaurent._build(list(reversed(remainder)), a.low, var)
    return q, r


def poly_exact_div(a: QLaurent, b: QLaurent) -> QLaurent:
    """Exact quotient ``a / b``; a nonzero remainder raises InexactDivisionError."""
    quotient, remainder = poly_divmod(a, b)
    if not remainder.is_zero():
        raise InexactDivisionError(remainder)
    return quotient


def _zz_gcd(f: list[int], g: list[int]) -> tuple[list[int], list[int], list[int]]:
    """gcd of ascending integer coefficient lists via sympy's dense gcd kernel."""
    h, cff, cfg = dup_inner_gcd(
        [ZZ(c) for c in reversed(f)],
        [ZZ(c) for c in reversed(g)],
        ZZ,
    )
    return (
        [int(c) for c in reversed(h)],
        [int(c) for c in reversed(cff)],
        [int(c) for c in reversed(cfg)],
    )


def poly_gcd(a: QLaurent, b: QLaurent) -> QLaurent:
    """Primitive integer gcd, positive top coefficient, monomial units removed."""
    var = a._unify(b)
    if a.is_zero() and b.is_zero():
        return QLaurent.zero(var)
    if a.is_zero() or b.is_zero():
        nonzero = b if a.is_zero() else a
        _, ints = nonzero.integerize()
        return QLaurent._build(list(ints), 0, var)
    _, fa = a.integerize()
    _, fb = b.integerize()
    if len(fa) == 1 or len(fb) == 1:
        return QLaurent.one(var)
    h, _, _ = _zz_gcd(fa, fb)
    return QLaurent._build(list(h), 0, var)


# ── Rational functions ──


class QRat:
    """Immutable rational function num/den in canonical form.

    The denominator is a primitive integer polynomial with a nonzero constant term
    and a positive top coefficient, coprime to the numerator.
    """

    __slots__ = ("num", "den")

    num: QLaurent
    den: QLaurent

    def __init__(self, num: Any = 0, den: Any = 1) -> None:
        canonical = qrat_normalize(num, den)
        object.__setattr__(self, "num", canonical.num)
        object.__setattr__(self, "den", canonical.den)

    @classmethod
    def _raw(cls, num: QLaurent, den: QLaurent) -> QRat:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("QRat is immutable")

    @classmethod
    def of(cls, value: Any, var: str = "q") -> QRat:
        """Coerce an int, Fraction, QLaurent or QRat."""
        if isinstance(value, QRat):
            return value
        if isinstance(value, QLaurent):
            return cls._raw(value, QLaurent.one(value.var))
        if isinstance(value, (int, Fraction)):
            return cls._raw(QLaurent.constant(value, var), QLaurent.one(var))
        raise TypeError(f"Cannot coerce {type(value).__name__} to QRat")

    @classmethod
    def zero(cls, var: str = "q") -> QRat:
        return cls._raw(QLaurent.zero(var), QLaurent.one(var))

    @classmethod
    def one(cls, var: str = "q") -> QRat:
        return cls._raw(QLaurent.one(var), QLaurent.one(var))

    @classmethod
    def gen(cls, var: str = "q") -> QRat:
        return cls._raw(QLaurent.monomial(1, 1, var), QLaurent.one(var))

    # ========== Queries ==========

    @property
    def var(self) -> str:
        return self.den.var if self.num.is_constant() else self.num.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(self.num.constant_value())

    def valuation(self) -> int | None:
        """var-adic valuation; the canonical denominator is a unit at var = 0."""
        return self.num.valuation()

    # ========== Arithmetic ==========

    def __add__(self, other: Any) -> QRat:
        try:
            o = QRat.of(other, self.var)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        if self.den == o.den:
            total = self.num + o.num
            if self.den.is_constant():
                return QRat._raw(total, self.den)
            return qrat_normalize(total, self.den)
        num, den = _add_fractions(self.num, self.den, o.num, o.den)
        return qrat_normalize(num, den)

    __radd__ = __add__

    def __neg__(self) -> QRat:
        return QRat._raw(-self.num, self.den)

    def __sub__(self, other: Any) -> QRat:
        try:
            o = QRat.of(other, self.var)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> QRat:
        try:
            o = QRat.of(other, self.var)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> QRat:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QRat.zero(self.var)
            return QRat._raw(self.num.scale(other), self.den)
        try:
            o = QRat.of(other, self.var)
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return QRat.zero(self.var)
        if self.den.is_constant() and o.den.is_constant():
            return QRat._raw(self.num * o.num, self.den)
        if o.is_polynomial() and o.num.is_constant():
            return QRat._raw(self.num.scale(o.num.constant_value()), self.den)
        if self.is_polynomial() and self.num.is_constant():
            return QRat._raw(o.num.scale(self.num.constant_value()), o.den)
        return qrat_normalize(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> QRat:
        try:
            o = QRat.of(other, self.var)
        except TypeError:
            return NotImplemented
        if o.is_zero():
            raise ZeroDenominatorError(f"division of {self} by zero")
        return self * QRat._invert(o)

    def __rtruediv__(self, other: Any) -> QRat:
        try:
            o = QRat.of(other, self.var)
        except TypeError:
            return NotImplemented
        return o / self

    @staticmethod
    def _invert(r: QRat) -> QRat:
        if r.is_zero():
            raise ZeroDenominatorError("reciprocal of zero")
        return qrat_normalize(r.den, r.num)

    def __pow__(self, exponent: int) -> QRat:
        if exponent < 0:
            return QRat._invert(self) ** (-exponent)
        return QRat._raw(self.num**exponent, self.den**exponent)

    def subs(self, power: int, var: str | None = None) -> QRat:
        return qrat_normalize(self.num.subs(power, var), self.den.subs(power, var))

    def eval_at(self, value: Any) -> Fraction:
        denominator = self.den.eval_at(value)
        if denominator == 0:
            raise EvaluationError(f"{self} has a pole at {self.var} = {value}")
        return self.num.eval_at(value) / denominator

    def expand(self, order: int) -> QLaurent:
        """var-adic expansion truncated after var^order."""
        num, den = self.num, self.den
        var = self.var
        if num.is_zero():
            return QLaurent.zero(var)
        depth = order - num.low
        if depth < 0:
            return QLaurent.zero(var)
        if den.is_constant():
            return num.truncate(order).scale(Fraction(1) / Fraction(den.constant_value()))
        d = den.coeffs
        d0 = d[0]
        inverse: list[Scalar] = [_div_scalar(1, d0)]
        for n in range(1, depth + 1):
            acc: Scalar = 0
            for i in range(1, min(n, len(d) - 1) + 1):
                acc += d[i] * inverse[n - i]
            inverse.append(_div_scalar(-acc, d0))
        series = QLaurent._build(inverse, 0, var)
        return (num.with_var(var) * series).truncate(order)

    # ========== Protocol ==========

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, QLaurent)):
            other = QRat.of(other, self.var)
        if not isinstance(other, QRat):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.den.is_constant():
            return hash(self.num)
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"QRat({self})"

    def __str__(self) -> str:
        if self.den.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _as_laurent(value: Any, var: str) -> QLaurent:
    if isinstance(value, QLaurent):
        return value
    if isinstance(value, (int, Fraction)):
        return QLaurent.constant(value, var)
    raise TypeError(f"Cannot coerce {type(value).__name__} to QLaurent")


def _add_fractions(
    n1: QLaurent, d1: QLaurent, n2: QLaurent, d2: QLaurent
) -> tuple[QLaurent, QLaurent]:
    """n1/d1 + n2/d2 over lcm(d1, d2), without reducing the result."""
    g = poly_gcd(d1, d2)
    if g.is_constant():
        return n1 * d2 + n2 * d1, d1 * d2
    c1 = poly_exact_div(d1, g)
    c2 = poly_exact_div(d2, g)
    return n1 * c2 + n2 * c1, d1 * c2


def qrat_normalize(n: Any, d: Any = 1) -> QRat:
    """Reduce ``n / d`` to the unique canonical QRat."""
    if isinstance(n, QRat) or isinstance(d, QRat):
        return QRat.of(n) / QRat.of(d)
    var = "q"
    for part in (n, d):
        if isinstance(part, QLaurent) and not part.is_constant():
            var = part.var
    num = _as_laurent(n, var)
    den = _as_laurent(d, var)
    num._unify(den)
    num, den = num.with_var(var), den.with_var(var)
    if den.is_zero():
        raise ZeroDenominatorError(f"zero denominator for numerator {num}")
    if num.is_zero():
        return QRat._raw(QLaurent.zero(var), QLaurent.one(var))

    # move the monomial factor of the denominator into the numerator
    num = num.shift(-den.low)
    den = den.shift(-den.low)
    if len(den.coeffs) == 1:
        return QRat._raw(num.scale(Fraction(1) / Fraction(den.coeffs[0])), QLaurent.one(var))

    den_scale, den_ints = den.integerize()
    num = num.scale(1 / den_scale)
    num_scale, num_ints = num.integerize()
    den = QLaurent._build(list(den_ints), 0, var)
    if len(num_ints) == 1:
        return QRat._raw(num, den)

    h, cff, cfg = _zz_gcd(num_ints, den_ints)
    if len(h) == 1:
        return QRat._raw(num, den)
    if cfg[-1] < 0:
        cff = [-c for c in cff]
        cfg = [-c for c in cfg]
    content = 0
    for c in cfg:
        content = gcd(content, c)
    reduced_num = QLaurent._build(list(cff), num.low, var).scale(num_scale / content)
    reduced_den = QLaurent._build([c // content for c in cfg], 0, var)
    return QRat._raw(reduced_num, reduced_den)


def qsum(values: Iterable[Any]) -> QRat:
    """Sum rational functions, reducing once at the end."""
    num: QLaurent | None = None
    den: QLaurent | None = None
    var = "q"
    for value in values:
        r = QRat.of(value)
        if r.is_zero():
            continue
        if num is None or den is None:
            num, den = r.num, r.den
            continue
        if r.den == den:
            num = num + r.num
        else:
            num, den = _add_fractions(num, den, r.num, r.den)
    if num is None or den is None:
        return QRat.zero(var)
    if den.is_constant() and den.constant_value() == 1:
        return QRat._raw(num, den)
    return qrat_normalize(num, den)


def eval_at(value: QLaurent | QRat, point: Any) -> Fraction:
    """Exact value at ``point``; poles raise EvaluationError."""
    return value.eval_at(point)


def q(var: str = "q") -> QLaurent:
    """The generator of the Laurent ring."""
    return QLaurent.monomial(1, 1, var)
