"""Builders shared by the record modules."""

from __future__ import annotations

from collections.abc import Callable
from fractions import Fraction
from typing import Any

from qrk.core.exact import QLaurent, QRat
from qrk.core.qkit import q_int, quantum_pow
from qrk.core.series import XSeries, shifted_recip


def qmono(exponent: int, coeff: Any = 1) -> QLaurent:
    return QLaurent.monomial(exponent, coeff)


def inv_qint(n: int) -> QRat:
    """1 / [n]."""
    return QRat(1, q_int(n))


def qpow(a: int, n: int) -> QRat:
    """<a^n> as a QRat."""
    return QRat.of(quantum_pow(a, n))


def series_of(coeff: Callable[[int], Any], order: int) -> XSeries:
    """sum_n coeff(n) x^n."""
    return XSeries.from_coeffs([coeff(n) for n in range(order + 1)], order)


def x_term(k: int, factor: Any, inner: Callable[[int], XSeries], order: int) -> XSeries:
    """factor * x^k * inner, with inner built only to order - k."""
    if k > order:
        return XSeries.zero(order)
    body = inner(order - k).scale(factor)
    return XSeries.from_coeffs([0] * k + list(body.coeffs), order)


def recip(alpha: Any, k: int) -> Callable[[int], XSeries]:
    """Deferred shifted_recip(alpha, k, .)."""
    return lambda order: shifted_recip(alpha, k, order)


def odd_harmonic(n: int) -> Fraction:
    """G_n = 1 + 1/3 + ... over odd denominators <= n."""
    return sum((Fraction(1, j) for j in range(1, n + 1, 2)), Fraction(0))


def harmonic(n: int, skip: int | None = None) -> Fraction:
    """1 + 1/2 + ... + 1/n, omitting multiples of ``skip``."""
    return sum(
        (Fraction(1, j) for j in range(1, n + 1) if skip is None or j % skip),
        Fraction(0),
    )
