"""Partition numbers and Ramanujan-style generating-function checks."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from sympy import primerange

from qrk.core.reporting import make_verdict, start_timer
from qrk.core.series import XSeries, first_difference, merge_exponents, product_expand
from qrk.errors import PreconditionError
from qrk.schemas.verdict import Verdict, VerificationMode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PartitionTable:
    """p(0..max_n) from Euler's pentagonal recurrence."""

    max_n: int
    values: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        return self.values[n]

    @classmethod
    def build(cls, max_n: int) -> PartitionTable:
        if max_n < 0:
            raise PreconditionError("partition tables need max_n >= 0")
        p = [1] + [0] * max_n
        for n in range(1, max_n + 1):
            total = 0
            j = 1
            while True:
                first = j * (3 * j - 1) // 2
                if first > n:
                    break
                sign = 1 if j % 2 else -1
                total += sign * p[n - first]
                second = j * (3 * j + 1) // 2
                if second <= n:
                    total += sign * p[n - second]
                j += 1
            p[n] = total
        return cls(max_n=max_n, values=tuple(p))


@lru_cache(maxsize=8)
def partition_table(max_n: int) -> PartitionTable:
    return PartitionTable.build(max_n)


def partition_count(n: int) -> int:
    """p(n); p(n) = 0 for n < 0."""
    if n < 0:
        return 0
    return partition_table(max(n, 256)).values[n]


# ── Ramanujan congruences ──


def _compare_series(
    identity_id: str, lhs: XSeries, rhs: XSeries, order: int, started: float, start: int = 0
) -> Verdict:
    n = first_difference(lhs, rhs, start)
    witness = {} if n is None else {"lhs": str(lhs[n]), "rhs": str(rhs[n])}
    return make_verdict(
        identity_id,
        VerificationMode.X_SERIES,
        {"T": order},
        started,
        first_failure=n,
        witness=witness,
    )


def mod5_sides(order: int) -> tuple[XSeries, XSeries]:
    """sum p(5n+4) x^n and 5 prod (1-x^{5k})^5 / prod (1-x^k)^6."""
    table = partition_table(5 * order + 4)
    lhs = XSeries.from_coeffs([table[5 * n + 4] for n in range(order + 1)], order)
    exponents = merge_exponents(
        {k: -6 for k in range(1, order + 1)},
        {5 * k: 5 for k in range(1, order // 5 + 1)},
    )
    return lhs, product_expand(exponents, order).scale(5)


def mod7_sides(order: int) -> tuple[XSeries, XSeries]:
    """sum p(7n+5) x^n and 7 P3/P4 + 49 x P7/P8 (P_a^b = prod (1-x^{7k})^a / prod (1-x^k)^b)."""
    table = partition_table(7 * order + 5)
    lhs = XSeries.from_coeffs([table[7 * n + 5] for n in range(order + 1)], order)
    sevens = range(1, order // 7 + 1)
    first = merge_exponents({k: -4 for k in range(1, order + 1)}, {7 * k: 3 for k in sevens})
    second = merge_exponents({k: -8 for k in range(1, order + 1)}, {7 * k: 7 for k in sevens})
    rhs = product_expand(first, order).scale(7) + product_expand(second, order).shift(1).scale(49)
    return lhs, rhs


def ramanujan_mod5_check(order: int) -> Verdict:
    started = start_timer()
    lhs, rhs = mod5_sides(order)
    return _compare_series("partitions5", lhs, rhs, order, started)


def ramanujan_mod7_check(order: int) -> Verdict:
    started = start_timer()
    logger.warning("using the fourth-power denominator prod (1 - x^k)^4 for the mod-7 identity")
    lhs, rhs = mod7_sides(order)
    return _compare_series("partitions7", lhs, rhs, order, started)


# ── Prime partitions ──


def prime_partition_series(order: int) -> tuple[XSeries, XSeries]:
    """Partitions into primes against 1 + sum_k x^{P_k} / prod_{i<=k} (1 - x^i).

    P_k is the sum of the first k primes.
    """
    primes = list(primerange(2, order + 1))
    lhs = product_expand({p: -1 for p in primes}, order)
    rhs = XSeries.constant(1, order)
    prefix = 0
    for k, p in enumerate(primes, start=1):
        prefix += p
        if prefix > order:
            break
        rhs = rhs + product_expand({i: -1 for i in range(1, k + 1)}, order).shift(prefix)
    return lhs, rhs


def prime_partition_scan(order: int) -> tuple[int, int, int] | None:
    """First n in 2..order with c_n != d_n, as (n, c_n, d_n)."""
    lhs, rhs = prime_partition_series(order)
    n = first_difference(lhs, rhs, start=2)
    if n is None:
        return None
    logger.info("prime partition identity breaks at n=%d", n)
    return n, int(lhs[n].constant_value()), int(rhs[n].constant_value())


# ── Exponential sum ──


def exp_sum_partial(terms: int) -> Fraction:
    """sum_{k=0}^{K} (-1)^k ((2k+1)^3 + (2k+1)^2) / k!."""
    total = Fraction(0)
    for k in range(terms + 1):
        odd = 2 * k + 1
        total += Fraction((-1) ** k * (odd**3 + odd**2), factorial(k))
    return total


def exp_sum_tail_bound(terms: int) -> Fraction:
    """2 ((2K+3)^3 + (2K+3)^2) / K!, which bounds |S_K| for K >= 10."""
    odd = 2 * terms + 3
    return Fraction(2 * (odd**3 + odd**2), factorial(terms))


def exp_sum_certify(terms: int = 60, digits: int = 40) -> Verdict:
    """Certify |S_K| <= tail bound and |S_K| < 10^-digits."""
    started = start_timer()
    if terms < 10:
        raise PreconditionError("the tail bound holds for K >= 10")
    partial = exp_sum_partial(terms)
    bound = exp_sum_tail_bound(terms)
    failure: str | None = None
    if abs(partial) > bound:
        failure = "tail-bound"
    elif abs(partial) >= Fraction(1, 10**digits):
        failure = "digits"
    witness = {} if failure is None else {"partial": str(partial), "bound": str(bound)}
    return make_verdict(
        "exp-sum-zero",
        VerificationMode.NUMERIC_BOUND,
        {"K": terms, "digits": digits},
        started,
        first_failure=failure,
        witness=witness,
    )
