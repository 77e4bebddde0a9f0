"""Tests for partition numbers, the Ramanujan congruences and the exponential sum."""

from fractions import Fraction
import pytest
from sympy.utilities.iterables import partitions

from qrk.core.exact import QRat
from qrk.core.partitions import (
    PartitionTable,
    exp_sum_certify,
    exp_sum_partial,
    exp_sum_tail_bound,
    mod5_sides,
    partition_count,
    partition_table,
    prime_partition_scan,
    ramanujan_mod5_check,
    ramanujan_mod7_check,
)
from qrk.core.series import product_expand
from qrk.errors import PreconditionError
from qrk.schemas.verdict import VerdictStatus, VerificationMode


# ─── Helpers ──────────────────────────────────────────────────────────────────

def _enumerated(n: int) -> int:
    return sum(1 for _ in partitions(n))


# ─── Partition numbers ────────────────────────────────────────────────────────

class TestPartitionCount:
    def test_matches_enumeration(self):
        for n in range(31):
            assert partition_count(n) == _enumerated(n), n

    def test_matches_euler_product(self):
        series = product_expand({k: -1 for k in range(1, 101)}, 100)
        table = partition_table(100)
        assert list(series.coeffs) == [QRat.of(table[n]) for n in range(101)]

    def test_known_values(self):
        assert partition_count(100) == 190569292
        assert partition_count(-3) == 0

    def test_table_rejects_negative_size(self):
        with pytest.raises(PreconditionError):
            PartitionTable.build(-1)

    def test_divisibility_by_five(self):
        assert all(partition_count(5 * n + 4) % 5 == 0 for n in range(40))


# ─── Ramanujan congruences ────────────────────────────────────────────────────

class TestRamanujan:
    def test_mod5_identity(self):
        verdict = ramanujan_mod5_check(50)
        assert verdict.status == VerdictStatus.PASS
        assert verdict.mode == VerificationMode.X_SERIES
        assert verdict.params == {"T": 50}

    def test_mod7_identity(self):
        assert ramanujan_mod7_check(50).status == VerdictStatus.PASS

    def test_mod5_leading_terms(self):
        lhs, rhs = mod5_sides(3)
        assert list(lhs.coeffs) == [QRat.of(c) for c in (5, 30, 135, 490)]
        assert lhs == rhs


# ─── Prime partitions ─────────────────────────────────────────────────────────

class TestPrimePartitions:
    def test_first_discrepancy(self):
        assert prime_partition_scan(30) == (21, 30, 31)

    def test_agrees_below_discrepancy(self):
        assert prime_partition_scan(20) is None


# ─── Exponential sum ──────────────────────────────────────────────────────────

class TestExpSum:
    def test_partial_sum_is_tiny(self):
        assert abs(exp_sum_partial(60)) < Fraction(1, 10**40)

    def test_tail_bound_dominates(self):
        for terms in range(10, 31):
            assert abs(exp_sum_partial(terms)) <= exp_sum_tail_bound(terms), terms

    def test_certify(self):
        verdict = exp_sum_certify(60, 40)
        assert verdict.status == VerdictStatus.PASS
        assert verdict.params == {"K": 60, "digits": 40}

    def test_certify_reports_missing_digits(self):
        verdict = exp_sum_certify(12, 40)
        assert verdict.status == VerdictStatus.FAIL
        assert verdict.first_failure == "digits"

    def test_certify_needs_enough_terms(self):
        with pytest.raises(PreconditionError):
            exp_sum_certify(5)
