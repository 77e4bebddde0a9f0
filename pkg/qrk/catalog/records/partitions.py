"""Partition identities: the Ramanujan generating functions, prime partitions and an exact exponential sum."""

from __future__ import annotations

from qrk.catalog.record import ORDER, IdentityRecord
from qrk.core.partitions import (
    exp_sum_partial,
    exp_sum_tail_bound,
    mod5_sides,
    mod7_sides,
    prime_partition_series,
)
from qrk.schemas.verdict import VerificationMode

RECORDS: list[IdentityRecord] = [
    IdentityRecord(
        id="partitions5",
        summary="sum p(5n+4) x^n = 5 prod (1 - x^{5k})^5 / (1 - x^k)^6",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: mod5_sides(params["T"])[0],
        rhs=lambda params: mod5_sides(params["T"])[1],
    ),
    IdentityRecord(
        id="partitions7",
        summary="sum p(7n+5) x^n = 7 P3/P4 + 49 x P7/P8",
        mode=VerificationMode.X_SERIES,
        defaults={"T": ORDER},
        lhs=lambda params: mod7_sides(params["T"])[0],
        rhs=lambda params: mod7_sides(params["T"])[1],
    ),
    IdentityRecord(
        id="prime-partition",
        summary="prod_p 1 / (1 - x^p) against 1 + sum_k x^{P_k} / prod_{i<=k} (1 - x^i); fails at n = 21",
        mode=VerificationMode.KNOWN_FALSE,
        defaults={"T": 25},
        lhs=lambda params: prime_partition_series(params["T"])[0],
        rhs=lambda params: prime_partition_series(params["T"])[1],
        expected=(21, 30, 31),
        start=2,
    ),
    IdentityRecord(
        id="exp-sum-zero",
        summary="sum_k (-1)^k ((2k+1)^3 + (2k+1)^2) / k! = 0, certified by a rational tail bound",
        mode=VerificationMode.NUMERIC_BOUND,
        defaults={"K": 60, "digits": 40},
        lhs=lambda params: exp_sum_partial(params["K"]),
        rhs=lambda params: exp_sum_tail_bound(params["K"]),
        size="K",
    ),
]
