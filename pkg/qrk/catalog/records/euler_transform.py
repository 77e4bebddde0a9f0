"""Euler transformation records and the quantized log 2 and pi / 4 series."""

from __future__ import annotations

from typing import Any

from qrk.catalog.record import Q_ORDER, SEED, IdentityRecord, Params, random_rationals, restamp
from qrk.catalog.transforms import euler_transform_check, knopp_examples_check, lemma_sum
from qrk.core.exact import QLaurent
from qrk.schemas.verdict import Verdict, VerificationMode


def transform_sequence(params: Params) -> list[Any]:
    """a_0 = a_1 = 1 followed by three seeded rationals."""
    return [1, 1, *random_rationals(params["seed"], 3)]


def _eq84_check(params: Params) -> Verdict:
    return restamp(euler_transform_check(transform_sequence(params), params["T"]), "eq84", params)


def _lemma_points(params: Params) -> range:
    return range(params["K"] + 1)


RECORDS: list[IdentityRecord] = [
    IdentityRecord(
        id="eq84",
        summary="sum (-q)^k a_k = sum_l (-q)^l (D^l a)_0 / <2^{l+1}>",
        mode=VerificationMode.Q_SERIES,
        defaults={"T": Q_ORDER, "seed": SEED},
        check=_eq84_check,
        tags=("random",),
    ),
    IdentityRecord(
        id="eq88",
        summary="sum_s q^{binomial(s+1,2)} [k+s, s] / <2^{k+s+1}> = 1",
        mode=VerificationMode.Q_SERIES,
        defaults={"T": Q_ORDER, "K": 8},
        lhs=lambda params, k: lemma_sum(k, params["T"]),
        rhs=lambda params, k: QLaurent.one(),
        points=_lemma_points,
    ),
    IdentityRecord(
        id="eq91b",
        summary="sum (-q)^k / [k+1] equals its Euler transform and Log(1 + z) at z = q",
        mode=VerificationMode.Q_SERIES,
        defaults={"T": Q_ORDER},
        check=lambda params: restamp(knopp_examples_check(params["T"], family="log"), "eq91b", params),
    ),
    IdentityRecord(
        id="eq92b",
        summary="sum (-Q^2)^k / [2k+1]_Q equals its Jackson integral and its Euler transform",
        mode=VerificationMode.Q_SERIES,
        defaults={"T": Q_ORDER},
        check=lambda params: restamp(
            knopp_examples_check(params["T"], family="arctan"), "eq92b", params
        ),
    ),
]
