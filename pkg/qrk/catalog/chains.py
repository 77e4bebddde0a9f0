"""Mechanical checks that one catalogued identity is the q-derivative of another."""

from __future__ import annotations

import logging

from qrk.catalog.records.logarithms import eq33_lhs, eq33_rhs, eq35_lhs, eq35_rhs
from qrk.catalog.records.symmetric import eq14_rhs, eq26_lhs, eq26_rhs
from qrk.config import get_settings
from qrk.core.reporting import make_verdict, start_timer
from qrk.core.series import XSeries, first_difference, q_derivative
from qrk.errors import PreconditionError
from qrk.schemas.verdict import Verdict, VerificationMode

logger = logging.getLogger(__name__)


def _even_powers(order: int) -> XSeries:
    return XSeries.from_coeffs([0 if n % 2 else 1 for n in range(order + 1)], order)


def derivation_chain_checks(order: int | None = None, seed: int | None = None) -> list[Verdict]:
    """q-differentiate both sides of eq26 and eq35 and compare with eq14 and eq33 at order T - 1."""
    settings = get_settings()
    order = settings.default_order if order is None else order
    seed = settings.seed if seed is None else seed
    if order < 1:
        raise PreconditionError("derivation checks need T >= 1")
    lower = {"T": order - 1, "seed": seed}
    full = {"T": order, "seed": seed}
    chains = [
        (
            "eq26->eq14",
            [
                (q_derivative(eq26_lhs(full)), _even_powers(order - 1)),
                (q_derivative(eq26_rhs(full)), eq14_rhs(lower)),
            ],
        ),
        (
            "eq35->eq33",
            [
                (q_derivative(eq35_lhs(full)), eq33_lhs(lower)),
                (q_derivative(eq35_rhs(full)), eq33_rhs(lower)),
            ],
        ),
    ]
    verdicts = []
    for chain_id, sides in chains:
        started = start_timer()
        failure: str | None = None
        witness: dict[str, str] = {}
        for side, (derived, expected) in zip(("lhs", "rhs"), sides, strict=True):
            n = first_difference(derived, expected)
            if n is not None:
                failure = f"{side}@{n}"
                witness = {"derived": str(derived[n]), "expected": str(expected[n])}
                break
        verdicts.append(
            make_verdict(
                chain_id,
                VerificationMode.X_SERIES,
                {"T": order, "seed": seed},
                started,
                first_failure=failure,
                witness=witness,
            )
        )
    return verdicts
