"""One runner per verification mode; each returns a Verdict."""

from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction
from typing import Any

from qrk.catalog.record import IdentityRecord, Params
from qrk.core.exact import QLaurent
from qrk.core.reporting import make_verdict
from qrk.core.series import XSeries, first_difference, first_exponent_difference
from qrk.errors import PreconditionError
from qrk.schemas.verdict import Verdict, VerdictStatus, VerificationMode

logger = logging.getLogger(__name__)


def _sides(record: IdentityRecord) -> tuple[Callable[..., Any], Callable[..., Any]]:
    if record.lhs is None or record.rhs is None:
        raise PreconditionError(f"{record.id} has no builders for mode {record.mode.value}")
    return record.lhs, record.rhs


def _render(value: Any) -> str:
    if isinstance(value, tuple):
        return "; ".join(_render(v) for v in value)
    return str(value)


def run_x_series(record: IdentityRecord, params: Params, started: float) -> Verdict:
    lhs_of, rhs_of = _sides(record)
    lhs: XSeries = lhs_of(params)
    rhs: XSeries = rhs_of(params)
    n = first_difference(lhs, rhs, record.start)
    witness = {} if n is None else {"lhs": str(lhs[n]), "rhs": str(rhs[n])}
    return make_verdict(record.id, record.mode, params, started, first_failure=n, witness=witness)


def run_q_series(record: IdentityRecord, params: Params, started: float) -> Verdict:
    """Compare q-expansions; with points, the failure is reported as point@exponent."""
    lhs_of, rhs_of = _sides(record)
    if record.points is None:
        pairs: list[tuple[Any, QLaurent, QLaurent]] = [(None, lhs_of(params), rhs_of(params))]
    else:
        pairs = [(p, lhs_of(params, p), rhs_of(params, p)) for p in record.points(params)]
    for point, lhs, rhs in pairs:
        exponent = first_exponent_difference(lhs, rhs)
        if exponent is None:
            continue
        failure: int | str = exponent if point is None else f"{_render(point)}@{exponent}"
        witness = {"lhs": str(lhs.coefficient(exponent)), "rhs": str(rhs.coefficient(exponent))}
        return make_verdict(record.id, record.mode, params, started, first_failure=failure, witness=witness)
    return make_verdict(record.id, record.mode, params, started)


def run_pointwise(record: IdentityRecord, params: Params, started: float) -> Verdict:
    """Finite and congruence modes: compare both sides at every point of the range."""
    lhs_of, rhs_of = _sides(record)
    if record.points is None:
        raise PreconditionError(f"{record.id} declares no points")
    for point in record.points(params):
        lhs, rhs = lhs_of(params, point), rhs_of(params, point)
        if lhs != rhs:
            failure = point if isinstance(point, int) else _render(point)
            witness = {"lhs": _render(lhs), "rhs": _render(rhs)}
            return make_verdict(record.id, record.mode, params, started, first_failure=failure, witness=witness)
    return make_verdict(record.id, record.mode, params, started)


def run_numeric_bound(record: IdentityRecord, params: Params, started: float) -> Verdict:
    """Pass iff |lhs| <= rhs, and |lhs| < 10^-digits when digits is given."""
    lhs_of, rhs_of = _sides(record)
    value: Fraction = lhs_of(params)
    bound: Fraction = rhs_of(params)
    failure: str | None = None
    if abs(value) > bound:
        failure = "bound"
    elif "digits" in params and abs(value) >= Fraction(1, 10 ** params["digits"]):
        failure = "digits"
    witness = {} if failure is None else {"lhs": str(value), "rhs": str(bound)}
    return make_verdict(record.id, record.mode, params, started, first_failure=failure, witness=witness)


def run_known_false(record: IdentityRecord, params: Params, started: float) -> Verdict:
    """Confirm the recorded discrepancy; agreement over the whole range is a pass."""
    lhs_of, rhs_of = _sides(record)
    lhs: XSeries = lhs_of(params)
    rhs: XSeries = rhs_of(params)
    n = first_difference(lhs, rhs, record.start)
    if n is None:
        return make_verdict(record.id, record.mode, params, started)
    found = (n, int(lhs[n].constant_value()), int(rhs[n].constant_value()))
    witness = {"lhs": str(found[1]), "rhs": str(found[2])}
    if record.expected is not None and found == record.expected:
        logger.info("%s: recorded discrepancy at n=%d reproduced", record.id, n)
        return make_verdict(
            record.id,
            record.mode,
            params,
            started,
            first_failure=n,
            witness=witness,
            status=VerdictStatus.KNOWN_FALSE_CONFIRMED,
        )
    witness["expected"] = str(record.expected)
    return make_verdict(record.id, record.mode, params, started, first_failure=n, witness=witness)


RUNNERS: dict[VerificationMode, Callable[[IdentityRecord, Params, float], Verdict]] = {
    VerificationMode.X_SERIES: run_x_series,
    VerificationMode.Q_SERIES: run_q_series,
    VerificationMode.FINITE: run_pointwise,
    VerificationMode.CONGRUENCE: run_pointwise,
    VerificationMode.NUMERIC_BOUND: run_numeric_bound,
    VerificationMode.KNOWN_FALSE: run_known_false,
}
