"""Verdict construction shared by the checkers."""

import logging
import time
from collections.abc import Mapping

from qrk.config import get_settings
from qrk.schemas.verdict import Verdict, VerdictStatus, VerificationMode

logger = logging.getLogger(__name__)


def start_timer() -> float:
    return time.perf_counter()


def elapsed_ms(started: float) -> float | None:
    """Wall time in milliseconds, or None unless timings are enabled."""
    if not get_settings().report_timings:
        return None
    return round((time.perf_counter() - started) * 1000, 3)


def make_verdict(
    identity_id: str,
    mode: VerificationMode,
    params: Mapping[str, int | str],
    started: float,
    *,
    first_failure: int | str | None = None,
    witness: Mapping[str, str] | None = None,
    status: VerdictStatus | None = None,
) -> Verdict:
    """Assemble a Verdict; a recorded failure point means FAIL unless a status is given."""
    if status is None:
        status = VerdictStatus.FAIL if first_failure is not None else VerdictStatus.PASS
    verdict = Verdict(
        id=identity_id,
        status=status,
        mode=mode,
        params=dict(sorted(params.items())),
        first_failure=first_failure,
        witness=dict(witness or {}),
        elapsed_ms=elapsed_ms(started),
    )
    if status == VerdictStatus.FAIL:
        logger.warning("%s failed at %s: %s", identity_id, first_failure, verdict.witness)
    else:
        logger.info("%s: %s", identity_id, status.value)
    return verdict
