"""Registry mapping identity ids to their records.

Each record module exposes:
- RECORDS: list of IdentityRecord
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from types import ModuleType

from qrk.catalog.modes import RUNNERS
from qrk.catalog.record import IdentityRecord, resolve_params
from qrk.catalog.records import (
    classical,
    congruences,
    cubic,
    euler_transform,
    logarithms,
    partitions,
    quantum_powers,
    symmetric,
)
from qrk.config import get_settings
from qrk.core.reporting import make_verdict, start_timer
from qrk.errors import UnknownIdentityError
from qrk.schemas.verdict import RecordOut, Verdict, VerdictStatus

logger = logging.getLogger(__name__)

# Map family key → module
_RECORD_MODULES: dict[str, ModuleType] = {
    "classical": classical,
    "symmetric": symmetric,
    "logarithms": logarithms,
    "cubic": cubic,
    "quantum-powers": quantum_powers,
    "euler-transform": euler_transform,
    "partitions": partitions,
    "congruences": congruences,
}


@lru_cache
def _index() -> dict[str, IdentityRecord]:
    records: dict[str, IdentityRecord] = {}
    for family, module in _RECORD_MODULES.items():
        for record in module.RECORDS:
            if record.id in records:
                raise ValueError(f"Duplicate identity id {record.id} in {family}")
            records[record.id] = record
    return records


def list_records() -> list[IdentityRecord]:
    """All records in registry order."""
    return list(_index().values())


def describe_records() -> list[RecordOut]:
    return [
        RecordOut(id=r.id, mode=r.mode, summary=r.summary, defaults=resolve_params(r))
        for r in list_records()
    ]


def get_record(identity_id: str) -> IdentityRecord:
    record = _index().get(identity_id)
    if record is None:
        raise UnknownIdentityError(identity_id)
    return record


def find_family_for_record(identity_id: str) -> str | None:
    """Find which family module owns a given identity id."""
    for family, module in _RECORD_MODULES.items():
        if any(r.id == identity_id for r in module.RECORDS):
            return family
    return None


def verify(identity_id: str, overrides: Mapping[str, int] | None = None) -> Verdict:
    """Run a record at its defaults (or overrides).

    Mathematical mismatches come back as failing verdicts; any exception raised while
    building either side is reported the same way, so one broken record cannot abort
    verify_all.
    """
    record = get_record(identity_id)
    params = resolve_params(record, overrides)
    started = start_timer()
    logger.info("verifying %s with %s", identity_id, params)
    try:
        if record.check is not None:
            return record.check(params)
        return RUNNERS[record.mode](record, params, started)
    except Exception as e:
        logger.error("Verification failed: %s: %s", identity_id, e)
        return make_verdict(
            record.id,
            record.mode,
            params,
            started,
            first_failure="error",
            witness={"error": f"{type(e).__name__}: {e}"},
            status=VerdictStatus.FAIL,
        )


def verify_all(workers: int | None = None) -> list[Verdict]:
    """Verify every record; results keep registry order."""
    workers = workers or get_settings().verify_workers
    ids = [r.id for r in list_records()]
    if workers <= 1:
        return [verify(i) for i in ids]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(verify, ids))
