"""Pydantic schemas for verification results and registry listings."""

from enum import Enum

from pydantic import BaseModel, Field, model_validator


# ========== Enums ==========


class VerdictStatus(str, Enum):
    """Outcome of a verification run."""

    PASS = "pass"
    FAIL = "fail"
    KNOWN_FALSE_CONFIRMED = "known-false-confirmed"


class VerificationMode(str, Enum):
    """How the two sides of an identity are compared."""

    X_SERIES = "x-series"
    Q_SERIES = "q-series"
    FINITE = "finite"
    CONGRUENCE = "congruence"
    NUMERIC_BOUND = "numeric-bound"
    KNOWN_FALSE = "known-false"


# ========== Verdicts ==========


class Verdict(BaseModel):
    """Result of verifying one identity; JSON field order is stable."""

    id: str
    status: VerdictStatus
    mode: VerificationMode
    params: dict[str, int | str] = Field(default_factory=dict)
    first_failure: int | str | None = None
    witness: dict[str, str] = Field(default_factory=dict)
    elapsed_ms: float | None = None

    @model_validator(mode="after")
    def failure_has_witness(self) -> "Verdict":
        if self.status == VerdictStatus.FAIL and not self.witness:
            raise ValueError("a failing verdict must carry a witness")
        return self

    @property
    def passed(self) -> bool:
        return self.status != VerdictStatus.FAIL


class RecordOut(BaseModel):
    """Registry listing entry."""

    id: str
    mode: VerificationMode
    summary: str
    defaults: dict[str, int]
