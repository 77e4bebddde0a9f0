"""Identity record type and parameter resolution."""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from qrk.config import Settings, get_settings
from qrk.schemas.verdict import Verdict, VerificationMode

Params = Mapping[str, int]

# Parameter names that read their default from Settings
ORDER = "default_order"
Q_ORDER = "default_q_order"
RANGE = "default_range"
SEED = "seed"


@dataclass(frozen=True)
class IdentityRecord:
    """One catalogued identity.

    ``defaults`` maps parameter names to ints, or to the name of a Settings field
    that supplies the value. ``size`` names the parameter that ``--order`` overrides.
    Modes compare ``lhs`` with ``rhs``; ``points`` enumerates the finite range for
    finite and congruence modes; ``check`` replaces the comparison entirely.
    """

    id: str
    summary: str
    mode: VerificationMode
    defaults: Mapping[str, int | str]
    lhs: Callable[..., Any] | None = None
    rhs: Callable[..., Any] | None = None
    points: Callable[[Params], Iterable[Any]] | None = None
    check: Callable[[Params], Verdict] | None = None
    expected: tuple[int, int, int] | None = None
    size: str = "T"
    start: int = 0
    tags: tuple[str, ...] = field(default_factory=tuple)


def resolve_params(
    record: IdentityRecord,
    overrides: Mapping[str, int] | None = None,
    settings: Settings | None = None,
) -> dict[str, int]:
    """Defaults with Settings references filled in, then overrides applied."""
    settings = settings or get_settings()
    params: dict[str, int] = {}
    for name, value in record.defaults.items():
        params[name] = int(getattr(settings, value)) if isinstance(value, str) else value
    for name, value in (overrides or {}).items():
        if value is not None:
            params[name] = value
    return params


def random_rationals(seed: int, count: int, bound: int = 9) -> list[Fraction]:
    """Reproducible nonzero rationals p/r with |p|, r <= bound."""
    rng = random.Random(seed)
    values = []
    while len(values) < count:
        value = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if value != 0:
            values.append(value)
    return values


def upto(name: str, first: int = 0) -> Callable[[Params], range]:
    """Points first..params[name]."""
    return lambda params: range(first, params[name] + 1)


def restamp(verdict: Verdict, identity_id: str, params: Params) -> Verdict:
    """Report a checker's verdict under the record id and resolved params."""
    return verdict.model_copy(update={"id": identity_id, "params": dict(sorted(params.items()))})
