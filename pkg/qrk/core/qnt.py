"""Arithmetic in Z[q] modulo [m] and the q-analogs of Fermat, Euler and Wilson."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import gcd
from typing import Any

from sympy import isprime

from qrk.core.exact import QLaurent, QRat, poly_divmod, poly_exact_div
from qrk.core.qkit import q_binomial_poly, q_int, shifted_pow, triangular
from qrk.core.reporting import make_verdict, start_timer
from qrk.core.series import XSeries, shifted_series
from qrk.errors import NonIntegerCoefficientError, PreconditionError
from qrk.schemas.verdict import Verdict, VerificationMode

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModElem:
    """Canonical residue of Z[q] / ([m]) in the basis 1, q, ..., q^{m-2}."""

    modulus: int
    residue: QLaurent

    def _other(self, other: Any) -> ModElem:
        if isinstance(other, ModElem):
            if other.modulus != self.modulus:
                raise PreconditionError(f"moduli differ: [{self.modulus}] and [{other.modulus}]")
            return other
        return reduce_mod(other, self.modulus)

    def __add__(self, other: Any) -> ModElem:
        return reduce_mod(self.residue + self._other(other).residue, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Any) -> ModElem:
        return reduce_mod(self.residue - self._other(other).residue, self.modulus)

    def __neg__(self) -> ModElem:
        return ModElem(self.modulus, -self.residue)

    def __mul__(self, other: Any) -> ModElem:
        return reduce_mod(self.residue * self._other(other).residue, self.modulus)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> ModElem:
        if exponent < 0:
            raise PreconditionError("ModElem powers must be nonnegative")
        result = reduce_mod(1, self.modulus)
        for _ in range(exponent):
            result = result * self
        return result

    def is_zero(self) -> bool:
        return self.residue.is_zero()

    def specialize(self) -> int:
        """Image under q -> 1, which maps Z[q]/([m]) onto Z/m."""
        return int(self.residue.eval_at(1)) % self.modulus

    def __str__(self) -> str:
        return f"{self.residue} mod [{self.modulus}]"


def reduce_mod(f: Any, m: int) -> ModElem:
    """Fold exponents with q^m = 1, then clear the q^{m-1} coefficient using [m]."""
    if m < 2:
        raise PreconditionError("the modulus must be at least 2")
    if isinstance(f, ModElem):
        return f if f.modulus == m else reduce_mod(f.residue, m)
    if isinstance(f, QRat):
        if not f.is_polynomial():
            raise NonIntegerCoefficientError(f"{f} is not a polynomial")
        f = f.num
    if isinstance(f, int):
        f = QLaurent.constant(f)
    if not isinstance(f, QLaurent):
        raise PreconditionError(f"cannot reduce {type(f).__name__}")
    if not f.is_integral():
        raise NonIntegerCoefficientError(f"{f} has non-integer coefficients")
    buckets = [0] * m
    for exponent, coeff in f.items():
        buckets[exponent % m] += int(coeff)
    top = buckets[m - 1]
    return ModElem(m, QLaurent([b - top for b in buckets[: m - 1]], 0, f.var))


def _require_prime(p: int) -> None:
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")


def _require_odd_prime(p: int) -> None:
    _require_prime(p)
    if p == 2:
        raise PreconditionError("p = 2 is rejected; an odd prime is required")


def q_int_base(a: int, r: int) -> QLaurent:
    """[a]_{q^r}, reading base q^0 as the integer a."""
    if r == 0:
        return QLaurent.constant(a)
    return q_int(a, r)


def coprime_residues(m: int) -> list[int]:
    return [r for r in range(1, m) if gcd(r, m) == 1] if m > 1 else [1]


# ── Fermat and Euler ──


def _quantum_pow_mod(a: int, n: int, m: int) -> ModElem:
    result = reduce_mod(1, m)
    for k in range(1, n + 1):
        result = result * reduce_mod(q_int(a, k), m)
    return result


def q_fermat_check(a: int, p: int) -> Verdict:
    """<a^{p-1}> = 1 and <a^p> = a when p does not divide a, else <a^p> = [a] = 0, mod [p]."""
    started = start_timer()
    if a < 1:
        raise PreconditionError("q_fermat_check needs a positive integer a")
    _require_prime(p)
    checks: dict[str, tuple[ModElem, ModElem]] = {}
    top = _quantum_pow_mod(a, p - 1, p)
    full = top * reduce_mod(q_int(a, p), p)
    if a % p:
        checks["power-p-1"] = (top, reduce_mod(1, p))
        checks["power-p"] = (full, reduce_mod(a, p))
    else:
        checks["power-p"] = (full, reduce_mod(q_int(a), p))
        checks["q-integer"] = (reduce_mod(q_int(a), p), reduce_mod(0, p))
    classical = pow(a, p - 1, p) if a % p else 0
    specialized = top.specialize() if a % p else full.specialize()
    return _congruence_verdict(
        "q-fermat",
        {"a": a, "p": p},
        started,
        checks,
        classical=(specialized, classical),
    )


def q_euler_check(a: int, m: int) -> Verdict:
    """prod over r coprime to m of [a]_{q^r} = 1 mod [m]."""
    started = start_timer()
    if m < 2:
        raise PreconditionError("q_euler_check needs m >= 2")
    if gcd(a, m) != 1:
        raise PreconditionError(f"a = {a} is not coprime to m = {m}")
    product = reduce_mod(1, m)
    for r in coprime_residues(m):
        product = product * reduce_mod(q_int(a, r), m)
    return _congruence_verdict(
        "q-euler",
        {"a": a, "m": m},
        started,
        {"totient-product": (product, reduce_mod(1, m))},
        classical=(product.specialize(), 1 % m),
    )


def modp_solve(a: int, j: int, b: Any, m: int) -> ModElem:
    """Solve [a]_{q^{r_j}} x = b mod [m], r_j the j-th residue coprime to m."""
    if gcd(a, m) != 1:
        raise PreconditionError(f"a = {a} is not coprime to m = {m}")
    residues = coprime_residues(m)
    if not 0 <= j < len(residues):
        raise PreconditionError(f"index {j} outside the {len(residues)} coprime residues")
    target = reduce_mod(b, m)
    x = target
    for i, r in enumerate(residues):
        if i != j:
            x = x * reduce_mod(q_int(a, r), m)
    if reduce_mod(q_int(a, residues[j]), m) * x != target:
        raise PreconditionError(f"no solution reproduced for a={a}, m={m}, j={j}")
    return x


# ── Wilson ──


def inverse_table(p: int) -> dict[int, int]:
    _require_prime(p)
    return {a: pow(a, -1, p) for a in range(1, p)}


def q_wilson_check(p: int) -> Verdict:
    """prod_{a<p} [a]_{q^{inv(a)-1}} = -q^{-1} = [p-1] mod [p]."""
    started = start_timer()
    _require_odd_prime(p)
    product = reduce_mod(1, p)
    for a, inverse in inverse_table(p).items():
        product = product * reduce_mod(q_int_base(a, inverse - 1), p)
    checks = {
        "minus-q-inverse": (product, reduce_mod(QLaurent.monomial(-1, -1), p)),
        "q-integer": (product, reduce_mod(q_int(p - 1), p)),
    }
    return _congruence_verdict(
        "q-wilson",
        {"p": p},
        started,
        checks,
        classical=(product.specialize(), p - 1),
    )


# ── Special congruences ──


def _series_residues(series: XSeries, p: int) -> tuple[ModElem, ...]:
    return tuple(reduce_mod(c, p) for c in series.coeffs)


def special_congruences_check(p: int) -> Verdict:
    """The bundle (1 - q)...(1 - q^{p-1}) = p, [p, k] = 0, [p-1, k], the x-products and the residue sign."""
    started = start_timer()
    _require_odd_prime(p)
    zero = reduce_mod(0, p)
    checks: dict[str, tuple[Any, Any]] = {
        "shifted-power": (reduce_mod(shifted_pow(1, QLaurent.monomial(1, -1), p - 1), p), reduce_mod(p, p)),
    }
    for k in range(1, p):
        checks[f"binomial-p-{k}"] = (reduce_mod(q_binomial_poly(p, k), p), zero)
    for k in range(p):
        expected = QLaurent.monomial(-triangular(k), (-1) ** k)
        checks[f"binomial-p-1-{k}"] = (reduce_mod(q_binomial_poly(p - 1, k), p), reduce_mod(expected, p))
    geometric = tuple(reduce_mod(1, p) for _ in range(p))
    checks["shifted-x-p-1"] = (
        _series_residues(shifted_series(1, QLaurent.monomial(1, -1), p - 1, p - 1), p),
        geometric,
    )
    expected_binomial = tuple(reduce_mod(1 if n in (0, p) else 0, p) for n in range(p + 1))
    checks["shifted-x-p"] = (_series_residues(shifted_series(1, 1, p, p), p), expected_binomial)
    if p % 4 == 1:
        for a in range(1, p):
            if (a * a + 1) % p:
                continue
            product = reduce_mod(q_int(a, -1 - a), p) * reduce_mod(q_int(a, -1 + a), p)
            checks[f"residue-sign-{a}"] = (product, reduce_mod(QLaurent.monomial(1 - a, -1), p))
        logger.warning("checking the residue congruence with the negative sign on -q^{1-a}")
    return _congruence_verdict("special-congruences", {"p": p}, started, checks)


def root_product_check(p: int) -> Verdict:
    """prod_{k=1}^{p-1} (y - q^k) = 1 + y + ... + y^{p-1} mod [p], coefficientwise in y."""
    started = start_timer()
    _require_odd_prime(p)
    # prod (y - q^k) = y^{p-1} prod (1 - q^k / y); coefficients read in reverse
    series = shifted_series(1, QLaurent.monomial(1, -1), p - 1, p - 1)
    lhs = tuple(reversed(_series_residues(series, p)))
    rhs = tuple(reduce_mod(1, p) for _ in range(p))
    return _congruence_verdict("root-product", {"p": p}, started, {"root-product": (lhs, rhs)})


# ── chi polynomials ──


@dataclass(frozen=True)
class ChiPolynomial:
    """chi_p(y) with psi_p(y) chi_p(y) = prod_{k<p} (y^k - 1) - p."""

    p: int
    coefficients: QLaurent

    @property
    def degree(self) -> int:
        return self.coefficients.degree() or 0


def phi_poly(p: int) -> QLaurent:
    product = QLaurent.one("y")
    for k in range(1, p):
        product = product * (QLaurent.monomial(k, 1, "y") - 1)
    return product - p


def psi_poly(p: int) -> QLaurent:
    return QLaurent([1] * p, 0, "y")


def chi_poly(p: int) -> ChiPolynomial:
    _require_prime(p)
    if p == 2:
        _, remainder = poly_divmod(phi_poly(2), psi_poly(2))
        raise PreconditionError(f"p = 2 is rejected; the division leaves remainder {remainder}")
    quotient = poly_exact_div(phi_poly(p), psi_poly(p))
    return ChiPolynomial(p=p, coefficients=quotient)


# ── Verdicts ──


def _congruence_verdict(
    identity_id: str,
    params: dict[str, int | str],
    started: float,
    checks: dict[str, tuple[Any, Any]],
    classical: tuple[int, int] | None = None,
) -> Verdict:
    failure: str | None = None
    witness: dict[str, str] = {}
    for name, (lhs, rhs) in checks.items():
        if lhs != rhs:
            failure = name
            witness = {"lhs": _render(lhs), "rhs": _render(rhs)}
            break
    if failure is None and classical is not None and classical[0] != classical[1]:
        failure = "classical"
        witness = {"lhs": str(classical[0]), "rhs": str(classical[1])}
    return make_verdict(
        identity_id,
        VerificationMode.CONGRUENCE,
        params,
        started,
        first_failure=failure,
        witness=witness,
    )


def _render(value: Any) -> str:
    if isinstance(value, tuple):
        return "; ".join(_render(v) for v in value)
    return str(value)

