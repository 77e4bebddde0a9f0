"""Quantum number theory in Z[q] / ([m]) surfaced as congruence records."""

from __future__ import annotations

from collections.abc import Callable, Iterable
from math import comb, gcd

from sympy import primerange

from qrk.catalog.record import IdentityRecord, Params, restamp
from qrk.core.exact import QLaurent
from qrk.core.qnt import (
    chi_poly,
    phi_poly,
    psi_poly,
    q_euler_check,
    q_fermat_check,
    q_wilson_check,
    root_product_check,
    special_congruences_check,
)
from qrk.core.reporting import make_verdict, start_timer
from qrk.schemas.verdict import Verdict, VerificationMode


def _sweep(
    identity_id: str,
    params: Params,
    checker: Callable[..., Verdict],
    points: Iterable[tuple[int, ...]],
) -> Verdict:
    """Run the checker at every point; the first failing verdict is reported."""
    started = start_timer()
    for point in points:
        verdict = checker(*point)
        if not verdict.passed:
            failure = f"{'/'.join(map(str, point))}:{verdict.first_failure}"
            return restamp(verdict.model_copy(update={"first_failure": failure}), identity_id, params)
    return make_verdict(identity_id, VerificationMode.CONGRUENCE, params, started)


def _odd_primes(limit: int) -> list[int]:
    return list(primerange(3, limit + 1))


def _fermat_points(params: Params) -> list[tuple[int, int]]:
    return [(a, p) for p in primerange(2, params["p_max"] + 1) for a in range(1, params["a_max"] + 1)]


def _euler_points(params: Params) -> list[tuple[int, int]]:
    m_max = params["m_max"]
    return [(a, m) for m in range(2, m_max + 1) for a in range(1, m_max + 1) if gcd(a, m) == 1]


def _chi_lhs(params: Params, p: int) -> tuple[QLaurent, int]:
    chi = chi_poly(p)
    return psi_poly(p) * chi.coefficients, chi.degree


def _chi_rhs(params: Params, p: int) -> tuple[QLaurent, int]:
    return phi_poly(p), comb(p - 1, 2)


RECORDS: list[IdentityRecord] = [
    IdentityRecord(
        id="q-fermat",
        summary="<a^{p-1}> = 1 and <a^p> = a mod [p] for p not dividing a; <a^p> = [a] = 0 otherwise",
        mode=VerificationMode.CONGRUENCE,
        defaults={"a_max": 30, "p_max": 13},
        check=lambda params: _sweep("q-fermat", params, q_fermat_check, _fermat_points(params)),
        size="a_max",
    ),
    IdentityRecord(
        id="q-euler",
        summary="prod over r coprime to m of [a]_{q^r} = 1 mod [m]",
        mode=VerificationMode.CONGRUENCE,
        defaults={"m_max": 20},
        check=lambda params: _sweep("q-euler", params, q_euler_check, _euler_points(params)),
        size="m_max",
    ),
    IdentityRecord(
        id="q-wilson",
        summary="prod_{a<p} [a]_{q^{inv(a)-1}} = -q^{-1} = [p-1] mod [p]",
        mode=VerificationMode.CONGRUENCE,
        defaults={"p_max": 13},
        check=lambda params: _sweep(
            "q-wilson", params, q_wilson_check, [(p,) for p in _odd_primes(params["p_max"])]
        ),
        size="p_max",
    ),
    IdentityRecord(
        id="special-congruences",
        summary="shifted powers, [p, k], [p-1, k], the x-products and the residue sign, mod [p]",
        mode=VerificationMode.CONGRUENCE,
        defaults={"p_max": 13},
        check=lambda params: _sweep(
            "special-congruences",
            params,
            special_congruences_check,
            [(p,) for p in _odd_primes(params["p_max"])],
        ),
        size="p_max",
    ),
    IdentityRecord(
        id="root-product",
        summary="prod_{k<p} (y - q^k) = 1 + y + ... + y^{p-1} mod [p]",
        mode=VerificationMode.CONGRUENCE,
        defaults={"p_max": 7},
        check=lambda params: _sweep(
            "root-product", params, root_product_check, [(p,) for p in _odd_primes(params["p_max"])]
        ),
        size="p_max",
    ),
    IdentityRecord(
        id="chi",
        summary="psi_p chi_p = prod_{k<p} (y^k - 1) - p with deg chi_p = binomial(p-1, 2)",
        mode=VerificationMode.FINITE,
        defaults={"p_max": 11},
        lhs=_chi_lhs,
        rhs=_chi_rhs,
        points=lambda params: _odd_primes(params["p_max"]),
        size="p_max",
    ),
]
