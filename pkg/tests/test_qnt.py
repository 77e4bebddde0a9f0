"""Tests for arithmetic modulo [m] and the quantum number theory checks."""

from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrk.core.exact import QLaurent, QRat
from qrk.core.qkit import q_int
from qrk.core.qnt import (
    chi_poly,
    coprime_residues,
    modp_solve,
    phi_poly,
    psi_poly,
    q_euler_check,
    q_fermat_check,
    q_wilson_check,
    reduce_mod,
    root_product_check,
    special_congruences_check,
)
from qrk.errors import NonIntegerCoefficientError, PreconditionError
from qrk.schemas.verdict import VerdictStatus, VerificationMode

PRIMES = [2, 3, 5, 7, 11, 13]
ODD_PRIMES = [3, 5, 7, 11, 13]

_integral_polys = st.builds(
    QLaurent,
    st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=8),
    st.integers(min_value=-3, max_value=3),
)
_moduli = st.integers(min_value=2, max_value=9)


# ─── Reduction modulo [m] ─────────────────────────────────────────────────────

class TestReduceMod:
    def test_q_to_the_m_is_one(self):
        assert reduce_mod(QLaurent.monomial(7), 7) == reduce_mod(1, 7)

    def test_q_integer_vanishes(self):
        assert reduce_mod(q_int(5), 5).is_zero()

    def test_negative_exponents_fold(self):
        assert reduce_mod(QLaurent.monomial(-1), 5) == reduce_mod(QLaurent.monomial(4), 5)

    def test_residue_uses_basis_below_top(self):
        assert reduce_mod(QLaurent.monomial(4), 5).residue == QLaurent([-1, -1, -1, -1])

    def test_specialize_maps_onto_integers(self):
        assert reduce_mod(q_int(3) * 4, 5).specialize() == 12 % 5

    def test_rejects_fractions(self):
        with pytest.raises(NonIntegerCoefficientError):
            reduce_mod(QRat(1, 2), 5)

    def test_mixed_moduli_rejected(self):
        with pytest.raises(PreconditionError):
            reduce_mod(1, 5) + reduce_mod(1, 7)

    @pytest.mark.parametrize("m", [0, 1])
    def test_rejects_small_moduli(self, m):
        with pytest.raises(PreconditionError):
            reduce_mod(1, m)

    @given(_integral_polys, _integral_polys, _moduli)
    @settings(max_examples=50)
    def test_reduction_is_a_ring_homomorphism(self, f, g, m):
        assert reduce_mod(f * g, m) == reduce_mod(f, m) * reduce_mod(g, m)
        assert reduce_mod(f + g, m) == reduce_mod(f, m) + reduce_mod(g, m)

    @given(_integral_polys, _moduli)
    def test_reduction_is_idempotent(self, f, m):
        reduced = reduce_mod(f, m)
        assert reduce_mod(reduced.residue, m) == reduced
        assert reduced.residue.is_zero() or reduced.residue.degree() < m - 1

    def test_coprime_residues(self):
        assert coprime_residues(12) == [1, 5, 7, 11]


# ─── Fermat, Euler and Wilson ─────────────────────────────────────────────────

class TestCongruences:
    @pytest.mark.parametrize("p", PRIMES)
    def test_q_fermat(self, p):
        for a in range(1, 31):
            verdict = q_fermat_check(a, p)
            assert verdict.status == VerdictStatus.PASS, (a, verdict.first_failure)

    def test_q_fermat_params(self):
        verdict = q_fermat_check(3, 7)
        assert verdict.mode == VerificationMode.CONGRUENCE
        assert verdict.params == {"a": 3, "p": 7}

    def test_q_fermat_rejects_composite(self):
        with pytest.raises(PreconditionError):
            q_fermat_check(2, 9)

    @pytest.mark.parametrize("m", range(2, 21))
    def test_q_euler(self, m):
        for a in range(1, 2 * m):
            if gcd(a, m) == 1:
                assert q_euler_check(a, m).status == VerdictStatus.PASS, a

    def test_q_euler_rejects_common_factor(self):
        with pytest.raises(PreconditionError):
            q_euler_check(2, 4)

    @pytest.mark.parametrize("p", ODD_PRIMES)
    def test_q_wilson(self, p):
        assert q_wilson_check(p).status == VerdictStatus.PASS

    @pytest.mark.parametrize("p", [2, 9])
    def test_q_wilson_rejects(self, p):
        with pytest.raises(PreconditionError):
            q_wilson_check(p)

    @pytest.mark.parametrize("p", ODD_PRIMES)
    def test_special_congruences(self, p):
        assert special_congruences_check(p).status == VerdictStatus.PASS

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_root_product(self, p):
        assert root_product_check(p).status == VerdictStatus.PASS


# ─── Linear congruences ───────────────────────────────────────────────────────

class TestModpSolve:
    def test_solution_satisfies_congruence(self):
        m = 7
        for j, r in enumerate(coprime_residues(m)):
            x = modp_solve(3, j, QLaurent.monomial(2), m)
            assert reduce_mod(q_int(3, r), m) * x == reduce_mod(QLaurent.monomial(2), m)

    def test_rejects_index_out_of_range(self):
        with pytest.raises(PreconditionError):
            modp_solve(3, 6, 1, 7)


# ─── chi polynomials ──────────────────────────────────────────────────────────

class TestChi:
    def test_chi_3(self):
        assert chi_poly(3).coefficients == QLaurent([-2, 1], var="y")

    def test_chi_5(self):
        assert str(chi_poly(5).coefficients) == "-4 + 3*y + y^3 - 2*y^5 + y^6"

    def test_chi_7_degree(self):
        assert chi_poly(7).degree == 15

    @pytest.mark.parametrize("p", [3, 5, 7, 11])
    def test_division_is_exact(self, p):
        assert psi_poly(p) * chi_poly(p).coefficients == phi_poly(p)

    @pytest.mark.parametrize("p", [2, 4])
    def test_rejects(self, p):
        with pytest.raises(PreconditionError):
            chi_poly(p)
