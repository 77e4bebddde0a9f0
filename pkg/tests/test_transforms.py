"""Tests for the q-difference operator and the Euler transformation checks."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from qrk.catalog.transforms import (
    delta_explicit,
    delta_op,
    euler_transform_check,
    geometric_check,
    geometric_partial,
    knopp_examples_check,
    lemma_sum,
)
from qrk.core.exact import QLaurent, QRat
from qrk.schemas.verdict import VerdictStatus


class TestDeltaOperator:
    def test_unit_weight_gives_classical_differences(self):
        assert delta_op([1, 4, 9, 16], 2, 0, weight=1) == 2

    def test_zero_order_is_identity(self):
        assert delta_op([5, 7], 0, 1) == 7

    @given(
        st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=1, max_size=6),
        st.integers(min_value=0, max_value=4),
        st.integers(min_value=0, max_value=2),
    )
    @settings(max_examples=40)
    def test_recursive_matches_explicit(self, a, ell, k):
        assert delta_op(a, ell, k) == delta_explicit(a, ell, k)


class TestEulerTransform:
    def test_seeded_sequence(self):
        verdict = euler_transform_check([1, 1, Fraction(2, 3), -3], 12)
        assert verdict.status == VerdictStatus.PASS, verdict.witness

    def test_lemma_sum(self):
        for k in range(4):
            assert lemma_sum(k, 10) == 1

    def test_geometric_first_term(self):
        assert geometric_partial(0) == QRat(QLaurent.monomial(1), QLaurent([1, 1]))

    def test_geometric_check(self):
        assert geometric_check(10).status == VerdictStatus.PASS


class TestKnoppExamples:
    def test_all_families(self):
        verdict = knopp_examples_check(12)
        assert verdict.status == VerdictStatus.PASS, verdict.witness
        assert verdict.id == "knopp"

    def test_log_family_only(self):
        verdict = knopp_examples_check(10, family="log")
        assert verdict.id == "eq91b"
        assert verdict.status == VerdictStatus.PASS
