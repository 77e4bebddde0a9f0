"""Tests for the identity expression parser and evaluator."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qrk.catalog.records.classical import binomial_odd_sum
from qrk.catalog.registry import get_record
from qrk.core.exact import QLaurent, QRat
from qrk.core.partitions import partition_count
from qrk.core.qkit import q_int
from qrk.core.series import XSeries, series_qlog
from qrk.dsl import eval_series, eval_value, parse, render
from qrk.dsl.ast import BinOp, Bound, Call, Neg, Num, Pow, Var
from qrk.errors import (
    DslEvaluationError,
    DslSyntaxError,
    PreconditionError,
    ValuationError,
    ZeroDenominatorError,
)

EQ53_AT_5 = (
    "sum(k, 1, 5, qbinom(5, k) * (-1)^(k - 1) * q^(k * (k + 1) / 2) / qnum(k))"
    " - sum(k, 1, 5, q^k / qnum(k))"
)
EQ67_1_RHS = "sum(k, 0, inf, (-x)^k * q^(k * (k + 1) / 2) / qshift(1, -x, k + 2))"


# ─── Helpers ──────────────────────────────────────────────────────────────────

_leaves = st.one_of(
    st.builds(Num, st.integers(min_value=0, max_value=20)),
    st.sampled_from([Var("x"), Var("q"), Var("k")]),
)


def _extend(children):
    return st.one_of(
        st.builds(Neg, children),
        st.builds(BinOp, st.sampled_from("+-*/"), children, children),
        st.builds(Pow, children, children),
        st.builds(lambda a: Call("qnum", (a,)), children),
        st.builds(lambda a, b: Call("qbinom", (a, b)), children, children),
        st.builds(lambda lo, body: Bound("sum", "k", lo, None, body), children, children),
    )


_expressions = st.recursive(_leaves, _extend, max_leaves=12)


# ─── Parsing ──────────────────────────────────────────────────────────────────

class TestParse:
    def test_call(self):
        assert parse("qnum(3)") == Call("qnum", (Num(3),))

    def test_infinite_sum(self):
        node = parse("sum(k,1,inf, x^k/qnum(k))")
        assert isinstance(node, Bound)
        assert node.kind == "sum"
        assert node.hi is None
        assert node.body == BinOp("/", Pow(Var("x"), Var("k")), Call("qnum", (Var("k"),)))

    def test_power_binds_tighter_than_minus(self):
        assert parse("-x^2") == Neg(Pow(Var("x"), Num(2)))
        assert parse("2^-1") == Pow(Num(2), Neg(Num(1)))

    def test_left_associative(self):
        assert parse("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))

    def test_unclosed_call(self):
        with pytest.raises(DslSyntaxError) as exc:
            parse("qbinom(2")
        assert exc.value.position == 8
        assert "," in exc.value.expected

    def test_dangling_operator(self):
        with pytest.raises(DslSyntaxError) as exc:
            parse("1 +")
        assert exc.value.position == 3

    def test_positions_count_bytes(self):
        with pytest.raises(DslSyntaxError) as exc:
            parse("1\u00a0+")
        assert exc.value.position == 4

    def test_bad_symbol(self):
        with pytest.raises(DslSyntaxError) as exc:
            parse("qnum(3) $")
        assert exc.value.position == 8

    @pytest.mark.parametrize("text", ["inf", "sum(k, 0, 1, inf)", "sum(k, inf, 3, k)"])
    def test_inf_only_as_upper_bound(self, text):
        with pytest.raises(DslSyntaxError):
            parse(text)

    def test_arity(self):
        with pytest.raises(DslSyntaxError) as exc:
            parse("1 + qfact(1, 2)")
        assert exc.value.position == 4

    def test_unknown_function(self):
        with pytest.raises(DslSyntaxError):
            parse("foo(1)")

    def test_bound_variable_cannot_shadow_x(self):
        with pytest.raises(DslSyntaxError):
            parse("sum(x, 0, 3, x)")

    @given(_expressions)
    def test_render_round_trip(self, expr):
        assert parse(render(expr)) == expr


# ─── Evaluation ───────────────────────────────────────────────────────────────

class TestEvalSeries:
    def test_pure_q_expression(self):
        assert eval_series("qnum(3)", 4) == XSeries.constant(QLaurent([1, 1, 1]), 4)

    def test_geometric(self):
        assert eval_series("1/(1-x)", 3) == XSeries.geometric(3)

    def test_infinite_q_harmonic_sum(self):
        series = eval_series("sum(k,1,inf, x^k/qnum(k))", 5)
        assert series == XSeries.from_coeffs([0, *(QRat(1, q_int(k)) for k in range(1, 6))], 5)

    def test_infinite_product(self):
        series = eval_series("prod(k, 1, inf, 1/(1 - x^k))", 12)
        assert series == XSeries.from_coeffs([partition_count(n) for n in range(13)], 12)

    def test_x_free_infinite_sum_expands_in_q(self):
        assert eval_value("sum(k, 0, inf, q^k)", 0, 5) == QLaurent([1] * 6)

    def test_functions(self):
        assert eval_series("qshift(1, 1, 2)", 0) == XSeries.constant(QLaurent([2, 2]), 0)
        assert eval_series("qderiv(1/(1-x))", 3) == XSeries.from_coeffs(
            [q_int(n + 1) for n in range(4)], 3
        )
        assert eval_series("subqx(1/(1-x))", 2) == XSeries.from_coeffs(
            [1, QLaurent.monomial(1), QLaurent.monomial(2)], 2
        )
        assert eval_series("qlog(1 + x)", 4) == series_qlog(XSeries.monomial(1, 4))

    def test_series_pochhammer(self):
        expected = XSeries.from_coeffs([1, -q_int(2), QLaurent.monomial(1)], 3)
        assert eval_series("qpoch(x, q, 2)", 3) == expected

    def test_vanishing_terms_are_skipped(self):
        series = eval_series("sum(k, 0, inf, (1 + (-1)^k) * x^k)", 6)
        assert series == XSeries.from_coeffs([2, 0, 2, 0, 2, 0, 2], 6)

    def test_vanishing_x_free_terms_are_skipped(self):
        assert eval_value("sum(k, 0, inf, (1 + (-1)^k) * q^k)", 0, 5) == QLaurent([2, 0, 2, 0, 2])

    def test_sparse_infinite_product(self):
        series = eval_series("prod(k, 1, inf, 1 + (1 - (-1)^k) * x^k / 2)", 6)
        assert series == XSeries.from_coeffs([1, 1, 0, 1, 1, 1, 1], 6)

    def test_default_order_from_settings(self, monkeypatch):
        monkeypatch.setenv("QRK_DEFAULT_ORDER", "7")
        assert eval_series("1/(1-x)").order == 7


# ─── Catalog transcriptions ───────────────────────────────────────────────────

class TestTranscriptions:
    def test_eq53(self):
        assert eval_series(EQ53_AT_5, 4).is_zero()

    def test_eq2_generating_function(self):
        lhs = eval_series("sum(k, 1, inf, (-2)^(k - 1) / k * x^k / (1 - x)^(k + 1))", 10)
        rhs = eval_series("sum(s, 0, inf, x^(2*s + 1) / (2*s + 1)) / (1 - x)", 10)
        assert lhs == rhs
        assert [lhs[n] for n in range(11)] == [QRat.of(binomial_odd_sum(n)) for n in range(11)]

    def test_eq67_1(self):
        expansion = eval_series(EQ67_1_RHS, 8)
        assert expansion == eval_series("1/(1-x)", 8)
        assert expansion == get_record("eq67.1").rhs({"T": 8})


# ─── Evaluation errors ────────────────────────────────────────────────────────

class TestEvalErrors:
    def test_non_increasing_valuation(self):
        with pytest.raises(ValuationError):
            eval_series("sum(k, 0, inf, x)", 5)

    def test_terms_that_stay_zero_hit_the_cap(self, monkeypatch):
        monkeypatch.setenv("QRK_INF_CAP_FACTOR", "2")
        with pytest.raises(ValuationError, match="vanishing"):
            eval_series("sum(k, 0, inf, qbinom(2, k) * x^k)", 4, 4)

    def test_constant_terms_do_not_converge(self):
        with pytest.raises(ValuationError):
            eval_series("sum(k, 0, inf, 1)", 5)

    def test_series_without_constant_term(self):
        with pytest.raises(ZeroDenominatorError):
            eval_series("1/x", 3)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDenominatorError):
            eval_series("1/(2-2)", 3)

    def test_fractional_index(self):
        with pytest.raises(DslEvaluationError):
            eval_series("qnum(1/2)", 3)

    def test_unbound_variable(self):
        with pytest.raises(DslEvaluationError):
            eval_series("k + 1", 3)

    def test_log_needs_unit_constant(self):
        with pytest.raises(PreconditionError):
            eval_series("log(2 + x)", 3)
