"""Evaluate identity expressions to exact x-series.

x-free subexpressions stay rational functions of q; anything that mentions x
becomes an XSeries truncated at the requested order.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, replace

from qrk.config import get_settings
from qrk.core.exact import QLaurent, QRat
from qrk.core.qkit import poch, q_binomial, q_factorial, q_int, quantum_pow, shifted_pow
from qrk.core.series import XSeries, q_derivative, series_log, series_qlog, series_recip, subst_qx
from qrk.dsl.ast import BinOp, Bound, Call, Expr, Neg, Num, Pow, Var
from qrk.dsl.parser import parse
from qrk.errors import DslEvaluationError, PreconditionError, ValuationError, ZeroDenominatorError

logger = logging.getLogger(__name__)

Value = QRat | XSeries

# a vanishing x-term is re-read at this multiple of the working order
_WIDE_FACTOR = 4


@dataclass(frozen=True)
class _Context:
    order: int
    q_order: int
    cap: int
    env: Mapping[str, int]

    def bind(self, name: str, value: int) -> _Context:
        return replace(self, env={**self.env, name: value})


def _as_series(value: Value, order: int) -> XSeries:
    return value if isinstance(value, XSeries) else XSeries.constant(value, order)


def _index(value: Value, what: str) -> int:
    """Integer value of an index expression."""
    if isinstance(value, QRat) and value.is_constant():
        number = value.constant_value()
        if number.denominator == 1:
            return int(number)
    raise DslEvaluationError(f"{what} must evaluate to an integer, got {value}")


def _x_free(value: Value, what: str) -> QRat:
    if isinstance(value, XSeries):
        raise DslEvaluationError(f"{what} must not depend on x")
    return value


# ── arithmetic ──


def _divide(left: Value, right: Value, order: int) -> Value:
    if isinstance(right, XSeries):
        return _as_series(left, order) * series_recip(right)
    if right.is_zero():
        raise ZeroDenominatorError("division by zero")
    return left / right


def _binary(op: str, left: Value, right: Value, ctx: _Context) -> Value:
    if op == "+":
        return left + right
    if op == "-":
        return left - right
    if op == "*":
        return left * right
    return _divide(left, right, ctx.order)


# ── functions ──


def _generic_shift(u: Value, v: Value, k: int, order: int) -> Value:
    """prod_{i<k} (u + q^i v) for series arguments."""
    result: Value = XSeries.constant(1, order)
    for i in range(k):
        result = result * (u + v * QLaurent.monomial(i))
    return result


def _generic_poch(a: Value, b: Value, n: int, order: int) -> Value:
    if n < 0:
        raise DslEvaluationError("qpoch with a negative length needs x-free arguments")
    result: Value = XSeries.constant(1, order)
    power: Value = QRat.one()
    for _ in range(n):
        result = result * (1 - a * power)
        power = power * b
    return result


def _call(node: Call, ctx: _Context) -> Value:
    name = node.name
    if name == "qderiv":
        # one extra order so the derivative still reaches x^T
        inner = _eval(node.args[0], replace(ctx, order=ctx.order + 1))
        return q_derivative(_as_series(inner, ctx.order + 1))

    args = [_eval(a, ctx) for a in node.args]
    if name == "qnum":
        r = _index(args[1], "qnum base") if len(args) > 1 else 1
        return QRat.of(q_int(_index(args[0], "qnum argument"), r))
    if name == "qfact":
        return QRat.of(q_factorial(_index(args[0], "qfact argument")))
    if name == "qbinom":
        return q_binomial(_index(args[0], "qbinom n"), _index(args[1], "qbinom k"))
    if name == "qpow":
        return QRat.of(quantum_pow(_index(args[0], "qpow base"), _index(args[1], "qpow exponent")))
    if name == "qpoch":
        n = _index(args[2], "qpoch length")
        if isinstance(args[0], QRat) and isinstance(args[1], QRat):
            return poch(args[0], args[1], n)
        return _generic_poch(args[0], args[1], n, ctx.order)
    if name == "qshift":
        k = _index(args[2], "qshift exponent")
        if isinstance(args[0], QRat) and isinstance(args[1], QRat):
            return shifted_pow(args[0], args[1], k)
        if k < 0:
            raise PreconditionError("qshift requires k >= 0")
        return _generic_shift(args[0], args[1], k, ctx.order)
    if name == "log":
        return series_log(_as_series(args[0], ctx.order))
    if name == "qlog":
        return series_qlog(_as_series(args[0], ctx.order) - 1)
    if name == "subqx":
        power = _index(args[1], "subqx power") if len(args) > 1 else 1
        return subst_qx(_as_series(args[0], ctx.order), power)
    raise DslEvaluationError(f"unknown function {name}")


# ── bound forms ──


def _finite(node: Bound, lo: int, hi: int, ctx: _Context) -> Value:
    total: Value = QRat.zero() if node.kind == "sum" else QRat.one()
    for k in range(lo, hi + 1):
        term = _eval(node.body, ctx.bind(node.var, k))
        total = total + term if node.kind == "sum" else total * term
    return total


def _wide_valuation(node: Bound, k: int, ctx: _Context) -> int | None:
    """x-valuation of a term that vanished at the working order, or None if it is zero."""
    wide = replace(ctx, order=_WIDE_FACTOR * (ctx.order + 1)).bind(node.var, k)
    term = _eval(node.body, wide)
    deviation = term if node.kind == "sum" else term - 1
    return _as_series(deviation, wide.order).valuation()


def _infinite(node: Bound, lo: int, ctx: _Context) -> Value:
    """Sum (or multiply) until term orders pass the working order.

    Term orders must strictly increase: the x-valuation for terms that mention x,
    otherwise the q-valuation, read from (term - 1) for products. Vanishing terms
    carry no order and are skipped; a body that keeps vanishing runs into the cap.
    """
    is_sum = node.kind == "sum"
    total: Value = QRat.zero() if is_sum else QRat.one()
    x_mode = False
    previous: int | None = None
    skipped = 0
    k = lo
    while True:
        if k - lo >= ctx.cap:
            raise ValuationError(
                f"{node.kind} over {node.var} exceeded {ctx.cap} terms "
                f"({skipped} vanishing) without passing the working order"
            )
        term = _eval(node.body, ctx.bind(node.var, k))
        deviation = term if is_sum else term - 1
        if isinstance(deviation, XSeries) and not x_mode:
            x_mode = True
            # x-free terms already taken count as order 0 in x
            if previous is not None:
                previous = 0
        if x_mode:
            valuation = _as_series(deviation, ctx.order).valuation()
            if valuation is None:
                valuation = _wide_valuation(node, k, ctx)
            limit = ctx.order
        else:
            valuation = _x_free(deviation, "term").valuation()
            limit = ctx.q_order
        if valuation is None:
            skipped += 1
            k += 1
            continue
        if previous is not None and valuation <= previous:
            raise ValuationError(
                f"{node.kind} over {node.var}: term order {valuation} at {node.var}={k} "
                f"does not exceed {previous}"
            )
        if valuation > limit:
            break
        total = total + term if is_sum else total * term
        previous = valuation
        k += 1
    logger.debug(
        "%s over %s stopped after %d terms, %d vanishing", node.kind, node.var, k - lo, skipped
    )
    if isinstance(total, QRat):
        return QRat.of(total.expand(ctx.q_order))
    return total


def _bound(node: Bound, ctx: _Context) -> Value:
    lo = _index(_eval(node.lo, ctx), "lower bound")
    if node.hi is None:
        return _infinite(node, lo, ctx)
    hi = _index(_eval(node.hi, ctx), "upper bound")
    return _finite(node, lo, hi, ctx)


# ── dispatch ──


def _eval(node: Expr, ctx: _Context) -> Value:
    match node:
        case Num(value):
            return QRat.of(value)
        case Var("x"):
            return XSeries.monomial(1, ctx.order)
        case Var("q"):
            return QRat.gen()
        case Var(name):
            if name not in ctx.env:
                raise DslEvaluationError(f"unbound variable {name}")
            return QRat.of(ctx.env[name])
        case Neg(operand):
            return -_eval(operand, ctx)
        case BinOp(op, left, right):
            return _binary(op, _eval(left, ctx), _eval(right, ctx), ctx)
        case Pow(base, exponent):
            n = _index(_eval(exponent, ctx), "exponent")
            value = _eval(base, ctx)
            if isinstance(value, QRat) and value.is_zero() and n < 0:
                raise ZeroDenominatorError("zero raised to a negative power")
            return value**n
        case Call():
            return _call(node, ctx)
        case Bound():
            return _bound(node, ctx)
    raise DslEvaluationError(f"cannot evaluate {node!r}")


def eval_value(expr: Expr | str, order: int, q_order: int | None = None) -> Value:
    """Evaluate without promoting x-free results to a series."""
    settings = get_settings()
    node = parse(expr) if isinstance(expr, str) else expr
    q_order = settings.default_q_order if q_order is None else q_order
    cap = settings.inf_cap_factor * max(order, q_order, 1)
    return _eval(node, _Context(order=order, q_order=q_order, cap=cap, env={}))


def eval_series(expr: Expr | str, order: int | None = None, q_order: int | None = None) -> XSeries:
    """Exact XSeries truncated at x^order; x-free expressions give a constant series."""
    order = get_settings().default_order if order is None else order
    if order < 0:
        raise PreconditionError("series order must be nonnegative")
    return _as_series(eval_value(expr, order, q_order), order)

