"""Syntax tree for identity expressions and its canonical text rendering."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    """x, q, or a bound index variable."""

    name: str


@dataclass(frozen=True)
class Neg:
    operand: Expr


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Pow:
    base: Expr
    exponent: Expr


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple[Expr, ...]


@dataclass(frozen=True)
class Bound:
    """sum(v, lo, hi, body) or prod(v, lo, hi, body); hi is None for inf."""

    kind: str
    var: str
    lo: Expr
    hi: Expr | None
    body: Expr


Expr = Num | Var | Neg | BinOp | Pow | Call | Bound

_ADDITIVE = 1
_MULTIPLICATIVE = 2
_UNARY = 3
_POWER = 4
_ATOM = 5

_BINARY_PRECEDENCE = {"+": _ADDITIVE, "-": _ADDITIVE, "*": _MULTIPLICATIVE, "/": _MULTIPLICATIVE}


def _precedence(expr: Expr) -> int:
    if isinstance(expr, BinOp):
        return _BINARY_PRECEDENCE[expr.op]
    if isinstance(expr, Neg):
        return _UNARY
    if isinstance(expr, Pow):
        return _POWER
    return _ATOM


def _wrap(expr: Expr, minimum: int) -> str:
    text = render(expr)
    return text if _precedence(expr) >= minimum else f"({text})"


def render(expr: Expr) -> str:
    """Canonical text; parsing it back gives an equal tree."""
    match expr:
        case Num(value):
            return str(value)
        case Var(name):
            return name
        case Neg(operand):
            return f"-{_wrap(operand, _UNARY)}"
        case BinOp(op, left, right):
            level = _BINARY_PRECEDENCE[op]
            return f"{_wrap(left, level)} {op} {_wrap(right, level + 1)}"
        case Pow(base, exponent):
            if isinstance(exponent, Neg):
                power = f"-{_wrap(exponent.operand, _ATOM)}"
            else:
                power = _wrap(exponent, _ATOM)
            return f"{_wrap(base, _ATOM)}^{power}"
        case Call(name, args):
            return f"{name}({', '.join(render(a) for a in args)})"
        case Bound(kind, var, lo, hi, body):
            upper = "inf" if hi is None else render(hi)
            return f"{kind}({var}, {render(lo)}, {upper}, {render(body)})"
    raise TypeError(f"not an expression node: {expr!r}")
