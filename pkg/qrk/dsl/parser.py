"""Recursive-descent parser for identity expressions.

Grammar, lowest precedence first::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := '-' unary | factor
    factor   := atom ('^' exponent)?
    exponent := '-'? atom
    atom     := integer | name | call | '(' expr ')'
    call     := name '(' args ')'

``sum`` and ``prod`` take ``(var, lo, hi, body)`` where ``hi`` may be ``inf``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from qrk.dsl.ast import BinOp, Bound, Call, Expr, Neg, Num, Pow, Var
from qrk.errors import DslSyntaxError

# name -> allowed argument counts
FUNCTIONS: dict[str, tuple[int, ...]] = {
    "qnum": (1, 2),
    "qfact": (1,),
    "qbinom": (2,),
    "qpoch": (3,),
    "qshift": (3,),
    "qpow": (2,),
    "log": (1,),
    "qlog": (1,),
    "qderiv": (1,),
    "subqx": (1, 2),
}
BOUND_FORMS = ("sum", "prod")
RESERVED = ("inf", *BOUND_FORMS, *FUNCTIONS)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")
_EXPRESSION_START = ["integer", "name", "(", "-"]


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    position: int  # byte offset into the source


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    index = 0
    while True:
        match = _TOKEN.match(text, index)
        if match is None:
            break
        number, name, symbol = match.groups()
        start = match.start(match.lastindex or 0)
        position = len(text[:start].encode())
        if number is not None:
            tokens.append(Token("int", number, position))
        elif name is not None:
            tokens.append(Token("name", name, position))
        else:
            if symbol not in "+-*/^(),":
                raise DslSyntaxError(position, ["operator", "operand"], symbol)
            tokens.append(Token("op", symbol, position))
        index = match.end()
    tokens.append(Token("end", "", len(text.encode())))
    return tokens


class Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def _advance(self) -> Token:
        token = self.current
        self.index += 1
        return token

    def _at(self, symbol: str) -> bool:
        return self.current.kind == "op" and self.current.text == symbol

    def _fail(self, expected: list[str]) -> DslSyntaxError:
        found = self.current.text or "end of input"
        return DslSyntaxError(self.current.position, expected, found)

    def _expect(self, symbol: str, also: list[str] | None = None) -> Token:
        if not self._at(symbol):
            raise self._fail([*(also or []), symbol])
        return self._advance()

    # ── grammar ──

    def parse(self) -> Expr:
        expr = self.expr()
        if self.current.kind != "end":
            raise self._fail(["+", "-", "*", "/", "^", "end of input"])
        return expr

    def expr(self) -> Expr:
        node = self.term()
        while self._at("+") or self._at("-"):
            op = self._advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.unary()
        while self._at("*") or self._at("/"):
            op = self._advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self) -> Expr:
        if self._at("-"):
            self._advance()
            return Neg(self.unary())
        return self.factor()

    def factor(self) -> Expr:
        base = self.atom()
        if self._at("^"):
            self._advance()
            if self._at("-"):
                self._advance()
                return Pow(base, Neg(self.atom()))
            return Pow(base, self.atom())
        return base

    def atom(self) -> Expr:
        token = self.current
        if token.kind == "int":
            self._advance()
            return Num(int(token.text))
        if token.kind == "name":
            if token.text == "inf":
                raise self._fail(_EXPRESSION_START)
            self._advance()
            if token.text in BOUND_FORMS:
                return self._bound(token)
            if token.text in FUNCTIONS:
                return self._call(token)
            if self._at("("):
                raise DslSyntaxError(token.position, sorted(FUNCTIONS), token.text)
            return Var(token.text)
        if self._at("("):
            self._advance()
            inner = self.expr()
            self._expect(")", ["+", "-", "*", "/", "^"])
            return inner
        raise self._fail(_EXPRESSION_START)

    def _call(self, name: Token) -> Call:
        self._expect("(")
        args = [self.expr()]
        while self._at(","):
            self._advance()
            args.append(self.expr())
        self._expect(")", ["+", "-", "*", "/", "^", ","])
        arities = FUNCTIONS[name.text]
        if len(args) not in arities:
            counts = " or ".join(str(a) for a in arities)
            raise DslSyntaxError(name.position, [f"{counts} arguments"], f"{len(args)} arguments")
        return Call(name.text, tuple(args))

    def _bound(self, kind: Token) -> Bound:
        self._expect("(")
        var = self.current
        if var.kind != "name" or var.text in RESERVED or var.text in ("x", "q"):
            raise self._fail(["index variable name"])
        self._advance()
        self._expect(",")
        lo = self.expr()
        self._expect(",", ["+", "-", "*", "/", "^"])
        hi: Expr | None
        if self.current.kind == "name" and self.current.text == "inf":
            self._advance()
            hi = None
        else:
            hi = self.expr()
        self._expect(",", ["+", "-", "*", "/", "^"])
        body = self.expr()
        self._expect(")", ["+", "-", "*", "/", "^"])
        return Bound(kind.text, var.text, lo, hi, body)


def parse(text: str) -> Expr:
    """Parse an identity expression; raises DslSyntaxError with the byte offset."""
    return Parser(text).parse()
