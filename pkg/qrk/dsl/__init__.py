"""Identity expression language: parser, syntax tree and evaluator."""

from qrk.dsl.ast import Expr, render
from qrk.dsl.evaluator import eval_series, eval_value
from qrk.dsl.parser import parse

__all__ = ["Expr", "eval_series", "eval_value", "parse", "render"]
