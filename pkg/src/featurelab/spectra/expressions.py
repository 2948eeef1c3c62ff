"""Arithmetic formula language for spectral indices.

Grammar (standard precedence, * and / bind tighter than + and -):

    expr    := term (('+' | '-') term)*
    term    := factor (('*' | '/') factor)*
    factor  := '-' factor | primary
    primary := NUMBER | BAND | '(' expr ')'

``BAND`` terminals are written ``R<wavelength>`` with the wavelength in
nanometers, e.g. ``R800`` or ``R531.5``. Parsing is total over this grammar;
anything else raises ExpressionSyntaxError with the offending position.
Wavelengths are bound to concrete grid bands later, not at parse time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

import numpy as np

from ..errors import EvaluationError, ExpressionSyntaxError

Node = Union["Num", "Band", "Neg", "BinOp"]


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Band:
    wavelength_nm: float


@dataclass(frozen=True)
class Neg:
    operand: Node


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: Node
    right: Node


_TOKEN_RE = re.compile(
    r"""
    (?P<band>   R\d+(?:\.\d+)? )
  | (?P<number> \d+(?:\.\d+)?(?:[eE][+-]?\d+)? )
  | (?P<op>     [+\-*/()] )
  | (?P<ws>     \s+ )
  | (?P<bad>    . )
    """,
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        kind = m.lastgroup
        if kind == "ws":
            continue
        if kind == "bad":
            raise ExpressionSyntaxError(f"unexpected character {m.group()!r}", m.start())
        tokens.append((kind, m.group(), m.start()))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def _error(self, expected: str):
        tok = self._peek()
        if tok is None:
            raise ExpressionSyntaxError(f"unexpected end of input, expected {expected}", len(self.text))
        raise ExpressionSyntaxError(f"unexpected {tok[1]!r}, expected {expected}", tok[2])

    def parse(self) -> Node:
        node = self._expr()
        tok = self._peek()
        if tok is not None:
            raise ExpressionSyntaxError(f"unexpected {tok[1]!r} after expression", tok[2])
        return node

    def _expr(self) -> Node:
        node = self._term()
        while (tok := self._peek()) is not None and tok[1] in "+-":
            self._advance()
            node = BinOp(tok[1], node, self._term())
        return node

    def _term(self) -> Node:
        node = self._factor()
        while (tok := self._peek()) is not None and tok[1] in "*/":
            self._advance()
            node = BinOp(tok[1], node, self._factor())
        return node

    def _factor(self) -> Node:
        tok = self._peek()
        if tok is not None and tok[1] == "-":
            self._advance()
            return Neg(self._factor())
        return self._primary()

    def _primary(self) -> Node:
        tok = self._peek()
        if tok is None:
            self._error("operand")
        kind, value, pos = tok
        if kind == "number":
            self._advance()
            return Num(float(value))
        if kind == "band":
            self._advance()
            return Band(float(value[1:]))
        if value == "(":
            self._advance()
            node = self._expr()
            closing = self._peek()
            if closing is None or closing[1] != ")":
                self._error("')'")
            self._advance()
            return node
        self._error("operand")


def parse_expression(text: str) -> Node:
    if not text or not text.strip():
        raise ExpressionSyntaxError("empty expression", 0)
    return _Parser(text).parse()


def wavelengths_of(node: Node) -> list[float]:
    """Sorted distinct wavelengths referenced by the expression."""
    found: set[float] = set()
    _collect_wavelengths(node, found)
    return sorted(found)


def _collect_wavelengths(node: Node, out: set[float]) -> None:
    if isinstance(node, Band):
        out.add(node.wavelength_nm)
    elif isinstance(node, Neg):
        _collect_wavelengths(node.operand, out)
    elif isinstance(node, BinOp):
        _collect_wavelengths(node.left, out)
        _collect_wavelengths(node.right, out)


def evaluate(node: Node, reflectance_at: dict[float, float]) -> float:
    """Evaluate against a wavelength -> reflectance mapping.

    Division by an exact zero raises EvaluationError; the caller decides
    what to do with the affected sample.
    """
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Band):
        return reflectance_at[node.wavelength_nm]
    if isinstance(node, Neg):
        return -evaluate(node.operand, reflectance_at)
    left = evaluate(node.left, reflectance_at)
    right = evaluate(node.right, reflectance_at)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if right == 0.0:
        raise EvaluationError("division by zero")
    return left / right


_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}


def _prec(node: Node) -> int:
    if isinstance(node, BinOp):
        return _PRECEDENCE[node.op]
    if isinstance(node, Neg):
        return 3
    return 4


def _fmt_wavelength(nm: float) -> str:
    return str(int(nm)) if nm == int(nm) else repr(nm)


def serialize(node: Node) -> str:
    """Render back to formula text; reparsing yields a structurally equal tree."""
    if isinstance(node, Num):
        v = node.value
        return str(int(v)) if v == int(v) and abs(v) < 1e15 else repr(v)
    if isinstance(node, Band):
        return f"R{_fmt_wavelength(node.wavelength_nm)}"
    if isinstance(node, Neg):
        inner = serialize(node.operand)
        if _prec(node.operand) < 3:
            inner = f"({inner})"
        return f"-{inner}"
    left = serialize(node.left)
    right = serialize(node.right)
    prec = _PRECEDENCE[node.op]
    if _prec(node.left) < prec:
        left = f"({left})"
    # the grammar is left-associative, so an unparenthesized right operand of
    # equal precedence would re-associate on reparse
    if _prec(node.right) <= prec:
        right = f"({right})"
    return f"{left} {node.op} {right}"


def evaluate_vector(node: Node, columns: dict[float, np.ndarray], n: int) -> np.ndarray:
    """Vectorized evaluation over per-wavelength reflectance columns.

    Zero denominators surface as NaN entries instead of raising, so callers
    can drop exactly the affected rows.
    """
    if isinstance(node, Num):
        return np.full(n, node.value)
    if isinstance(node, Band):
        return columns[node.wavelength_nm].astype(float)
    if isinstance(node, Neg):
        return -evaluate_vector(node.operand, columns, n)
    left = evaluate_vector(node.left, columns, n)
    right = evaluate_vector(node.right, columns, n)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    with np.errstate(divide="ignore", invalid="ignore"):
        out = left / right
    out = np.where(right == 0.0, np.nan, out)
    return out
