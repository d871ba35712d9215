"""A small expression language for symmetric-function identities.

Grammar (whitespace is insignificant)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | primary ('^' nat)*
    primary  := rational | atom | '(' expr ')'
    rational := nat ('/' nat)?
    atom     := basis '[' nat (',' nat)* ']' '(' alphabet ')'
    basis    := 'p' | 'h' | 'e' | 'm'
    alphabet := 'X' | 'X/(1-t*X)'

``p[2,1](X)`` is the product p_2 p_1 (likewise for e and h); ``m[2,1](X)``
is the monomial function m_{21}.  ``X/(1-t*X)`` is the transformed alphabet
x_r/(1 - t x_r).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import BiSeries
from .partitions import Partition
from .symfunc import (
    BASES,
    basis_poly,
    transformed_basis_series,
    transformed_monomial_series,
)

__all__ = [
    "DSLSyntaxError",
    "Num",
    "Atom",
    "Add",
    "Sub",
    "Mul",
    "Neg",
    "Pow",
    "parse",
    "to_text",
    "degree",
    "evaluate",
]


class DSLSyntaxError(ValueError):
    def __init__(self, message, text, pos):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        self.line, self.column = line, col
        super().__init__(f"{message} at line {line}, column {col}")


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Atom:
    basis: str
    parts: Partition
    transformed: bool = False


@dataclass(frozen=True)
class Add:
    left: object
    right: object


@dataclass(frozen=True)
class Sub:
    left: object
    right: object


@dataclass(frozen=True)
class Mul:
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(.))", re.S)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("NUM", m.group(1), start))
        elif m.group(2):
            tokens.append(("NAME", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[],":
                raise DSLSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("EOF", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return DSLSyntaxError(message, self.text, tok[2])

    def take(self, kind, value=None):
        tok = self.tok
        if tok[0] != kind or (value is not None and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise self.error(f"expected {want!r}, found {got!r}")
        self.i += 1
        return tok

    def expr(self):
        node = self.term()
        while self.tok[0] in ("+", "-"):
            op = self.take(self.tok[0])[0]
            right = self.term()
            node = Add(node, right) if op == "+" else Sub(node, right)
        return node

    def term(self):
        node = self.factor()
        while self.tok[0] == "*":
            self.take("*")
            node = Mul(node, self.factor())
        return node

    def factor(self):
        if self.tok[0] == "-":
            self.take("-")
            return Neg(self.factor())
        node = self.primary()
        while self.tok[0] == "^":
            self.take("^")
            node = Pow(node, int(self.take("NUM")[1]))
        return node

    def primary(self):
        kind = self.tok[0]
        if kind == "NUM":
            num = int(self.take("NUM")[1])
            if self.tok[0] == "/":
                self.take("/")
                den_tok = self.take("NUM")
                if int(den_tok[1]) == 0:
                    raise self.error("zero denominator", den_tok)
                return Num(Fraction(num, int(den_tok[1])))
            return Num(Fraction(num))
        if kind == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if kind == "NAME":
            return self.atom()
        raise self.error(f"unexpected {self.tok[1] or 'end of input'!r}")

    def atom(self):
        name_tok = self.take("NAME")
        if name_tok[1] not in BASES:
            raise self.error(f"unknown basis letter {name_tok[1]!r}", name_tok)
        open_tok = self.take("[")
        parts = [int(self.take("NUM")[1])]
        while self.tok[0] == ",":
            self.take(",")
            parts.append(int(self.take("NUM")[1]))
        self.take("]")
        try:
            mu = Partition(parts)
        except ValueError as exc:
            raise self.error(f"malformed partition: {exc}", open_tok) from None
        if not mu:
            raise self.error("malformed partition: empty", open_tok)
        self.take("(")
        self.take("NAME", "X")
        transformed = False
        if self.tok[0] == "/":
            for kind, value in (("/", None), ("(", None), ("NUM", "1"), ("-", None),
                                ("NAME", "t"), ("*", None), ("NAME", "X"), (")", None)):
                self.take(kind, value)
            transformed = True
        self.take(")")
        return Atom(name_tok[1], mu, transformed)


def parse(text: str):
    """Parse ``text`` into an expression tree; raises DSLSyntaxError."""
    p = _Parser(text)
    node = p.expr()
    if p.tok[0] != "EOF":
        raise p.error(f"unexpected {p.tok[1]!r}")
    return node


_PREC = {Add: 1, Sub: 1, Mul: 2, Neg: 3, Pow: 4, Num: 5, Atom: 5}


def to_text(node) -> str:
    """Print ``node`` so that parse(to_text(node)) == node."""
    def wrap(child, min_prec):
        s = to_text(child)
        return f"({s})" if _PREC[type(child)] < min_prec else s

    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, Atom):
        parts = ",".join(str(p) for p in node.parts)
        alphabet = "X/(1-t*X)" if node.transformed else "X"
        return f"{node.basis}[{parts}]({alphabet})"
    if isinstance(node, Add):
        return f"{wrap(node.left, 1)} + {wrap(node.right, 2)}"
    if isinstance(node, Sub):
        return f"{wrap(node.left, 1)} - {wrap(node.right, 2)}"
    if isinstance(node, Mul):
        return f"{wrap(node.left, 2)}*{wrap(node.right, 3)}"
    if isinstance(node, Neg):
        return f"-{wrap(node.operand, 3)}"
    if isinstance(node, Pow):
        return f"{wrap(node.base, 4)}^{node.exponent}"
    raise TypeError(f"not an expression node: {node!r}")


def degree(node) -> int:
    """Degree in X of the t^0 part; the lower bound on the variable count."""
    if isinstance(node, Num):
        return 0
    if isinstance(node, Atom):
        return node.parts.weight
    if isinstance(node, (Add, Sub)):
        return max(degree(node.left), degree(node.right))
    if isinstance(node, Mul):
        return degree(node.left) + degree(node.right)
    if isinstance(node, Neg):
        return degree(node.operand)
    if isinstance(node, Pow):
        return degree(node.base) * node.exponent
    raise TypeError(f"not an expression node: {node!r}")


@lru_cache(maxsize=None)
def _atom_series(atom: Atom, N: int, t_order: int) -> BiSeries:
    if not atom.transformed:
        return BiSeries.constant(t_order, 0, N, basis_poly(atom.basis, atom.parts, N))
    if atom.basis == "m":
        return transformed_monomial_series(atom.parts, N, t_order)
    out = BiSeries.one(t_order, 0, N)
    for part in atom.parts:
        out = out * transformed_basis_series(atom.basis, part, N, t_order)
    return out


def evaluate(node, N: int, t_order: int = 0) -> BiSeries:
    """Exact value of ``node`` in N variables, truncated at t^t_order."""
    if N < max(degree(node), 1):
        raise ValueError(f"{N} variables are not enough for an expression of degree {degree(node)}")
    return _eval(node, N, t_order)


def _eval(node, N, t_order):
    if isinstance(node, Num):
        return BiSeries.constant(t_order, 0, N, node.value)
    if isinstance(node, Atom):
        return _atom_series(node, N, t_order)
    if isinstance(node, Add):
        return _eval(node.left, N, t_order) + _eval(node.right, N, t_order)
    if isinstance(node, Sub):
        return _eval(node.left, N, t_order) - _eval(node.right, N, t_order)
    if isinstance(node, Mul):
        return _eval(node.left, N, t_order) * _eval(node.right, N, t_order)
    if isinstance(node, Neg):
        return -_eval(node.operand, N, t_order)
    if isinstance(node, Pow):
        return _eval(node.base, N, t_order) ** node.exponent
    raise TypeError(f"not an expression node: {node!r}")
