"""A tiny arithmetic expression language.

Grammar (left associative, ``^`` binds tightest and is right associative)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | power
    power  := atom ('^' unary)?
    atom   := INT | NAME | '(' expr ')'

Evaluation is done with Python operators on whatever values the namespace
binds, so the same parser serves field elements and algebra elements.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}, column {column}: "
        super().__init__(where + message)


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str
    column: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


def tokenize(text):
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        col = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), col))
        elif m.group(2):
            tokens.append(("name", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", column=col + 1)
            tokens.append(("op", ch, col))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, value=None):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", column=len(self.text) + 1)
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1]!r}", column=tok[2] + 1)
        self.i += 1
        return tok

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression", column=1)
        node = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"unexpected {tok[1]!r}", column=tok[2] + 1)
        return node

    def expr(self):
        node = self.term()
        while (tok := self.peek()) is not None and tok[1] in ("+", "-") and tok[0] == "op":
            self.take()
            node = BinOp(tok[1], node, self.term())
        return node

    def term(self):
        node = self.unary()
        while (tok := self.peek()) is not None and tok[1] in ("*", "/") and tok[0] == "op":
            self.take()
            node = BinOp(tok[1], node, self.unary())
        return node

    def unary(self):
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.take()
            node = BinOp("^", node, self.unary())
        return node

    def atom(self):
        tok = self.take()
        kind, value, col = tok
        if kind == "int":
            return Num(value)
        if kind == "name":
            return Name(value, col)
        if value == "(":
            node = self.expr()
            self.take(")")
            return node
        raise ParseError(f"unexpected {value!r}", column=col + 1)


def parse_expr(text):
    return _Parser(text).parse()


def names_in(node):
    if isinstance(node, Name):
        return {node.name}
    if isinstance(node, BinOp):
        return names_in(node.left) | names_in(node.right)
    if isinstance(node, Neg):
        return names_in(node.operand)
    return set()


def _int_value(v):
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    q = getattr(v, "as_rational", lambda: None)()
    if q is not None and q.denominator == 1:
        return int(q)
    raise ParseError("exponent must be an integer")


def evaluate(node, namespace, one=1):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Name):
        if node.name not in namespace:
            raise ParseError(f"undefined symbol {node.name!r}", column=node.column + 1)
        return namespace[node.name]
    if isinstance(node, Neg):
        return -evaluate(node.operand, namespace, one)
    left = evaluate(node.left, namespace, one)
    right = evaluate(node.right, namespace, one)
    if node.op == "+":
        return left + right
    if node.op == "-":
        return left - right
    if node.op == "*":
        return left * right
    if node.op == "/":
        if isinstance(left, int) and isinstance(right, int):
            return Fraction(left, right)
        return left / right
    k = _int_value(right)
    if isinstance(left, int):
        return Fraction(left) ** k
    return left**k


def eval_expr(text, namespace):
    return evaluate(parse_expr(text), namespace)
