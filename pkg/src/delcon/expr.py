"""Parser for polynomial expressions such as ``x*y^n + n*s*t``.

Expressions use the polynomial variables r, s, t, x, y, integer literals,
``+ - * ^`` and parentheses. The name ``n`` is allowed when the caller binds
it to an integer (the loop count of a base case).
"""

from __future__ import annotations

import re
from typing import Callable

from .poly import VARS, Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


class ExprError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - regex always matches non-space
            raise ExprError(f"unexpected input at column {pos + 1}")
        num, name, op = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            out.append(("num", num, col))
        elif name is not None:
            out.append(("name", name, col))
        elif op in "+-*^()":
            out.append(("op", op, col))
        else:
            raise ExprError(f"unexpected character {op!r} at column {col}")
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text: str, names: set[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.names = names

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op: str):
        kind, val, col = self.take()
        if kind != "op" or val != op:
            raise ExprError(f"expected {op!r} at column {col}, found {val or 'end of input'!r}")

    def parse(self):
        node = self.expr()
        kind, val, col = self.peek()
        if kind != "end":
            raise ExprError(f"unexpected {val!r} at column {col}")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = (op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            node = ("*", node, self.unary())
        return node

    def unary(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return ("neg", self.unary())
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            return ("^", base, self.unary())
        return base

    def atom(self):
        kind, val, col = self.take()
        if kind == "num":
            return ("num", int(val))
        if kind == "name":
            if val not in self.names:
                raise ExprError(f"unknown name {val!r} at column {col}")
            return ("name", val)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        raise ExprError(f"unexpected {val or 'end of input'!r} at column {col}")


def _evaluate(node, env: dict[str, int]) -> Poly:
    kind = node[0]
    if kind == "num":
        return Poly.const(node[1])
    if kind == "name":
        name = node[1]
        if name in env:
            return Poly.const(env[name])
        return Poly.var(name)
    if kind == "neg":
        return -_evaluate(node[1], env)
    a = _evaluate(node[1], env)
    b = _evaluate(node[2], env)
    if kind == "+":
        return a + b
    if kind == "-":
        return a - b
    if kind == "*":
        return a * b
    if not b.is_constant() or b.constant_value() < 0:
        raise ExprError(f"exponent must be a non-negative integer, got {b}")
    return a ** b.constant_value()


def parse_poly(text: str) -> Poly:
    return _evaluate(_Parser(text, set(VARS)).parse(), {})


def parse_base(text: str) -> Callable[[int], Poly]:
    """Compile an expression in ``n`` into a function ``n -> Poly``."""
    tree = _Parser(text, set(VARS) | {"n"}).parse()
    _evaluate(tree, {"n": 0})  # surface exponent errors early

    def base(n: int) -> Poly:
        return _evaluate(tree, {"n": n})

    return base
