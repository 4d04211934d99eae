"""Recursive-descent parser for the ASCII expression grammar.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

The parser produces a small tuple-based syntax tree; evaluation is done by
the caller through an ``Algebra`` adapter, so the same grammar serves
field elements, polynomials and generator words.
"""
from __future__ import annotations

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ExprSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.message = message
        self.text = text
        self.pos = pos


class UnknownSymbolError(ValueError):
    def __init__(self, name: str, pos: int):
        super().__init__(f"unknown symbol {name!r} at position {pos}")
        self.name = name
        self.pos = pos


def tokenize(text: str) -> list[tuple[str, object, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ExprSyntaxError(f"unexpected character {ch!r}", text, m.start(3))
            out.append(("op", ch, m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self):
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def fail(self, message: str, tok=None):
        tok = tok or self.peek()
        raise ExprSyntaxError(message, self.text, tok[2])

    def parse(self):
        if self.peek()[0] == "end":
            self.fail("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            self.fail("unexpected token")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()
            rhs = self.term()
            node = ("add" if op[1] == "+" else "sub", node, rhs, op[2])
        return node

    def term(self):
        node = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            op = self.take()
            rhs = self.unary()
            node = ("mul" if op[1] == "*" else "div", node, rhs, op[2])
        return node

    def unary(self):
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return ("neg", self.unary(), tok[2])
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek()[:2] == ("op", "^"):
            op = self.take()
            tok = self.take()
            if tok[0] != "int":
                self.fail("exponent must be a nonnegative integer", tok)
            node = ("pow", node, tok[1], op[2])
        return node

    def atom(self):
        tok = self.take()
        if tok[0] == "int":
            return ("int", tok[1], tok[2])
        if tok[0] == "name":
            return ("sym", tok[1], tok[2])
        if tok[:2] == ("op", "("):
            node = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.fail("missing ')'")
            self.take()
            return node
        self.fail("expected a number, symbol or '('", tok)


def parse_tree(text: str):
    return _Parser(text).parse()


class Algebra:
    """Evaluation adapter; subclasses supply the ring operations."""

    def integer(self, k: int):
        raise NotImplementedError

    def symbol(self, name: str, pos: int):
        raise UnknownSymbolError(name, pos)

    def divide(self, a, b, pos: int):
        return a / b


def evaluate_tree(node, alg: Algebra):
    kind = node[0]
    if kind == "int":
        return alg.integer(node[1])
    if kind == "sym":
        return alg.symbol(node[1], node[2])
    if kind == "neg":
        return -evaluate_tree(node[1], alg)
    if kind == "pow":
        return evaluate_tree(node[1], alg) ** node[2]
    a = evaluate_tree(node[1], alg)
    b = evaluate_tree(node[2], alg)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    return alg.divide(a, b, node[3])


def evaluate(text: str, alg: Algebra):
    return evaluate_tree(parse_tree(text), alg)
