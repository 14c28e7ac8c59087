"""Element and polynomial literal parser.

Grammar (whitespace insensitive)::

    poly    := '[' [ expr (',' expr)* ] ']'
    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := atom ('^' INT)?
    atom    := INT | NAME | '#' INT | '(' expr ')' | '(' expr ',' expr ')' | matrix
    matrix  := '[' row (',' row)* ']'
    row     := '[' expr (',' expr)* ']'

Integers denote multiples of unity, ``#k`` is the raw element index ``k``,
names resolve to the ring's generator symbol (``t`` in ``Z2[t]/(t^2)``) or
to a name of its coefficient ring. Matrix literals are evaluated entrywise in
the coefficient ring; pair literals build elements of product rings.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    text: str
    line: int
    col: int


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        line = text.count("\n", 0, start) + 1
        col = start - (text.rfind("\n", 0, start) + 1) + 1
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), line, col))
        elif m.group(2) is not None:
            tokens.append(Token("name", m.group(2), line, col))
        elif m.group(3) is not None:
            if m.group(3) not in "+-*^#()[],":
                raise ParseError(f"unexpected character {m.group(3)!r}", line, col)
            tokens.append(Token("op", m.group(3), line, col))
        pos = m.end()
    line = text.count("\n") + 1
    col = len(text) - (text.rfind("\n") + 1) + 1
    tokens.append(Token("end", "", line, col))
    return tokens


# AST nodes -----------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Name:
    name: str
    line: int = 1
    col: int = 1


@dataclass(frozen=True)
class RawIndex:
    index: int


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Neg:
    operand: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Matrix:
    rows: tuple


@dataclass(frozen=True)
class Pair:
    left: object
    right: object


class _Parser:
    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def tok(self):
        return self.tokens[self.pos]

    def error(self, msg, tok=None):
        tok = tok or self.tok
        return ParseError(msg, tok.line, tok.col)

    def accept(self, text):
        if self.tok.kind == "op" and self.tok.text == text:
            self.pos += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            got = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, got {got!r}")

    def expect_end(self):
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r}")

    def expr(self):
        node = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.tok.text
            self.pos += 1
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.accept("*"):
            node = BinOp("*", node, self.unary())
        return node

    def unary(self):
        if self.accept("-"):
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.atom()
        if self.accept("^"):
            if self.tok.kind != "int":
                raise self.error("exponent must be a non-negative integer")
            exp = int(self.tok.text)
            self.pos += 1
            node = Pow(node, exp)
        return node

    def atom(self):
        tok = self.tok
        if tok.kind == "int":
            self.pos += 1
            return Num(int(tok.text))
        if tok.kind == "name":
            self.pos += 1
            return Name(tok.text, tok.line, tok.col)
        if self.accept("#"):
            if self.tok.kind != "int":
                raise self.error("expected an index after '#'")
            idx = int(self.tok.text)
            self.pos += 1
            return RawIndex(idx)
        if self.accept("("):
            inner = self.expr()
            if self.accept(","):
                right = self.expr()
                self.expect(")")
                return Pair(inner, right)
            self.expect(")")
            return inner
        if tok.kind == "op" and tok.text == "[":
            return self.matrix()
        raise self.error(f"unexpected {tok.text or 'end of input'!r}")

    def matrix(self):
        self.expect("[")
        rows = [self.row()]
        while self.accept(","):
            rows.append(self.row())
        self.expect("]")
        if len({len(r) for r in rows}) != 1:
            raise self.error("matrix rows have different lengths")
        return Matrix(tuple(rows))

    def row(self):
        if not (self.tok.kind == "op" and self.tok.text == "["):
            raise self.error("matrix literal rows must be bracketed lists")
        self.expect("[")
        items = [self.expr()]
        while self.accept(","):
            items.append(self.expr())
        self.expect("]")
        return tuple(items)

    def poly(self):
        self.expect("[")
        items = []
        if not self.accept("]"):
            items.append(self.expr())
            while self.accept(","):
                items.append(self.expr())
            self.expect("]")
        return items


def parse_element(text):
    """Parse an element expression into an AST."""
    p = _Parser(text)
    node = p.expr()
    p.expect_end()
    return node


def parse_poly(text):
    """Parse a coefficient-list literal (low to high degree) into a list of ASTs."""
    p = _Parser(text)
    items = p.poly()
    p.expect_end()
    return items


def evaluate(node, ring):
    """Evaluate an AST to an element index of ``ring``."""
    if isinstance(node, Num):
        return ring.scalar(node.value)
    if isinstance(node, RawIndex):
        if not 0 <= node.index < ring.order:
            raise ParseError(f"index #{node.index} outside ring of order {ring.order}")
        return node.index
    if isinstance(node, Name):
        idx = ring.resolve_name(node.name)
        if idx is None:
            raise ParseError(f"unknown name {node.name!r}", node.line, node.col)
        return idx
    if isinstance(node, Neg):
        return ring.neg(evaluate(node.operand, ring))
    if isinstance(node, Pow):
        b = evaluate(node.base, ring)
        acc = ring.one
        for _ in range(node.exponent):
            acc = ring.mul(acc, b)
        return acc
    if isinstance(node, BinOp):
        a = evaluate(node.left, ring)
        b = evaluate(node.right, ring)
        if node.op == "+":
            return ring.add(a, b)
        if node.op == "-":
            return ring.sub(a, b)
        return ring.mul(a, b)
    if isinstance(node, Matrix):
        return ring.from_matrix_ast(node)
    if isinstance(node, Pair):
        return ring.from_pair_ast(node)
    raise TypeError(f"not an expression node: {node!r}")


def element(ring, text):
    """Parse and evaluate ``text`` as an element of ``ring``; ints pass through as indices."""
    if isinstance(text, (int,)) and not isinstance(text, bool):
        return ring.scalar(text)
    return evaluate(parse_element(str(text)), ring)
