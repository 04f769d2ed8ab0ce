"""A small exact expression language for colorings.

Grammar::

    expr    := term (("+" | "-") term)*
    term    := unary (("*" | "/" | "mod" | "%") unary)*
    unary   := "-" unary | primary
    primary := INT | VAR | "floor" "(" expr ")" | "(" expr ")"

Variables are ``x``, ``y``, ``z`` (coordinates 1..3) or ``x1`` .. ``xn``.
Values are QuadScalars, so evaluation is exact on Q(sqrt d) points.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .errors import ColoringSyntaxError, NonIntegerMod, UnknownIdentifier
from .scalar import QuadScalar, qs


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Var:
    index: int
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Node"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Floor:
    arg: "Node"


Node = Union[Num, Var, Neg, BinOp, Floor]

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>[-+*/%()])"
)
_NAMED = {"x": 0, "y": 1, "z": 2}


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        col = pos - line_start + 1
        if m is None:
            raise ColoringSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind != "ws":
            word = m.group()
            if kind == "name" and word == "mod":
                kind = "op"
            toks.append(_Tok(kind, word, line, col))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Tok:
        t = self.take()
        if t.text != text:
            found = t.text or "end of input"
            raise ColoringSyntaxError(f"expected {text!r}, found {found!r}", t.line, t.col)
        return t

    def parse(self) -> Node:
        node = self.expr()
        t = self.peek()
        if t.kind != "eof":
            raise ColoringSyntaxError(f"unexpected {t.text!r}", t.line, t.col)
        return node

    def expr(self) -> Node:
        node = self.term()
        while self.peek().text in ("+", "-"):
            op = self.take().text
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Node:
        node = self.unary()
        while self.peek().text in ("*", "/", "mod", "%"):
            op = self.take().text
            node = BinOp("mod" if op == "%" else op, node, self.unary())
        return node

    def unary(self) -> Node:
        if self.peek().text == "-":
            self.take()
            return Neg(self.unary())
        return self.primary()

    def primary(self) -> Node:
        t = self.take()
        if t.kind == "int":
            return Num(Fraction(int(t.text)))
        if t.text == "(":
            node = self.expr()
            self.expect(")")
            return node
        if t.kind == "name":
            if t.text == "floor":
                self.expect("(")
                node = self.expr()
                self.expect(")")
                return Floor(node)
            return Var(_var_index(t), t.text)
        found = t.text or "end of input"
        raise ColoringSyntaxError(f"unexpected {found!r}", t.line, t.col)


def _var_index(t: _Tok) -> int:
    if t.text in _NAMED:
        return _NAMED[t.text]
    m = re.fullmatch(r"x([1-9]\d*)", t.text)
    if m:
        return int(m.group(1)) - 1
    raise UnknownIdentifier(f"unknown identifier {t.text!r} at line {t.line}, column {t.col}")


def parse(text: str) -> Node:
    return _Parser(text).parse()


def max_var(node: Node) -> int:
    """Highest coordinate index used (-1 if none)."""
    if isinstance(node, Var):
        return node.index
    if isinstance(node, (Neg, Floor)):
        return max_var(node.arg)
    if isinstance(node, BinOp):
        return max(max_var(node.left), max_var(node.right))
    return -1


def _mod(a: QuadScalar, b: QuadScalar) -> QuadScalar:
    if not (a.is_integer() and b.is_integer()):
        raise NonIntegerMod(f"mod needs integer operands, got {a} mod {b}")
    if b == 0:
        raise ZeroDivisionError("mod by zero")
    return qs(int(a) % int(b))


def _apply(op: str, a: QuadScalar, b: QuadScalar) -> QuadScalar:
    if op == "+":
        return a + b
    if op == "-":
        return a - b
    if op == "*":
        return a * b
    if op == "/":
        return a / b
    return _mod(a, b)


def _lookup(coords: Sequence[QuadScalar], node: Var) -> QuadScalar:
    if node.index >= len(coords):
        raise UnknownIdentifier(f"variable {node.name!r} undefined for a {len(coords)}-dimensional point")
    return coords[node.index]


def evaluate(node: Node, coords: Sequence[QuadScalar]) -> QuadScalar:
    """Reference interpreter: plain recursion over the tree."""
    if isinstance(node, Num):
        return qs(node.value)
    if isinstance(node, Var):
        return _lookup(coords, node)
    if isinstance(node, Neg):
        return -evaluate(node.arg, coords)
    if isinstance(node, Floor):
        return qs(math.floor(evaluate(node.arg, coords)))
    return _apply(node.op, evaluate(node.left, coords), evaluate(node.right, coords))


Compiled = Callable[[Sequence[QuadScalar]], QuadScalar]


def compile_expr(node: Node) -> Compiled:
    """Compile to nested closures, folding constant subtrees."""
    fn, const = _compile(node)
    if const is not None:
        return lambda coords, _c=const: _c
    return fn


def _compile(node: Node) -> tuple[Compiled, QuadScalar | None]:
    if isinstance(node, Num):
        v = qs(node.value)
        return (lambda coords: v), v
    if isinstance(node, Var):
        i, name = node.index, node.name

        def var(coords):
            if i >= len(coords):
                raise UnknownIdentifier(f"variable {name!r} undefined for a {len(coords)}-dimensional point")
            return coords[i]

        return var, None
    if isinstance(node, Neg):
        f, c = _compile(node.arg)
        if c is not None:
            v = -c
            return (lambda coords: v), v
        return (lambda coords: -f(coords)), None
    if isinstance(node, Floor):
        f, c = _compile(node.arg)
        if c is not None:
            v = qs(math.floor(c))
            return (lambda coords: v), v
        return (lambda coords: qs(math.floor(f(coords)))), None
    lf, lc = _compile(node.left)
    rf, rc = _compile(node.right)
    op = node.op
    if lc is not None and rc is not None:
        try:
            v = _apply(op, lc, rc)
        except (ZeroDivisionError, NonIntegerMod):
            pass  # left for evaluation time so the error carries the point
        else:
            return (lambda coords: v), v
    if op == "mod" and rc is not None and rc.is_integer() and rc != 0:
        m = int(rc)

        def mod_const(coords):
            a = lf(coords)
            if not a.is_integer():
                raise NonIntegerMod(f"mod needs integer operands, got {a} mod {m}")
            return qs(int(a) % m)

        return mod_const, None
    return (lambda coords: _apply(op, lf(coords), rf(coords))), None


def top_level_modulus(node: Node) -> int | None:
    """m when the expression has the form ``<...> mod m`` with literal m > 0."""
    if isinstance(node, BinOp) and node.op == "mod" and isinstance(node.right, Num):
        v = node.right.value
        if v.denominator == 1 and v > 0:
            return int(v)
    return None
