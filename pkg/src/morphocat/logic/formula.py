"""Modal formulas: AST, parser and printer.

ASCII syntax::

    T  F  p  !A  []A  <>A  A & B  A | B  A -> B  (A)

Unary operators bind tightest, then ``&``, ``|``, ``->``.  ``&`` and ``|``
associate to the left, ``->`` to the right.  The unicode symbols
``⊤ ⊥ ¬ □ ◇ ∧ ∨ ⇒ →`` are accepted as aliases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping

from ..errors import ParseError


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return print_formula(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class Prop(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class Box(Formula):
    arg: Formula


@dataclass(frozen=True)
class Diamond(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


UNARY = (Not, Box, Diamond)
BINARY = (And, Or, Implies)

_PREC = {Implies: 1, Or: 2, And: 3}
_SYM = {Implies: "->", Or: "|", And: "&", Not: "!", Box: "[]", Diamond: "<>"}


def iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def props(f: Formula) -> set[str]:
    if isinstance(f, Prop):
        return {f.name}
    if isinstance(f, UNARY):
        return props(f.arg)
    if isinstance(f, BINARY):
        return props(f.left) | props(f.right)
    return set()


def substitute(f: Formula, sub: Mapping[str, Formula]) -> Formula:
    if isinstance(f, Prop):
        return sub.get(f.name, f)
    if isinstance(f, UNARY):
        return type(f)(substitute(f.arg, sub))
    if isinstance(f, BINARY):
        return type(f)(substitute(f.left, sub), substitute(f.right, sub))
    return f


def depth(f: Formula) -> int:
    if isinstance(f, UNARY):
        return 1 + depth(f.arg)
    if isinstance(f, BINARY):
        return 1 + max(depth(f.left), depth(f.right))
    return 0


# ---------------------------------------------------------------- printing


def print_formula(f: Formula) -> str:
    if isinstance(f, Top):
        return "T"
    if isinstance(f, Bot):
        return "F"
    if isinstance(f, Prop):
        return f.name
    if isinstance(f, UNARY):
        inner = print_formula(f.arg)
        if isinstance(f.arg, BINARY):
            inner = f"({inner})"
        return _SYM[type(f)] + inner
    op = type(f)
    p = _PREC[op]
    left, right = print_formula(f.left), print_formula(f.right)
    lp = _PREC.get(type(f.left), 99)
    rp = _PREC.get(type(f.right), 99)
    if op is Implies:
        # right-associative
        if lp <= p:
            left = f"({left})"
        if rp < p:
            right = f"({right})"
    else:
        if lp < p:
            left = f"({left})"
        if rp <= p:
            right = f"({right})"
    return f"{left} {_SYM[op]} {right}"


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(
    r"\s*(?:(?P<arrow>->|⇒|→)|(?P<box>\[\]|□)|(?P<dia><>|◇)|(?P<op>[!&|()¬∧∨])"
    r"|(?P<top>⊤)|(?P<bot>⊥)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*))"
)
_ALIAS = {"¬": "!", "∧": "&", "∨": "|"}


def _tokenize(text: str) -> Iterator[tuple[str, int]]:
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        kind = m.lastgroup
        val = m.group(kind)
        if kind == "arrow":
            val = "->"
        elif kind == "box":
            val = "[]"
        elif kind == "dia":
            val = "<>"
        elif kind == "top":
            val = "T"
        elif kind == "bot":
            val = "F"
        elif kind == "op":
            val = _ALIAS.get(val, val)
        yield val, start
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = list(_tokenize(text))
        self.i = 0

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def pos(self) -> int:
        return self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.pos())
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", self.pos())
        self.i += 1
        return tok

    def parse(self) -> Formula:
        if not self.toks:
            raise ParseError("empty formula", 0)
        f = self.implication()
        if self.peek() is not None:
            raise ParseError(f"unexpected {self.peek()!r}", self.pos())
        return f

    def implication(self) -> Formula:
        left = self.disjunction()
        if self.peek() == "->":
            self.take()
            return Implies(left, self.implication())
        return left

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.unary())
        if tok == "[]":
            self.take()
            return Box(self.unary())
        if tok == "<>":
            self.take()
            return Diamond(self.unary())
        return self.atom()

    def atom(self) -> Formula:
        pos = self.pos()
        tok = self.take()
        if tok == "(":
            f = self.implication()
            self.take(")")
            return f
        if tok == "T":
            return Top()
        if tok == "F":
            return Bot()
        if tok in ("->", "|", "&", ")"):
            raise ParseError(f"unexpected {tok!r}", pos)
        return Prop(tok)


def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()
