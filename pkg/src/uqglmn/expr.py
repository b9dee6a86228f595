"""A small expression language for elements, and its evaluator.

Grammar (LL(1), whitespace insensitive)::

    sum      := product (("+" | "-") product)*
    product  := unary (("*" | "/") unary)*
    unary    := "-" unary | power
    power    := atom ("^" exponent)?
    exponent := ["-"] INT | "{" linear "}"          (braces only after q)
    linear   := ["-"] lterm (("+" | "-") lterm)*
    lterm    := INT ["*" KIDX] | KIDX
    atom     := INT | "q" | ("E" | "F") "[" INT "," INT "]"
              | "scomm" "(" sum "," sum ")" | "(" sum ")"

``q^{2*K1-K3}`` is the Cartan exponential; a constant inside the braces is an
ordinary power of q.  ``^`` accepts generator atoms and scalars only, and
negative exponents only scalars.  The text form produced by
:func:`uqglmn.render.render_text` is a sentence of this grammar.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .pbw import Algebra, Element
from .rootdata import Superdim

__all__ = [
    "ExprError",
    "ExprSyntaxError",
    "GeneratorIndexError",
    "parse",
    "evaluate",
    "parse_element",
]


class ExprError(ValueError):
    """Well-formed input that does not denote an element (e.g. division by a non-scalar)."""

    def __init__(self, msg, line=None, col=None):
        where = f"{line}:{col}: " if line is not None else ""
        super().__init__(where + msg)
        self.line, self.col = line, col


class ExprSyntaxError(SyntaxError):
    def __init__(self, msg, line, col, expected=()):
        self.expected = tuple(expected)
        text = f"{line}:{col}: {msg}"
        if expected:
            text += " (expected " + ", ".join(self.expected) + ")"
        super().__init__(text)
        self.line, self.col = line, col


class GeneratorIndexError(IndexError):
    def __init__(self, msg, line, col):
        super().__init__(f"{line}:{col}: {msg}")
        self.line, self.col = line, col


# -- syntax tree ----------------------------------------------------------------


@dataclass(frozen=True)
class Node:
    pos: tuple


@dataclass(frozen=True)
class Num(Node):
    value: int


@dataclass(frozen=True)
class QVar(Node):
    pass


@dataclass(frozen=True)
class Gen(Node):
    kind: str
    i: int
    j: int


@dataclass(frozen=True)
class CartanExp(Node):
    vector: tuple
    shift: int


@dataclass(frozen=True)
class Paren(Node):
    body: Node


@dataclass(frozen=True)
class Neg(Node):
    body: Node


@dataclass(frozen=True)
class BinOp(Node):
    op: str
    left: Node
    right: Node


@dataclass(frozen=True)
class Pow(Node):
    base: Node
    exponent: int


@dataclass(frozen=True)
class Scomm(Node):
    left: Node
    right: Node


# -- tokens -----------------------------------------------------------------------

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S)")


@dataclass(frozen=True)
class Tok:
    kind: str  # INT, NAME, a punctuation character, or EOF
    text: str
    line: int
    col: int


def _where(src, p):
    line = src.count("\n", 0, p) + 1
    return line, p - (src.rfind("\n", 0, p) + 1) + 1


def _tokenize(src: str):
    toks = []
    for m in _TOKEN.finditer(src):
        ln, col = _where(src, m.start())
        if m.group(1):
            toks.append(Tok("INT", m.group(1), ln, col))
        elif m.group(2):
            toks.append(Tok("NAME", m.group(2), ln, col))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()[]{},":
                raise ExprSyntaxError(f"unexpected character {ch!r}", ln, col)
            toks.append(Tok(ch, ch, ln, col))
    toks.append(Tok("EOF", "", *_where(src, len(src))))
    return toks


_KIDX = re.compile(r"K(\d+)$")


class _Parser:
    def __init__(self, src, dim: Superdim):
        self.toks = _tokenize(src)
        self.k = 0
        self.dim = dim

    @property
    def tok(self):
        return self.toks[self.k]

    def error(self, msg, expected=()):
        t = self.tok
        raise ExprSyntaxError(msg, t.line, t.col, expected)

    def eat(self, kind, text=None):
        t = self.tok
        if t.kind != kind or (text is not None and t.text != text):
            shown = "end of input" if t.kind == "EOF" else repr(t.text)
            self.error(f"unexpected {shown}", (text or kind,))
        self.k += 1
        return t

    def at(self, kind, text=None):
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    # grammar

    def parse(self):
        node = self.sum()
        if not self.at("EOF"):
            self.error(f"unexpected {self.tok.text!r}", ("+", "-", "*", "/", "^", "end of input"))
        return node

    def sum(self):
        node = self.product()
        while self.tok.kind in ("+", "-"):
            t = self.eat(self.tok.kind)
            node = BinOp((t.line, t.col), t.kind, node, self.product())
        return node

    def product(self):
        node = self.unary()
        while self.tok.kind in ("*", "/"):
            t = self.eat(self.tok.kind)
            node = BinOp((t.line, t.col), t.kind, node, self.unary())
        return node

    def unary(self):
        if self.at("-"):
            t = self.eat("-")
            return Neg((t.line, t.col), self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if not self.at("^"):
            return base
        t = self.eat("^")
        pos = (t.line, t.col)
        if self.at("{"):
            if not isinstance(base, QVar):
                self.error("braced exponent is only allowed on q")
            self.eat("{")
            vec, shift = self.linear()
            self.eat("}")
            return CartanExp(base.pos, vec, shift)
        neg = False
        if self.at("-"):
            self.eat("-")
            neg = True
        if not self.at("INT"):
            self.error("bad exponent", ("integer", "{"))
        e = int(self.eat("INT").text)
        if not isinstance(base, (Gen, Num, QVar, Paren)):
            raise ExprSyntaxError("'^' applies only to generators and scalars", *pos)
        if neg and isinstance(base, Gen):
            raise ExprSyntaxError("negative power of a generator", *pos)
        return Pow(pos, base, -e if neg else e)

    def linear(self):
        vec = [0] * self.dim.n
        shift = 0
        sign = 1
        if self.at("-"):
            self.eat("-")
            sign = -1
        while True:
            coeff = 1
            if self.at("INT"):
                coeff = int(self.eat("INT").text)
                if self.at("*"):
                    self.eat("*")
                else:
                    shift += sign * coeff
                    coeff = None
            if coeff is not None:
                t = self.tok
                m = _KIDX.match(t.text) if t.kind == "NAME" else None
                if not m:
                    self.error("expected a Cartan symbol", ("K<index>",))
                self.k += 1
                i = int(m.group(1))
                if not 1 <= i <= self.dim.n:
                    raise GeneratorIndexError(f"K{i} outside 1..{self.dim.n}", t.line, t.col)
                vec[i - 1] += sign * coeff
            if self.at("+"):
                self.eat("+")
                sign = 1
            elif self.at("-"):
                self.eat("-")
                sign = -1
            else:
                return tuple(vec), shift

    def atom(self):
        t = self.tok
        pos = (t.line, t.col)
        if t.kind == "INT":
            self.k += 1
            return Num(pos, int(t.text))
        if t.kind == "(":
            self.eat("(")
            body = self.sum()
            self.eat(")")
            return Paren(pos, body)
        if t.kind == "NAME":
            if t.text == "q":
                self.k += 1
                return QVar(pos)
            if t.text in ("E", "F"):
                self.k += 1
                self.eat("[")
                i = int(self.eat("INT").text)
                self.eat(",")
                j = int(self.eat("INT").text)
                self.eat("]")
                n = self.dim.n
                if not (1 <= i < j <= n):
                    raise GeneratorIndexError(
                        f"{t.text}[{i},{j}] needs 1 <= i < j <= {n}", t.line, t.col
                    )
                return Gen(pos, t.text, i, j)
            if t.text == "scomm":
                self.k += 1
                self.eat("(")
                a = self.sum()
                self.eat(",")
                b = self.sum()
                self.eat(")")
                return Scomm(pos, a, b)
            self.error(f"unknown name {t.text!r}", ("E", "F", "q", "scomm"))
        shown = "end of input" if t.kind == "EOF" else repr(t.text)
        self.error(f"unexpected {shown}", ("integer", "q", "E[i,j]", "F[i,j]", "scomm(", "("))


def parse(src: str, dim: Superdim) -> Node:
    """Parse ``src`` into a syntax tree for the algebra of ``dim``."""
    return _Parser(src, dim).parse()


def evaluate(node: Node, alg: Algebra) -> Element:
    """Evaluate a syntax tree to a normalized element of ``alg``."""
    ev = lambda x: evaluate(x, alg)
    if isinstance(node, Num):
        return alg.scalar(node.value)
    if isinstance(node, QVar):
        return alg.scalar(alg.qpow(1))
    if isinstance(node, Gen):
        return alg.E(node.i, node.j) if node.kind == "E" else alg.F(node.i, node.j)
    if isinstance(node, CartanExp):
        return alg.cartan(node.vector).scale(alg.qpow(node.shift))
    if isinstance(node, Paren):
        return ev(node.body)
    if isinstance(node, Neg):
        return -ev(node.body)
    if isinstance(node, Scomm):
        return alg.supercommutator(ev(node.left), ev(node.right))
    if isinstance(node, Pow):
        base = ev(node.base)
        if isinstance(node.base, Gen) or node.exponent >= 0 and not base.is_scalar():
            if not isinstance(node.base, Gen):
                raise ExprError("'^' applies only to generators and scalars", *node.pos)
            return base ** node.exponent
        s = base.scalar_part()
        if node.exponent < 0:
            if not s:
                raise ExprError("zero to a negative power", *node.pos)
            return alg.scalar((1 / s) ** (-node.exponent))
        return alg.scalar(s ** node.exponent)
    if isinstance(node, BinOp):
        a, b = ev(node.left), ev(node.right)
        if node.op == "+":
            return a + b
        if node.op == "-":
            return a - b
        if node.op == "*":
            return a * b
        if not b.is_scalar():
            raise ExprError("division by a non-scalar", *node.pos)
        s = b.scalar_part()
        if not s:
            raise ExprError("division by zero", *node.pos)
        return a.scale(1 / s)
    raise TypeError(f"not an expression node: {node!r}")


def parse_element(src: str, alg: Algebra) -> Element:
    return evaluate(parse(src, alg.dim), alg)
