"""Expression grammar, parser and canonical pretty-printer.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := ("+" | "-") unary | atom
    atom   := INT ["/" INT] | letter | "(" expr ")" | "[" [letter ("*" letter)*] "]"
    letter := "q" INT ["'"] | "i" | "j" | "k"

Juxtaposition is not a product: ``q1*q2``, never ``q1q2``.  ``[w]`` is the
bracket ``w + conj(w)`` of a word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .freealg import Alphabet, Letter, Polynomial, bracket
from .qideal import Basis, BasisElement

__all__ = [
    "ParseError", "parse_expression", "parse_ast", "parse_word", "evaluate",
    "format_poly", "format_word", "dump_basis", "load_basis",
    "Sum", "Product", "Scale", "Bracket", "LetterRef", "RationalLit",
]


class ParseError(SyntaxError):
    def __init__(self, message: str, text: str, position: int, expected=()):
        self.reason = message
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected {', '.join(self.expected)})"
        super().__init__(detail)
        self.text = text
        self.offset = position + 1


# -- AST ------------------------------------------------------------------

@dataclass(frozen=True)
class LetterRef:
    letter: Letter


@dataclass(frozen=True)
class RationalLit:
    value: Fraction


@dataclass(frozen=True)
class Bracket:
    word: tuple


@dataclass(frozen=True)
class Scale:
    factor: Fraction
    body: "Expr"


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, Expr)


Expr = Union[Sum, Product, Scale, Bracket, LetterRef, RationalLit]


# -- tokenizer ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(q(\d+)('?))|(\d+)|([ijk])(?![\w'])|([-+*/()\[\]]))")


def _tokenize(text: str) -> list:
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos,
                             ("letter", "number", "operator"))
        start = m.start(m.lastindex)
        if m.group(1):
            index = int(m.group(2))
            if index < 1:
                raise ParseError("variable index must be >= 1", text, start)
            letter = Letter.conj_var(index) if m.group(3) else Letter.var(index)
            tokens.append(("letter", letter, start))
        elif m.group(4):
            tokens.append(("int", int(m.group(4)), start))
        elif m.group(5):
            tokens.append(("letter", Letter.basis(m.group(5)), start))
        else:
            tokens.append((m.group(6), m.group(6), start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, expected=()):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(tok, expected or (repr(kind),))
        self.i += 1
        return tok

    def fail(self, tok, expected):
        what = "end of input" if tok[0] == "end" else repr(self.text[tok[2]:tok[2] + 1])
        raise ParseError(f"unexpected {what}", self.text, tok[2], expected)

    def expr(self) -> Expr:
        terms = [(1, self.term())]
        while self.peek()[0] in ("+", "-"):
            sign = 1 if self.take()[0] == "+" else -1
            terms.append((sign, self.term()))
        return terms[0][1] if len(terms) == 1 else Sum(tuple(terms))

    def term(self) -> Expr:
        factors = [self.unary()]
        while self.peek()[0] == "*":
            self.take()
            factors.append(self.unary())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def unary(self) -> Expr:
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take()
            body = self.unary()
            return body if kind == "+" else Scale(Fraction(-1), body)
        return self.atom()

    def atom(self) -> Expr:
        tok = self.peek()
        kind = tok[0]
        if kind == "int":
            self.take()
            value = Fraction(tok[1])
            if self.peek()[0] == "/":
                self.take()
                den = self.take("int", ("integer denominator",))
                if den[1] == 0:
                    raise ParseError("zero denominator", self.text, den[2])
                value /= den[1]
            return RationalLit(value)
        if kind == "letter":
            self.take()
            return LetterRef(tok[1])
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")", ("')'",))
            return inner
        if kind == "[":
            self.take()
            letters = []
            if self.peek()[0] != "]":
                letters.append(self.take("letter", ("letter",))[1])
                while self.peek()[0] == "*":
                    self.take()
                    letters.append(self.take("letter", ("letter",))[1])
            self.take("]", ("'*'", "']'"))
            return Bracket(tuple(letters))
        self.fail(tok, ("letter", "number", "'('", "'['"))


def parse_ast(text: str) -> Expr:
    parser = _Parser(text)
    tree = parser.expr()
    tok = parser.peek()
    if tok[0] != "end":
        parser.fail(tok, ("'+'", "'-'", "'*'", "end of input"))
    return tree


def evaluate(tree: Expr) -> Polynomial:
    if isinstance(tree, RationalLit):
        return Polynomial.constant(tree.value)
    if isinstance(tree, LetterRef):
        return Polynomial.monomial((tree.letter,))
    if isinstance(tree, Bracket):
        return bracket(tree.word)
    if isinstance(tree, Scale):
        return evaluate(tree.body).scale(tree.factor)
    if isinstance(tree, Product):
        out = evaluate(tree.factors[0])
        for f in tree.factors[1:]:
            out = out * evaluate(f)
        return out
    if isinstance(tree, Sum):
        out = Polynomial()
        for sign, t in tree.terms:
            out = out + evaluate(t) if sign > 0 else out - evaluate(t)
        return out
    raise TypeError(f"not an expression node: {tree!r}")


def parse_expression(text: str, n: int | None = None) -> Polynomial:
    """Parse and fully expand ``text``; ``n`` enables the variable-range check."""
    p = evaluate(parse_ast(text))
    if n is not None:
        alphabet = Alphabet(n)
        for _, w in p:
            alphabet.check(w)
    return p


def parse_word(text: str, n: int | None = None) -> tuple:
    """Parse a product of letters such as ``q2*q1'*i`` (``1`` is the empty word)."""
    if text.strip() == "1":
        return ()
    tree = parse_ast(text)
    factors = tree.factors if isinstance(tree, Product) else (tree,)
    if not all(isinstance(f, LetterRef) for f in factors):
        raise ParseError("expected a product of letters", text, 0, ("letter",))
    w = tuple(f.letter for f in factors)
    if n is not None:
        Alphabet(n).check(w)
    return w


def format_word(w: tuple) -> str:
    return "*".join(map(repr, w)) if w else "1"


def format_poly(p: Polynomial) -> str:
    """Canonical rendering, terms in descending deglex order."""
    if not p:
        return "0"
    out = []
    for idx, (c, w) in enumerate(p):
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if not w:
            body = str(c)
        elif c == 1:
            body = format_word(w)
        else:
            body = f"{c}*{format_word(w)}"
        if idx == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f"{sign} {body}")
    return " ".join(out)


# -- basis files ----------------------------------------------------------

def dump_basis(basis: Basis) -> str:
    """One ``format_poly`` line per element, each preceded by its family tag."""
    lines = [f"# n={basis.n} degree_bound={basis.degree_bound}"]
    for e in basis:
        lines.append(f"# family={e.family} params={e.describe_params()}")
        lines.append(format_poly(e.poly))
    return "\n".join(lines) + "\n"


def _parse_params(text: str) -> tuple:
    params = []
    for item in filter(None, text.split(",")):
        role, _, value = item.partition(":")
        w = parse_word(value)
        params.append((role, w[0] if len(w) == 1 else w))
    return tuple(params)


def load_basis(text: str, n: int | None = None, degree_bound: int | None = None) -> Basis:
    """Inverse of :func:`dump_basis`; untagged polynomial lines get family ``user``."""
    header = {}
    elements = []
    family, params = "user", ()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            fields = dict(
                tok.split("=", 1) for tok in line[1:].split() if "=" in tok
            )
            if "family" in fields:
                family = fields["family"]
                params = _parse_params(fields.get("params", ""))
            else:
                header.update(fields)
            continue
        try:
            poly = parse_expression(line, n)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc.reason}", line, exc.position, exc.expected) from None
        if poly:
            elements.append(BasisElement(poly, family, params))
        family, params = "user", ()
    if n is None:
        n = int(header["n"]) if "n" in header else max(
            [a.index for e in elements for _, w in e.poly for a in w if not a.is_basis] + [1])
    if degree_bound is None:
        degree_bound = int(header["degree_bound"]) if "degree_bound" in header else max(
            [e.degree for e in elements] + [0])
    return Basis(elements, degree_bound, n)
