"""Free associative algebra over the quaternionic alphabet.

Letters are the quaternionic variables ``q1..qn``, their conjugates
``q1'..qn'`` and the basis letters ``i, j, k``, totally ordered as::

    q1 < q1' < q2 < q2' < ... < qn < qn' < i < j < k

A word is a plain tuple of :class:`Letter`.  Because a letter is an ``int``
whose value is its rank, the deglex order on words is the native ordering
of ``(len(w), w)``.  Polynomials have exact rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

__all__ = [
    "Letter", "Word", "Term", "Polynomial", "Alphabet", "Ordering",
    "ZeroPolynomial", "IndexOutOfRange",
    "I", "J", "K", "BASIS_LETTERS", "q", "qbar", "word",
    "compare_letters", "compare_words_deglex", "deglex_key", "monoid_less",
    "poly_arith", "conjugate_word", "conjugate_poly", "bracket",
    "leading_term",
]

# Basis letters sit above every variable code, whatever n is.
_BASIS_BASE = 1 << 24
_BASIS_NAMES = ("i", "j", "k")


class ZeroPolynomial(ValueError):
    """Raised when the leading term of the zero polynomial is requested."""


class IndexOutOfRange(ValueError):
    """A letter refers to a variable index outside the active alphabet."""


class Letter(int):
    """One symbol of the alphabet; the integer value is its rank."""

    __slots__ = ()

    @classmethod
    def var(cls, index: int) -> Letter:
        if index < 1:
            raise IndexOutOfRange(f"variable index must be >= 1, got {index}")
        return cls(2 * (index - 1))

    @classmethod
    def conj_var(cls, index: int) -> Letter:
        if index < 1:
            raise IndexOutOfRange(f"variable index must be >= 1, got {index}")
        return cls(2 * (index - 1) + 1)

    @classmethod
    def basis(cls, basis_id: str) -> Letter:
        return cls(_BASIS_BASE + _BASIS_NAMES.index(basis_id))

    @property
    def kind(self) -> str:
        if self >= _BASIS_BASE:
            return "Basis"
        return "QConj" if self & 1 else "QVar"

    @property
    def is_basis(self) -> bool:
        return self >= _BASIS_BASE

    @property
    def is_var(self) -> bool:
        """True for letters of Q (unconjugated variables)."""
        return self < _BASIS_BASE and not self & 1

    @property
    def index(self) -> int | None:
        if self >= _BASIS_BASE:
            return None
        return (int(self) >> 1) + 1

    @property
    def basis_id(self) -> str | None:
        if self >= _BASIS_BASE:
            return _BASIS_NAMES[self - _BASIS_BASE]
        return None

    def conjugate(self) -> Letter:
        """Letterwise conjugate, ignoring the sign carried by basis letters."""
        if self >= _BASIS_BASE:
            return self
        return Letter(int(self) ^ 1)

    def __repr__(self) -> str:
        if self >= _BASIS_BASE:
            return self.basis_id
        return f"q{self.index}'" if self & 1 else f"q{self.index}"

    __str__ = __repr__


Word = tuple  # tuple[Letter, ...]; the empty tuple is the monoid unit

I = Letter.basis("i")
J = Letter.basis("j")
K = Letter.basis("k")
BASIS_LETTERS = (I, J, K)


def q(index: int) -> Letter:
    return Letter.var(index)


def qbar(index: int) -> Letter:
    return Letter.conj_var(index)


def word(*letters: Letter) -> tuple:
    return tuple(Letter(a) for a in letters)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _cmp(a, b) -> Ordering:
    if a < b:
        return Ordering.LESS
    if a > b:
        return Ordering.GREATER
    return Ordering.EQUAL


def compare_letters(a: Letter, b: Letter) -> Ordering:
    return _cmp(int(a), int(b))


def deglex_key(w: tuple) -> tuple:
    return (len(w), w)


def compare_words_deglex(u: tuple, v: tuple) -> Ordering:
    return _cmp(deglex_key(u), deglex_key(v))


def monoid_less(u: tuple, v: tuple) -> bool:
    """Monoid order: every letter of ``u`` precedes every letter of ``v``."""
    if not u or not v:
        return True
    return max(u) < min(v)


@dataclass(frozen=True)
class Alphabet:
    """The letters available with ``n`` quaternionic variables."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"need at least one quaternionic variable, got n={self.n}")

    @property
    def variables(self) -> tuple:
        return tuple(q(l) for l in range(1, self.n + 1))

    @property
    def letters(self) -> tuple:
        """All letters in ascending order."""
        out = []
        for l in range(1, self.n + 1):
            out += [q(l), qbar(l)]
        return tuple(out) + BASIS_LETTERS

    def check(self, w: Iterable[Letter]) -> None:
        for a in w:
            if not a.is_basis and a.index > self.n:
                raise IndexOutOfRange(f"letter {a!r} exceeds n={self.n}")

    def words(self, degree: int) -> Iterator[tuple]:
        """All words of exactly the given degree, ascending in deglex."""
        return product(self.letters, repeat=degree)

    def words_upto(self, degree: int) -> Iterator[tuple]:
        for d in range(degree + 1):
            yield from self.words(d)


def _as_word(w) -> tuple:
    return tuple(a if type(a) is Letter else Letter(a) for a in w)


class Term(NamedTuple):
    coeff: Fraction
    word: tuple


Scalar = Union[int, Fraction]


class Polynomial:
    """Immutable element of Q<A>: terms sorted strictly descending in deglex."""

    __slots__ = ("_terms", "_map", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | Iterable[tuple[tuple, Scalar]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            acc: dict = {}
            for w, c in terms:
                acc[w] = acc.get(w, 0) + c
            items = acc.items()
        kept = {_as_word(w): Fraction(c) for w, c in items if c != 0}
        self._map = kept
        self._terms = tuple(
            Term(kept[w], w) for w in sorted(kept, key=deglex_key, reverse=True)
        )
        self._hash = None

    @classmethod
    def _from_clean(cls, mapping: dict) -> Polynomial:
        # mapping must already hold only nonzero Fractions keyed by tuples
        self = object.__new__(cls)
        self._map = mapping
        self._terms = tuple(
            Term(mapping[w], w) for w in sorted(mapping, key=deglex_key, reverse=True)
        )
        self._hash = None
        return self

    @classmethod
    def zero(cls) -> Polynomial:
        return cls()

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls({(): c})

    @classmethod
    def monomial(cls, w: Iterable[Letter], coeff: Scalar = 1) -> Polynomial:
        return cls({tuple(w): coeff})

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> tuple:
        return self._terms

    def as_dict(self) -> dict:
        return dict(self._map)

    def coefficient(self, w: tuple) -> Fraction:
        return self._map.get(tuple(w), Fraction(0))

    def words(self) -> list:
        return [t.word for t in self._terms]

    @property
    def degree(self) -> int:
        """Maximal term degree; -1 for the zero polynomial."""
        return len(self._terms[0].word) if self._terms else -1

    @property
    def lead_word(self) -> tuple:
        return leading_term(self).word

    @property
    def lead_coeff(self) -> Fraction:
        return leading_term(self).coeff

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Term]:
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._map == other._map
        if isinstance(other, (int, Fraction)):
            return self._map == Polynomial.constant(other)._map
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __repr__(self) -> str:
        from .syntax import format_poly

        return f"Polynomial({format_poly(self)!r})"

    # -- arithmetic -------------------------------------------------------

    def _combine(self, other: Polynomial, sign: int) -> Polynomial:
        acc = dict(self._map)
        for w, c in other._map.items():
            v = acc.get(w, 0) + sign * c
            if v:
                acc[w] = v
            else:
                acc.pop(w, None)
        return Polynomial._from_clean(acc)

    def scale(self, c: Scalar) -> Polynomial:
        c = Fraction(c)
        if not c:
            return Polynomial()
        return Polynomial._from_clean({w: v * c for w, v in self._map.items()})

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> Polynomial:
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict = {}
        for u, a in self._map.items():
            for v, b in other._map.items():
                w = u + v
                acc[w] = acc.get(w, 0) + a * b
        return Polynomial._from_clean({w: c for w, c in acc.items() if c})

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def lmul(self, left: tuple) -> Polynomial:
        """``left * self`` for a word ``left``."""
        left = tuple(left)
        return Polynomial._from_clean({left + w: c for w, c in self._map.items()})

    def rmul(self, right: tuple) -> Polynomial:
        right = tuple(right)
        return Polynomial._from_clean({w + right: c for w, c in self._map.items()})

    def sandwich(self, left: tuple, right: tuple) -> Polynomial:
        left, right = tuple(left), tuple(right)
        return Polynomial._from_clean({left + w + right: c for w, c in self._map.items()})

    def conjugate(self) -> Polynomial:
        return conjugate_poly(self)


def poly_arith(op: str, p: Polynomial, other) -> Polynomial:
    """Dispatch ``add``, ``sub``, ``scale`` or ``mul``."""
    if op == "add":
        return p + other
    if op == "sub":
        return p - other
    if op == "scale":
        return p.scale(other)
    if op == "mul":
        return p * other
    raise ValueError(f"unknown operation {op!r}")


def conjugate_word(w: Iterable[Letter]) -> Term:
    """Conjugate of a word: reversed, letterwise conjugated, one sign per basis letter."""
    w = tuple(w)
    sign = -1 if sum(1 for a in w if a.is_basis) % 2 else 1
    return Term(Fraction(sign), tuple(a.conjugate() for a in reversed(w)))


def conjugate_poly(p: Polynomial) -> Polynomial:
    acc = {}
    for c, w in p:
        s, cw = conjugate_word(w)
        acc[cw] = c * s
    return Polynomial._from_clean(acc)


def bracket(w: Iterable[Letter]) -> Polynomial:
    """``[w] = w + conj(w)``, twice the scalar part of ``w``."""
    w = tuple(w)
    s, cw = conjugate_word(w)
    return Polynomial([(w, 1), (cw, s)])


def leading_term(p: Polynomial) -> Term:
    if not p.terms:
        raise ZeroPolynomial("the zero polynomial has no leading term")
    return p.terms[0]
