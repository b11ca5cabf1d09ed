"""Generators of the quaternionic ideal and its Groebner basis BG.

``ideal_generators`` builds the defining relations (multiplication table,
conjugate-defining equations, coordinate commutators).  ``enumerate_bg``
instantiates the BG families up to a leading-degree bound, and
``extended_rules`` adds bracket commutators ``X[Y] - [Y]X`` and bracket
shifts ``[XY] - [YX]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Iterator, Sequence

from .freealg import (
    BASIS_LETTERS, I, J, K, Alphabet, Letter, Polynomial, bracket, q, qbar,
)

FAMILIES = (
    "BG2a", "BG2b", "BG2c", "BG3a", "BG3b", "BG3c", "BG4", "BGm",
    "GenTable", "GenConj", "GenComm", "ExtCommXY", "ExtShift",
)


class InvalidN(ValueError):
    pass


class InvalidBound(ValueError):
    pass


@dataclass(frozen=True)
class BasisElement:
    poly: Polynomial
    family: str
    params: tuple = ()  # (role, value) pairs; values are Letters or words

    def __post_init__(self):
        if not self.poly:
            raise ValueError(f"{self.family} element is the zero polynomial")

    @property
    def lead_word(self) -> tuple:
        return self.poly.lead_word

    @property
    def degree(self) -> int:
        return len(self.poly.lead_word)

    def describe_params(self) -> str:
        parts = []
        for role, value in self.params:
            if isinstance(value, tuple):
                value = "*".join(map(str, value)) or "1"
            parts.append(f"{role}:{value}")
        return ",".join(parts)


class Basis(Sequence):
    """Immutable indexed collection of basis elements with a leading-word index."""

    def __init__(self, elements: Iterable[BasisElement], degree_bound: int, n: int):
        self.elements = tuple(elements)
        self.degree_bound = degree_bound
        self.n = n
        self.lead_words = tuple(e.poly.lead_word for e in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, idx):
        return self.elements[idx]

    def __repr__(self) -> str:
        return f"Basis(n={self.n}, degree_bound={self.degree_bound}, size={len(self)})"

    @cached_property
    def lead_index(self) -> dict:
        """Leading word -> ascending list of element indices having it."""
        index: dict = {}
        for i, w in enumerate(self.lead_words):
            index.setdefault(w, []).append(i)
        return index

    @cached_property
    def lead_lengths(self) -> tuple:
        return tuple(sorted({len(w) for w in self.lead_words}))

    def polys(self) -> list:
        return [e.poly for e in self.elements]

    def is_reducible(self, w: tuple) -> bool:
        """True iff some leading word occurs as a contiguous subword of ``w``."""
        index = self.lead_index
        n = len(w)
        for length in self.lead_lengths:
            if length > n:
                break
            for start in range(n - length + 1):
                if w[start:start + length] in index:
                    return True
        return False

    def without(self, idx: int) -> Basis:
        rest = self.elements[:idx] + self.elements[idx + 1:]
        return Basis(rest, self.degree_bound, self.n)

    def union(self, other: Basis) -> Basis:
        """Concatenate two bases, dropping polynomials already present."""
        seen = {e.poly for e in self.elements}
        extra = [e for e in other.elements if e.poly not in seen]
        return Basis(self.elements + tuple(extra), min(self.degree_bound, other.degree_bound),
                     max(self.n, other.n))

    def filter_families(self, families: Iterable[str]) -> Basis:
        wanted = set(families)
        return Basis([e for e in self.elements if e.family in wanted], self.degree_bound, self.n)


def _w(*parts) -> tuple:
    """Concatenate letters and words into one word."""
    out = []
    for p in parts:
        if isinstance(p, tuple):
            out.extend(p)
        else:
            out.append(p)
    return tuple(out)


def bracket_commutator(x: Iterable[Letter], y: Iterable[Letter]) -> Polynomial:
    """``X[Y] - [Y]X``."""
    x, y = tuple(x), tuple(y)
    b = bracket(y)
    return b.lmul(x) - b.rmul(x)


def shift_difference(x: Iterable[Letter], y: Iterable[Letter]) -> Polynomial:
    """``[XY] - [YX]``."""
    x, y = tuple(x), tuple(y)
    return bracket(x + y) - bracket(y + x)


def _bracket_times(inner: tuple, a) -> Polynomial:
    """``[inner]a - a[inner]`` for a letter or word ``a``."""
    return bracket_commutator(_w(a), inner).scale(-1)


_TABLE = (
    # (word, constant-or-letter, sign): word + sign * rest
    ((I, I), None, 1), ((J, J), None, 1), ((K, K), None, 1),
    ((I, J), K, -1), ((J, I), K, 1), ((J, K), I, -1),
    ((K, J), I, 1), ((K, I), J, -1), ((I, K), J, 1),
)


def multiplication_table() -> list[Polynomial]:
    """The nine relations of the i, j, k multiplication table."""
    out = []
    for w, letter, sign in _TABLE:
        rest = () if letter is None else (letter,)
        out.append(Polynomial([(w, 1), (rest, sign)]))
    return out


def conjugate_defining(l: int) -> Polynomial:
    """``2 ql' + ql + i ql i + j ql j + k ql k``."""
    v = q(l)
    return Polynomial([((qbar(l),), 2), ((v,), 1), ((I, v, I), 1), ((J, v, J), 1), ((K, v, K), 1)])


def _check_n(n: int) -> None:
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")


def ideal_generators(n: int) -> Basis:
    """The defining generating set of the ideal: 9 + n + 4n(2n+3) polynomials."""
    _check_n(n)
    alphabet = Alphabet(n)
    elements = []
    for (w, _, _), poly in zip(_TABLE, multiplication_table()):
        elements.append(BasisElement(poly, "GenTable", (("word", w),)))
    for l in range(1, n + 1):
        elements.append(BasisElement(conjugate_defining(l), "GenConj", (("1", q(l)),)))
    for a in alphabet.letters:
        for l in range(1, n + 1):
            for y in ((q(l),), (I, q(l)), (J, q(l)), (K, q(l))):
                elements.append(BasisElement(bracket_commutator((a,), y), "GenComm",
                                             (("a", a), ("Y", y))))
    return Basis(elements, 3, n)


def _nondecreasing(letters: Sequence[Letter], length: int) -> Iterator[tuple]:
    return combinations_with_replacement(letters, length)


def _bg_raw(n: int, D: int) -> Iterator[tuple]:
    """Yield (family, params, poly) for every BG instantiation with degree <= D."""
    Q = [q(l) for l in range(1, n + 1)]
    E = BASIS_LETTERS
    bar = Letter.conjugate

    # BG2
    for w, letter, sign in _TABLE:
        rest = () if letter is None else (letter,)
        yield "BG2a", (("word", w),), Polynomial([(w, 1), (rest, sign)])
    for a in Q:
        yield "BG2b", (("1", a),), Polynomial([((bar(a), a), 1), ((a, bar(a)), -1)])
    for a, b in combinations(Q, 2):
        yield "BG2b", (("1", a), ("2", b)), _bracket_times((b,), bar(a))
        yield "BG2b", (("1", a), ("2", b)), _bracket_times((b,), a)
    for a, b in combinations(Q, 2):
        yield "BG2c", (("1", a), ("2", b)), bracket_commutator((b,), (a,))
    for a in Q:
        for e in E:
            yield "BG2c", (("1", a), ("e", e)), bracket_commutator((e,), (a,))
    if D < 3:
        return

    # BG3
    for a in Q:
        yield "BG3a", (("1", a),), conjugate_defining(a.index)
    for a, b, c in combinations(Q, 3):
        p = (("1", a), ("2", b), ("3", c))
        yield "BG3b", p, _bracket_times((c, b), a)
        yield "BG3b", p, _bracket_times((c, a), bar(b))
        yield "BG3b", p, _bracket_times((c, a), b)
    for a, b in combinations(Q, 2):
        p = (("1", a), ("2", b))
        yield "BG3b", p, _bracket_times((b, a), bar(a))
        yield "BG3b", p, _bracket_times((b, a), a)
    for a, b in combinations(Q, 2):
        for e in E:
            p = (("1", a), ("2", b), ("e", e))
            yield "BG3b", p, _bracket_times((e, b), a)
            yield "BG3b", p, _bracket_times((e, a), b)
            yield "BG3b", p, _bracket_times((e, a), bar(b))
    for a in Q:
        for e in E:
            p = (("1", a), ("e", e))
            yield "BG3b", p, _bracket_times((e, a), a)
            yield "BG3b", p, _bracket_times((e, a), bar(a))
        yield "BG3b", (("1", a),), _bracket_times((J, a), I)
        yield "BG3b", (("1", a),), _bracket_times((K, a), I)
        yield "BG3b", (("1", a),), _bracket_times((K, a), J)
    for a, b in combinations(Q, 2):
        yield "BG3c", (("1", a), ("2", b)), bracket_commutator((b,), (b, a))
    if D < 4:
        return

    # BG4
    for a, b, c in combinations(Q, 3):
        yield "BG4", (("1", a), ("2", b), ("3", c)), bracket_commutator((c,), (b, c, a))
    for a, b, c, d in combinations(Q, 4):
        yield "BG4", (("1", a), ("2", b), ("3", c), ("4", d)), bracket_commutator((c,), (b, d, a))
    for a, b, c in combinations(Q, 3):
        for e in E:
            yield "BG4", (("1", a), ("2", b), ("3", c), ("e", e)), bracket_commutator((c,), (b, e, a))
    for a, b in combinations(Q, 2):
        for e1, e in combinations_with_replacement(E, 2):
            if e1 == K and e == K:
                continue
            yield "BG4", (("1", a), ("2", b), ("e'", e1), ("e", e)), bracket_commutator((e1,), (b, e, a))

    # BGm, m >= 5: interior A nondecreasing over Q u Q' with 3 <= A (< m)
    QQ = [x for l in range(1, n + 1) for x in (q(l), qbar(l))]
    for m in range(5, D + 1):
        for a, b, c in combinations(Q, 3):
            tops = [x for x in Q if x > c]
            for top in tops + list(E):
                interior = [x for x in QQ if c <= x < top]
                for A in _nondecreasing(interior, m - 4):
                    role = "m" if top in Q else "e"
                    p = (("1", a), ("2", b), ("3", c), ("A", A), (role, top))
                    yield "BGm", p, bracket_commutator((c,), _w(b, A, top, a))


def enumerate_bg(n: int, D: int) -> Basis:
    """All BG elements over ``n`` variables whose leading degree is at most ``D``."""
    _check_n(n)
    if D < 2:
        raise InvalidBound(f"degree bound must be >= 2, got {D}")
    seen = set()
    elements = []
    for family, params, poly in _bg_raw(n, D):
        if len(poly.lead_word) > D or poly in seen:
            continue
        seen.add(poly)
        elements.append(BasisElement(poly, family, params))
    return Basis(elements, D, n)


def _monic(p: Polynomial) -> Polynomial:
    c = p.lead_coeff
    return p if c == 1 else p.scale(1 / c)


def extended_rules(n: int, D: int, *, commutators: bool = True, shifts: bool = True) -> Basis:
    """All nonzero ``X[Y] - [Y]X`` and ``[XY] - [YX]`` with ``|XY| <= D``, made monic."""
    _check_n(n)
    if D < 2:
        raise InvalidBound(f"degree bound must be >= 2, got {D}")
    letters = Alphabet(n).letters
    seen = set()
    elements = []

    def add(poly, family, x, y):
        if not poly:
            return
        poly = _monic(poly)
        if poly in seen:
            return
        seen.add(poly)
        elements.append(BasisElement(poly, family, (("X", x), ("Y", y))))

    for total in range(2, D + 1):
        for split in range(1, total):
            xs = list(product(letters, repeat=split))
            ys = list(product(letters, repeat=total - split))
            for x in xs:
                for y in ys:
                    if commutators:
                        add(bracket_commutator(x, y), "ExtCommXY", x, y)
                    if shifts:
                        add(shift_difference(x, y), "ExtShift", x, y)
    return Basis(elements, D, n)
