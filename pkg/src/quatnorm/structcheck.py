"""Structural test for normal-form monomials.

A word is irreducible modulo the quaternionic ideal iff it is a subword of
a pattern monomial::

    A1 p1 f1  A2 p2 f2 ... Ar pr fr  A(r+1)  e1 g1 e2 g2 ... es gs e(s+1)

where the ``A`` blocks are words over Q u Q', peaks ``p`` and floors ``f``,
``g`` lie in Q, the ``e`` lie in {i, j, k} with ``k`` at most once, and

* the ceiling ``A1 p1 A2 p2 ... A(r+1) e1 ... e(s+1)`` is nondecreasing
  (this contains the peak sequence ``p1 .. pr e1 .. e(s+1)``),
* the floor ``f1 .. fr g1 .. gs`` is nondecreasing,
* ``p_l > f_l`` and every letter of ``A_l`` is below ``p_l``.

The decision is by a small nondeterministic automaton over the letters of
the word.  Being a *subword* of such a monomial allows one virtual letter
at each end: a peak (or basis letter) hidden before a leading floor, and a
floor hidden after a trailing peak.  The final basis letter ``e(s+1)`` is
optional.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .freealg import BASIS_LETTERS, I, K, Alphabet, Letter, q

__all__ = ["PatternDecomposition", "conforms_normal_pattern", "irreducible_words",
           "is_irreducible"]

# roles: A ceiling-block letter, p peak, f floor after a peak,
#        e basis letter, g floor after a basis letter


@dataclass(frozen=True)
class PatternDecomposition:
    word: tuple
    roles: tuple
    prefix: Letter | None = None  # virtual letter before the word
    suffix: Letter | None = None  # virtual letter after the word

    @property
    def r(self) -> int:
        return self.roles.count("p") + int(self.prefix is not None and self.prefix.is_var)

    @property
    def s(self) -> int:
        return self.roles.count("g")

    def peaks(self) -> list:
        return [a for a, role in zip(self.word, self.roles) if role in "pe"]

    def floors(self) -> list:
        return [a for a, role in zip(self.word, self.roles) if role in "fg"]

    def ceiling(self) -> list:
        return [a for a, role in zip(self.word, self.roles) if role in "Ape"]

    def describe(self) -> str:
        parts = [f"{a!r}:{role}" for a, role in zip(self.word, self.roles)]
        if self.prefix is not None:
            parts.insert(0, f"({self.prefix!r}:virtual)")
        if self.suffix is not None:
            parts.append(f"({self.suffix!r}:virtual)")
        return " ".join(parts)


def _step(state, a: Letter):
    """Successor states of ``state`` on letter ``a`` as (state, role) pairs."""
    phase, ceil, floor, block_last, k_used = state
    out = []
    if phase == "A":
        if not a.is_basis:
            if ceil is None or a >= ceil:
                out.append((("A", a, floor, a, k_used), "A"))
            if a.is_var and (ceil is None or a >= ceil) and (block_last is None or a > block_last):
                out.append((("P", a, floor, None, k_used), "p"))
        elif not (a == K and k_used):
            out.append((("E", a, floor, None, k_used or a == K), "e"))
    elif phase == "P":
        if a.is_var and a < ceil and (floor is None or a >= floor):
            out.append((("A", ceil, a, None, k_used), "f"))
    elif phase == "E":
        if a.is_var and (floor is None or a >= floor):
            out.append((("G", ceil, a, None, k_used), "g"))
    elif phase == "G":
        if a.is_basis and a >= ceil and not (a == K and k_used):
            out.append((("E", a, floor, None, k_used or a == K), "e"))
    return out


def _closing_floor(state) -> Letter | None:
    """Letter completing ``state`` at the end of the word, or None if complete."""
    phase, ceil, floor, _, _ = state
    if phase != "P":
        return None
    f = floor if floor is not None else q(1)
    return f if f < ceil else False


def conforms_normal_pattern(w: tuple, n: int | None = None) -> PatternDecomposition | None:
    """A decomposition of ``w`` as a subword of a pattern monomial, or None.

    ``n`` bounds the variables usable as virtual letters; ``None`` means no
    bound beyond the letters of ``w``.
    """
    w = tuple(w)
    top = max([a.index for a in w if not a.is_basis] + [n or 0, 1])
    starts = [(("A", None, None, None, False), None), (("E", I, None, None, False), I)]
    limit = top if n is not None else top + 1
    starts += [(("P", q(l), None, None, False), q(l)) for l in range(1, limit + 1)]

    # state -> (roles so far, virtual prefix); first path found is kept
    frontier = {}
    for st, virtual in starts:
        frontier.setdefault(st, ((), virtual))
    for a in w:
        nxt = {}
        for st, (roles, virtual) in frontier.items():
            for st2, role in _step(st, a):
                if st2 not in nxt:
                    nxt[st2] = (roles + (role,), virtual)
        frontier = nxt
        if not frontier:
            return None
    # prefer decompositions that need no virtual letters
    best = None
    for st, (roles, virtual) in frontier.items():
        if virtual is not None and (not roles or roles[0] not in "fg"):
            continue  # virtual prefix only makes sense before a floor
        closing = _closing_floor(st)
        if closing is False:
            continue
        cand = PatternDecomposition(w, roles, virtual, closing)
        rank = (cand.prefix is not None) + (cand.suffix is not None)
        if best is None or rank < best[0]:
            best = (rank, cand)
    return None if best is None else best[1]


def is_irreducible(w: tuple, basis) -> bool:
    return not basis.is_reducible(tuple(w))


def irreducible_words(n: int, d: int, basis) -> list[tuple]:
    """All words of degree <= d containing no leading word of ``basis``."""
    from .reduce import DegreeGuard

    if basis.degree_bound < d:
        raise DegreeGuard(f"basis bound {basis.degree_bound} is below degree {d}")
    letters = Alphabet(n).letters
    leads = basis.lead_index
    lengths = basis.lead_lengths
    out = [()]
    layer = [()]
    for length in range(1, d + 1):
        nxt = []
        for w in layer:
            for a in letters:
                v = w + (a,)
                # only subwords ending at the new letter can be new divisors
                if any(ell <= length and v[length - ell:] in leads for ell in lengths):
                    continue
                nxt.append(v)
        out += nxt
        layer = nxt
    return out


def iter_all_words(n: int, d: int) -> Iterator[tuple]:
    return Alphabet(n).words_upto(d)
