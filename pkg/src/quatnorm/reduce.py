"""Divisibility search, top reduction and normal forms against a Basis."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .freealg import Polynomial
from .qideal import Basis

__all__ = [
    "DivisionMatch", "ReductionStep", "ReductionTrace", "Violation",
    "DegreeGuard", "MatchMismatch",
    "find_division", "find_all_divisions", "reduce_step", "normal_form",
    "reduces_to_zero", "is_reduced_basis",
]


class DegreeGuard(ValueError):
    """The basis is truncated below the degree of the polynomial being reduced."""


class MatchMismatch(ValueError):
    pass


class DivisionMatch(NamedTuple):
    rule_index: int
    left: tuple
    right: tuple
    target: tuple


class ReductionStep(NamedTuple):
    rule_index: int
    left: tuple
    right: tuple
    coeff: Fraction


@dataclass
class ReductionTrace:
    steps: list = field(default_factory=list)
    final: Polynomial | None = None

    def replay(self, p: Polynomial, basis: Basis) -> Polynomial:
        """Subtract every recorded multiple from ``p``."""
        acc = p.as_dict()
        for rule, left, right, c in self.steps:
            _subtract(acc, basis[rule].poly, left, right, c)
        return Polynomial._from_clean(acc)


def find_division(w: tuple, basis: Basis) -> DivisionMatch | None:
    """Leftmost occurrence of a leading word in ``w``; lowest rule index breaks ties."""
    index = basis.lead_index
    lengths = basis.lead_lengths
    size = len(w)
    for start in range(size):
        best = None
        for length in lengths:
            end = start + length
            if end > size:
                break
            rules = index.get(w[start:end])
            if rules is not None and (best is None or rules[0] < best[0]):
                best = (rules[0], end)
        if best is not None:
            return DivisionMatch(best[0], w[:start], w[best[1]:], w)
    return None


def find_all_divisions(w: tuple, basis: Basis) -> list[DivisionMatch]:
    index = basis.lead_index
    size = len(w)
    out = []
    for length in basis.lead_lengths:
        if length > size:
            break
        for start in range(size - length + 1):
            for rule in index.get(w[start:start + length], ()):
                out.append(DivisionMatch(rule, w[:start], w[start + length:], w))
    return out


def _subtract(acc: dict, g: Polynomial, left: tuple, right: tuple, c) -> list:
    """``acc -= c * left*g*right`` in place; returns words that became nonzero."""
    touched = []
    for gc, gw in g:
        w = left + gw + right
        v = acc.get(w, 0) - c * gc
        if v:
            if w not in acc:
                touched.append(w)
            acc[w] = v
        else:
            acc.pop(w, None)
    return touched


def reduce_step(p: Polynomial, m: DivisionMatch, basis: Basis) -> Polynomial:
    """Cancel the leading term of ``p`` with the matched rule."""
    if not p or m.target != p.lead_word:
        raise MatchMismatch(f"match targets {m.target!r}, not the leading word of p")
    g = basis[m.rule_index].poly
    if m.left + g.lead_word + m.right != m.target:
        raise MatchMismatch("match does not factor its target")
    acc = p.as_dict()
    _subtract(acc, g, m.left, m.right, p.lead_coeff / g.lead_coeff)
    return Polynomial._from_clean(acc)


def _guard(p: Polynomial, basis: Basis) -> None:
    if p and p.degree > basis.degree_bound:
        raise DegreeGuard(
            f"polynomial degree {p.degree} exceeds basis degree bound {basis.degree_bound}"
        )


def _heap_key(w: tuple) -> tuple:
    # heapq is a min-heap; negate to pop the deglex-largest word first
    return (-len(w), tuple(-a for a in w))


def _normal_form_det(p: Polynomial, basis: Basis, trace: ReductionTrace) -> Polynomial:
    acc = p.as_dict()
    heap = [(_heap_key(w), w) for w in acc]
    heapq.heapify(heap)
    done = {}
    while heap:
        _, w = heapq.heappop(heap)
        c = acc.pop(w, None)
        if c is None:
            continue
        m = find_division(w, basis)
        if m is None:
            done[w] = c
            continue
        g = basis[m.rule_index].poly
        k = c / g.lead_coeff
        acc[w] = c
        for new in _subtract(acc, g, m.left, m.right, k):
            heapq.heappush(heap, (_heap_key(new), new))
        trace.steps.append(ReductionStep(m.rule_index, m.left, m.right, k))
    return Polynomial._from_clean(done)


def _normal_form_random(p: Polynomial, basis: Basis, rng: random.Random,
                        trace: ReductionTrace) -> Polynomial:
    # reduce any reducible term, by any matching rule, in random order
    acc = p.as_dict()
    pending = {w for w in acc}
    while pending:
        w = rng.choice(sorted(pending))
        matches = find_all_divisions(w, basis)
        if not matches:
            pending.discard(w)
            continue
        m = rng.choice(matches)
        g = basis[m.rule_index].poly
        k = acc[w] / g.lead_coeff
        before = set(acc)
        _subtract(acc, g, m.left, m.right, k)
        trace.steps.append(ReductionStep(m.rule_index, m.left, m.right, k))
        pending &= set(acc)
        pending |= set(acc) - before
    return Polynomial._from_clean(acc)


def normal_form(p: Polynomial, basis: Basis, strategy="deterministic"):
    """Fully reduce ``p``; returns ``(normal form, trace)``.

    ``strategy`` is ``"deterministic"``, ``"rand:SEED"``, an integer seed or a
    ``random.Random``.  The deterministic path reduces the largest remaining
    word first, at its leftmost divisor.
    """
    _guard(p, basis)
    trace = ReductionTrace()
    rng = _make_rng(strategy)
    if rng is None:
        result = _normal_form_det(p, basis, trace)
    else:
        result = _normal_form_random(p, basis, rng, trace)
    trace.final = result
    return result, trace


def _make_rng(strategy):
    if strategy is None or strategy in ("deterministic", "det"):
        return None
    if isinstance(strategy, random.Random):
        return strategy
    if isinstance(strategy, int):
        return random.Random(strategy)
    if isinstance(strategy, str) and strategy.startswith("rand:"):
        return random.Random(int(strategy[5:]))
    raise ValueError(f"unknown reduction strategy {strategy!r}")


def reduces_to_zero(p: Polynomial, basis: Basis):
    nf, trace = normal_form(p, basis)
    return nf.is_zero(), trace


class Violation(NamedTuple):
    reducer: int  # element whose leading word divides ...
    reduced: int  # ... a word of this element
    word: tuple


def is_reduced_basis(basis: Basis, *, strict: bool = False) -> list[Violation]:
    """Pairs of elements that are reducible with respect to each other.

    By default an element is reducible by another when the other's leading
    word divides its leading word.  With ``strict=True`` every word of the
    element is checked, not only the leading one.
    """
    violations = []
    for j, e in enumerate(basis):
        words = e.poly.words() if strict else [e.poly.lead_word]
        for w in words:
            for m in find_all_divisions(w, basis):
                if m.rule_index != j:
                    violations.append(Violation(m.rule_index, j, w))
    return sorted(set(violations))
