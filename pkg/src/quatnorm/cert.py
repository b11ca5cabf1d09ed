"""Groebner basis certification by reduction of S-polynomials.

For a reduced basis whose elements all have degree > 1 it suffices to
reduce the *clear* S-polynomials: those whose leader, stripped of its first
and last letter, is irreducible.  ``certify`` runs either the clear subset
or every S-quadruplet up to a leader-degree bound.
"""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .freealg import Polynomial
from .qideal import Basis, BasisElement
from .reduce import is_reduced_basis, normal_form

__all__ = [
    "SQuadruplet", "Failure", "CertReport", "DegreeOneElement", "NotReduced",
    "overlaps", "squadruplets", "is_clear", "s_polynomial", "certify",
    "element_type", "leader_label",
]


class DegreeOneElement(ValueError):
    pass


class NotReduced(ValueError):
    pass


class SQuadruplet(NamedTuple):
    """``lead(f) * R == L * lead(g) == leader`` with proper, nonempty L and R."""

    f_index: int
    g_index: int
    R: tuple
    L: tuple
    leader: tuple


class Failure(NamedTuple):
    squad: SQuadruplet
    remainder: Polynomial


def _overlaps_words(wf: tuple, wg: tuple, fi: int, gi: int) -> list[SQuadruplet]:
    out = []
    for k in range(1, min(len(wf), len(wg))):
        if wf[-k:] == wg[:k]:
            out.append(SQuadruplet(fi, gi, wg[k:], wf[:-k], wf + wg[k:]))
    return out


def overlaps(f: BasisElement | Polynomial, g: BasisElement | Polynomial,
             f_index: int = 0, g_index: int = 0) -> list[SQuadruplet]:
    """Every S-quadruplet between ``f`` and ``g``, shortest leader first."""
    wf = f.lead_word
    wg = g.lead_word
    return sorted(_overlaps_words(wf, wg, f_index, g_index), key=lambda s: len(s.leader))


def squadruplets(basis: Basis, max_degree: int | None = None) -> tuple[list[SQuadruplet], int]:
    """All S-quadruplets with leader degree <= ``max_degree``.

    Returns the list (ordered by f index, then overlap length, then g index)
    and the number of ordered (f, g) pairs that overlap at all.
    """
    if max_degree is None:
        max_degree = basis.degree_bound
    by_prefix: dict = {}
    for gi, wg in enumerate(basis.lead_words):
        for k in range(1, len(wg)):
            by_prefix.setdefault(wg[:k], []).append(gi)
    out = []
    pairs = set()
    for fi, wf in enumerate(basis.lead_words):
        for k in range(len(wf) - 1, 0, -1):
            for gi in by_prefix.get(wf[-k:], ()):
                wg = basis.lead_words[gi]
                if len(wf) + len(wg) - k > max_degree:
                    continue
                pairs.add((fi, gi))
                out.append(SQuadruplet(fi, gi, wg[k:], wf[:-k], wf + wg[k:]))
    return out, len(pairs)


def is_clear(s: SQuadruplet, basis: Basis) -> bool:
    return not basis.is_reducible(s.leader[1:-1])


def s_polynomial(s: SQuadruplet, basis: Basis) -> Polynomial:
    """``f R - L g`` with both leading coefficients normalised to 1."""
    f = basis[s.f_index].poly
    g = basis[s.g_index].poly
    return f.rmul(s.R).scale(1 / f.lead_coeff) - g.lmul(s.L).scale(1 / g.lead_coeff)


def element_type(e: BasisElement) -> str:
    """Shape of a leading word: I, V, U, N4, N, or T for the basis-letter table."""
    w = e.poly.lead_word
    if e.family == "BG2a":
        return "T"
    if len(w) == 2:
        return "I"
    if len(w) == 3:
        return "V" if w[1] < w[2] else "U"
    if len(w) == 4:
        return "N4"
    return "N"


def leader_label(s: SQuadruplet, basis: Basis) -> str:
    return f"{element_type(basis[s.f_index])}+{element_type(basis[s.g_index])}"


@dataclass
class CertReport:
    n: int
    degree_bound: int
    mode: str
    pairs_scanned: int = 0
    squads_total: int = 0
    squads_clear: int = 0
    squads_reduced: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    leader_types: Counter = field(default_factory=Counter)

    @property
    def clear_ratio(self) -> Fraction:
        if not self.squads_total:
            return Fraction(0)
        return Fraction(self.squads_clear, self.squads_total)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        from .syntax import format_poly, format_word

        return {
            "n": self.n,
            "degree_bound": self.degree_bound,
            "mode": self.mode,
            "pairs_scanned": self.pairs_scanned,
            "squads_total": self.squads_total,
            "squads_clear": self.squads_clear,
            "squads_reduced": self.squads_reduced,
            "clear_ratio": str(self.clear_ratio),
            "passed": self.passed,
            "elapsed_ms": round(self.elapsed * 1000),
            "leader_types": dict(sorted(self.leader_types.items())),
            "failures": [
                {
                    "f": s.f_index, "g": s.g_index,
                    "L": format_word(s.L), "R": format_word(s.R),
                    "leader": format_word(s.leader),
                    "remainder": format_poly(rem),
                }
                for s, rem in self.failures
            ],
        }


_WORKER_BASIS: Basis | None = None


def _init_worker(basis: Basis) -> None:
    global _WORKER_BASIS
    _WORKER_BASIS = basis


def _reduce_chunk(chunk: list[SQuadruplet]) -> list:
    return _reduce_all(chunk, _WORKER_BASIS)


def _reduce_all(chunk: list[SQuadruplet], basis: Basis) -> list:
    out = []
    for s in chunk:
        nf, _ = normal_form(s_polynomial(s, basis), basis)
        if nf:
            out.append(Failure(s, nf))
    return out


def certify(basis: Basis, D: int | None = None, mode: str = "clear_only",
            workers: int = 1) -> CertReport:
    """Reduce the S-polynomials of ``basis`` with leader degree <= ``D``.

    In ``clear_only`` mode only clear quadruplets are reduced, which is
    sufficient when the basis is reduced and has no degree-one element.
    """
    if mode not in ("clear_only", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    if D is None:
        D = basis.degree_bound
    if mode == "clear_only":
        small = [i for i, e in enumerate(basis) if e.degree <= 1]
        if small:
            raise DegreeOneElement(f"elements {small} have degree <= 1")
        if is_reduced_basis(basis):
            raise NotReduced("clear-only certification needs a reduced basis")

    start = time.perf_counter()
    quads, pairs = squadruplets(basis, D)
    report = CertReport(basis.n, D, mode, pairs_scanned=pairs, squads_total=len(quads))
    todo = []
    for s in quads:
        clear = is_clear(s, basis)
        if clear:
            report.squads_clear += 1
            report.leader_types[leader_label(s, basis)] += 1
        if clear or mode == "all":
            todo.append(s)
    report.squads_reduced = len(todo)

    if workers <= 1 or len(todo) < 2:
        report.failures = _reduce_all(todo, basis)
    else:
        size = -(-len(todo) // (4 * workers))
        chunks = [todo[i:i + size] for i in range(0, len(todo), size)]
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=(basis,)) as pool:
            for part in pool.map(_reduce_chunk, chunks):
                report.failures.extend(part)
    report.elapsed = time.perf_counter() - start
    return report
