"""Coordinatization oracle.

Maps an element of Q<A> to a quaternion whose four components are
commutative polynomials in the coordinates ``u_l, x_l, y_l, z_l``::

    q_l  -> u_l + x_l i + y_l j + z_l k
    q_l' -> u_l - x_l i - y_l j - z_l k

The kernel of this homomorphism is the defining ideal, so two
noncommutative polynomials are equal in the quaternionic algebra iff their
images agree.  Nothing here touches the reduction engine: commutative
polynomials are dicts from dense exponent vectors (variable order
``u1, x1, y1, z1, u2, ...``) to exact coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .freealg import IndexOutOfRange, Letter, Polynomial

__all__ = ["CommPoly", "CoordQuat", "quat_mul", "coordinatize", "coord_equal",
           "letter_image", "word_image"]

_COORD_NAMES = ("u", "x", "y", "z")


class CommPoly:
    """Sparse commutative polynomial over the 4n coordinate variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def variable(cls, nvars: int, idx: int, coeff=1) -> CommPoly:
        exps = [0] * nvars
        exps[idx] = 1
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def const(cls, nvars: int, c) -> CommPoly:
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: CommPoly) -> CommPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CommPoly(self.nvars, out)

    def __sub__(self, other: CommPoly) -> CommPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return CommPoly(self.nvars, out)

    def __neg__(self) -> CommPoly:
        return CommPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def scale(self, c) -> CommPoly:
        return CommPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other: CommPoly) -> CommPoly:
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CommPoly(self.nvars, out)

    def __eq__(self, other) -> bool:
        return isinstance(other, CommPoly) and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{_COORD_NAMES[v % 4]}{v // 4 + 1}" + (f"^{k}" if k > 1 else "")
                for v, k in enumerate(e) if k
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


class CoordQuat(NamedTuple):
    s: CommPoly
    xi: CommPoly
    yj: CommPoly
    zk: CommPoly

    @classmethod
    def zero(cls, nvars: int) -> CoordQuat:
        z = CommPoly(nvars)
        return cls(z, z, z, z)

    @classmethod
    def one(cls, nvars: int) -> CoordQuat:
        z = CommPoly(nvars)
        return cls(CommPoly.const(nvars, 1), z, z, z)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self)

    def __add__(self, other: CoordQuat) -> CoordQuat:
        return CoordQuat(*(a + b for a, b in zip(self, other)))

    def __sub__(self, other: CoordQuat) -> CoordQuat:
        return CoordQuat(*(a - b for a, b in zip(self, other)))

    def scale(self, c) -> CoordQuat:
        return CoordQuat(*(a.scale(c) for a in self))

    def conjugate(self) -> CoordQuat:
        return CoordQuat(self.s, -self.xi, -self.yj, -self.zk)


def quat_mul(a: CoordQuat, b: CoordQuat) -> CoordQuat:
    """Hamilton product."""
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return CoordQuat(
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


@lru_cache(maxsize=None)
def letter_image(letter: Letter, n: int) -> CoordQuat:
    nvars = 4 * n
    zero = CommPoly(nvars)
    if letter.is_basis:
        one = CommPoly.const(nvars, 1)
        comps = [zero, zero, zero, zero]
        comps["ijk".index(letter.basis_id) + 1] = one
        return CoordQuat(*comps)
    l = letter.index
    if l > n:
        raise IndexOutOfRange(f"letter {letter!r} exceeds n={n}")
    base = 4 * (l - 1)
    sign = -1 if letter.kind == "QConj" else 1
    return CoordQuat(
        CommPoly.variable(nvars, base),
        CommPoly.variable(nvars, base + 1, sign),
        CommPoly.variable(nvars, base + 2, sign),
        CommPoly.variable(nvars, base + 3, sign),
    )


@lru_cache(maxsize=1 << 17)
def word_image(w: tuple, n: int) -> CoordQuat:
    """Image of a word, built left to right so prefixes are shared."""
    if not w:
        return CoordQuat.one(4 * n)
    return quat_mul(word_image(w[:-1], n), letter_image(w[-1], n))


def coordinatize(p: Polynomial, n: int) -> CoordQuat:
    acc = ({}, {}, {}, {})
    for c, w in p:
        c = int(c) if c.denominator == 1 else c
        img = word_image(tuple(w), n)
        for out, comp in zip(acc, img):
            for e, v in comp.terms.items():
                out[e] = out.get(e, 0) + c * v
    nvars = 4 * n
    return CoordQuat(*(CommPoly(nvars, out) for out in acc))


def coord_equal(p: Polynomial, other: Polynomial, n: int) -> bool:
    """Equality modulo the defining ideal."""
    return coordinatize(p - other, n).is_zero()
