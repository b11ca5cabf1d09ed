import random

import pytest
from hypothesis import given

from conftest import bg, polys, words
from quatnorm import (
    I, J, K, IndexOutOfRange, Polynomial, bracket, conjugate_poly, extended_rules,
    ideal_generators, parse_expression, q, qbar, shift_difference,
)
from quatnorm.oracle import CommPoly, CoordQuat, coord_equal, coordinatize, quat_mul

P = parse_expression


def mono(*letters):
    return Polynomial.monomial(letters)


def unit(nvars, comp):
    zero = CommPoly(nvars)
    parts = [zero] * 4
    parts[comp] = CommPoly.const(nvars, 1)
    return CoordQuat(*parts)


class TestQuaternionArithmetic:
    def test_ij_is_k(self):
        assert quat_mul(unit(4, 1), unit(4, 2)) == unit(4, 3)

    def test_unit(self):
        a = coordinatize(P("q1 + 3*i"), 1)
        assert quat_mul(a, CoordQuat.one(4)) == a

    def test_norm(self):
        img = coordinatize(mono(q(1), qbar(1)), 1)
        u, x, y, z = (CommPoly.variable(4, v) for v in range(4))
        assert img.s == u * u + x * x + y * y + z * z
        assert img.xi.is_zero() and img.yj.is_zero() and img.zk.is_zero()


class TestCoordinatize:
    def test_variable(self):
        img = coordinatize(mono(q(1)), 1)
        assert tuple(img) == tuple(CommPoly.variable(4, v) for v in range(4))

    def test_ideal_elements_vanish(self):
        assert coordinatize(P("i*j - k"), 1).is_zero()
        assert coordinatize(P("2*q1' + q1 + i*q1*i + j*q1*j + k*q1*k"), 1).is_zero()

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            coordinatize(mono(q(2)), 1)

    def test_coord_equal(self):
        assert coord_equal(mono(qbar(1), q(1)), mono(q(1), qbar(1)), 1)
        assert not coord_equal(mono(q(1)), mono(q(2)), 2)

    @given(words(3, 1, 3), words(3, 1, 3))
    def test_shift_invariance(self, x, y):
        assert coord_equal(bracket(x + y), bracket(y + x), 3)
        assert coordinatize(shift_difference(x, y), 3).is_zero()

    @given(polys(2, 3, 4), polys(2, 3, 4))
    def test_homomorphism(self, a, b):
        assert coordinatize(a * b, 2) == quat_mul(coordinatize(a, 2), coordinatize(b, 2))

    @given(words(2, 0, 5))
    def test_conjugation(self, w):
        p = Polynomial.monomial(w)
        assert coordinatize(conjugate_poly(p), 2) == coordinatize(p, 2).conjugate()

    @given(words(3, 0, 5))
    def test_bracket_scalar(self, w):
        img = coordinatize(bracket(w), 3)
        assert img.xi.is_zero() and img.yj.is_zero() and img.zk.is_zero()
        assert img.s == coordinatize(Polynomial.monomial(w), 3).s.scale(2)

    def test_not_everything_vanishes(self):
        rng = random.Random(3)
        letters = (q(1), qbar(1), q(2), I, J, K)
        for _ in range(50):
            w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
            assert not coordinatize(Polynomial.monomial(w), 2).is_zero()


class TestEngineClaims:
    @pytest.mark.parametrize("n,d", [(1, 7), (2, 6), (3, 5)])
    def test_bg_in_ideal(self, n, d):
        for e in bg(n, d):
            assert coordinatize(e.poly, n).is_zero(), e

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_generators_in_ideal(self, n):
        assert all(coordinatize(e.poly, n).is_zero() for e in ideal_generators(n))

    def test_extended_rules_in_ideal(self):
        assert all(coordinatize(e.poly, 2).is_zero() for e in extended_rules(2, 4))
