import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import bg, ext, polys
from quatnorm import (
    Basis, BasisElement, I, J, K, Polynomial, bracket_commutator, enumerate_bg,
    extended_rules, ideal_generators, parse_expression, q, qbar, shift_difference,
)
from quatnorm.oracle import coordinatize
from quatnorm.reduce import (
    DegreeGuard, DivisionMatch, MatchMismatch, find_all_divisions, find_division,
    is_reduced_basis, normal_form, reduce_step, reduces_to_zero,
)
from quatnorm.structcheck import conforms_normal_pattern

P = parse_expression


def single(text, family="user"):
    return Basis([BasisElement(P(text), family)], 3, 1)


class TestDivision:
    def test_match_found(self):
        b = bg(2, 3)
        m = find_division((qbar(1), q(1), q(2)), b)
        assert b[m.rule_index].poly == P("q1'*q1 - q1*q1'")
        assert m.left == () and m.right == (q(2),)

    def test_irreducible_and_empty(self):
        assert find_division((q(1), q(2)), bg(2, 3)) is None
        assert find_division((), bg(2, 3)) is None

    def test_leftmost_first(self):
        b = bg(1, 3)
        m = find_division((q(1), J, I, I, I), b)
        assert m.left == (q(1),)

    def test_all_divisions_contain_deterministic_choice(self):
        b = bg(2, 4)
        w = (I, I, q(2), q(1), q(1))
        assert find_division(w, b) in find_all_divisions(w, b)


class TestReduceStep:
    def test_table_rule(self):
        b = single("j*i + k")
        out = reduce_step(P("j*i"), DivisionMatch(0, (), (), (J, I)), b)
        assert out == P("-k")

    def test_keeps_coefficient(self):
        b = single("q1'*q1 - q1*q1'")
        m = DivisionMatch(0, (), (), (qbar(1), q(1)))
        assert reduce_step(P("q1'*q1"), m, b) == P("q1*q1'")
        assert reduce_step(P("2*q1'*q1"), m, b) == P("2*q1*q1'")

    def test_mismatch(self):
        b = single("j*i + k")
        with pytest.raises(MatchMismatch):
            reduce_step(P("i*j"), DivisionMatch(0, (), (), (J, I)), b)

    @given(polys(2, 3, 4).filter(bool))
    def test_leading_word_decreases(self, p):
        b = bg(2, 3)
        m = find_division(p.lead_word, b)
        if m is not None:
            out = reduce_step(p, m, b)
            assert not out or (len(out.lead_word), out.lead_word) < (len(p.lead_word), p.lead_word)


class TestNormalForm:
    def test_examples(self):
        b = bg(2, 3)
        assert normal_form(P("i*j"), b)[0] == P("k")
        assert normal_form(P("2*q1' + q1 + i*q1*i + j*q1*j + k*q1*k"), b)[0].is_zero()
        assert normal_form(P("[q1*q2] - [q2*q1]"), b)[0].is_zero()

    def test_reduces_to_zero(self):
        b = bg(3, 5)
        ok, _ = reduces_to_zero(bracket_commutator((q(1),), (q(2), q(1), q(3))), b)
        assert ok
        assert reduces_to_zero(P("q1"), b)[0] is False

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_generators_reduce_to_zero(self, n):
        b = bg(n, 4)
        for e in ideal_generators(n):
            assert reduces_to_zero(e.poly, b)[0], e

    def test_degree_guard(self):
        with pytest.raises(DegreeGuard):
            normal_form(P("q1*q1*q1*q1"), bg(1, 3))

    def test_strategy_names(self):
        b = bg(2, 4)
        p = P("q2*q1*q1' + k*j*i*q1")
        det = normal_form(p, b, "det")[0]
        assert normal_form(p, b, "deterministic")[0] == det
        assert normal_form(p, b, "rand:5")[0] == det
        assert normal_form(p, b, 11)[0] == det
        assert normal_form(p, b, random.Random(2))[0] == det
        with pytest.raises(ValueError):
            normal_form(p, b, "fastest")

    @given(polys(2, 4, 5))
    def test_output_words_irreducible_and_conforming(self, p):
        b = bg(2, 4)
        nf, _ = normal_form(p, b)
        for _, w in nf:
            assert find_division(w, b) is None
            assert conforms_normal_pattern(w, 2) is not None

    @given(polys(3, 4, 5))
    def test_soundness(self, p):
        nf, _ = normal_form(p, bg(3, 4))
        assert coordinatize(p, 3) == coordinatize(nf, 3)

    @given(polys(2, 4, 5))
    def test_trace_replay(self, p):
        b = bg(2, 4)
        for strategy in ("det", "rand:1"):
            nf, trace = normal_form(p, b, strategy)
            assert trace.final == nf
            assert trace.replay(p, b) == nf

    @given(polys(2, 4, 5), st.integers(0, 10 ** 6))
    def test_confluence(self, p, seed):
        b = bg(2, 4)
        assert normal_form(p, b, f"rand:{seed}")[0] == normal_form(p, b)[0]

    @given(polys(2, 4, 5))
    def test_linear(self, p):
        b = bg(2, 4)
        a = normal_form(p, b)[0]
        assert normal_form(p.scale(3), b)[0] == a.scale(3)
        assert normal_form(p - p, b)[0].is_zero()

    def test_extended_rules_agree(self):
        b = bg(2, 5)
        both = b.union(ext(2, 5))
        rng = random.Random(8)
        letters = (q(1), qbar(1), q(2), qbar(2), I, J, K)
        for _ in range(80):
            p = Polynomial()
            for _ in range(rng.randint(1, 5)):
                w = tuple(rng.choice(letters) for _ in range(rng.randint(0, 5)))
                p = p + Polynomial.monomial(w, rng.randint(-9, 9))
            assert normal_form(p, both)[0] == normal_form(p, b)[0]


class TestReducedBasis:
    def test_bg_is_reduced(self):
        assert is_reduced_basis(bg(2, 5)) == []

    def test_injected_element_detected(self):
        b = bg(2, 5)
        bad = BasisElement(P("q1'*q1*q2 - q1*q1'*q2"), "user")
        c = Basis(b.elements + (bad,), 5, 2)
        v = is_reduced_basis(c)
        assert len(v) == 1
        assert v[0].reduced == len(b)
        assert c[v[0].reducer].poly == P("q1'*q1 - q1*q1'")

    def test_singleton(self):
        assert is_reduced_basis(single("q1*q1 - q1'")) == []

    def test_strict_reading_reports_tail_words(self):
        # tails of BG elements are generally reducible by other elements
        assert is_reduced_basis(bg(1, 2), strict=True) == []
        assert is_reduced_basis(bg(2, 3), strict=True) != []
