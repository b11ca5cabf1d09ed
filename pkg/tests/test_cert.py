import pytest

from conftest import bg
from quatnorm import Basis, BasisElement, I, J, K, Polynomial, parse_expression, q, qbar
from quatnorm.cert import (
    DegreeOneElement, NotReduced, SQuadruplet, certify, element_type, is_clear,
    leader_label, overlaps, s_polynomial, squadruplets,
)
from quatnorm.oracle import coordinatize
from quatnorm.qideal import multiplication_table

P = parse_expression


def elem(text, family="user"):
    return BasisElement(P(text), family)


def table_basis():
    return Basis([BasisElement(p, "BG2a") for p in multiplication_table()], 4, 1)


class TestOverlaps:
    def test_table_pair(self):
        (s,) = overlaps(elem("j*i + k"), elem("i*j - k"))
        assert s.leader == (J, I, J) and s.L == (J,) and s.R == (J,)

    def test_no_overlap(self):
        f = elem("q1'*q1 - q1*q1'")
        assert overlaps(f, f) == []

    def test_two_bracket_elements(self):
        f = elem("[q3*q2]*q1 - q1*[q3*q2]")
        g = elem("[q2*q1]*q1 - q1*[q2*q1]")
        assert f.lead_word == (q(3), q(2), q(1)) and g.lead_word == (q(2), q(1), q(1))
        quads = overlaps(f, g)
        assert SQuadruplet(0, 0, (q(1),), (q(3),), (q(3), q(2), q(1), q(1))) in quads

    def test_self_overlap_included(self):
        f = elem("i*i + 1")
        (s,) = overlaps(f, f)
        assert s.leader == (I, I, I)
        assert s_polynomial(s, Basis([f], 3, 1)).is_zero()

    def test_enumeration_matches_pairwise(self):
        b = bg(2, 4)
        quads, pairs = squadruplets(b, 5)
        brute = [s for fi, f in enumerate(b) for gi, g in enumerate(b)
                 for s in overlaps(f, g, fi, gi) if len(s.leader) <= 5]
        assert sorted(quads) == sorted(brute)
        assert pairs == len({(s.f_index, s.g_index) for s in brute})

    def test_overlap_constraints(self):
        b = bg(2, 4)
        for s in squadruplets(b)[0]:
            wf, wg = b.lead_words[s.f_index], b.lead_words[s.g_index]
            assert wf + s.R == s.L + wg == s.leader
            assert 0 < len(s.L) < len(wf) and 0 < len(s.R) < len(wg)


class TestClear:
    def test_degree_one_interior(self):
        b = bg(1, 3)
        (s,) = [x for x in squadruplets(b)[0] if x.leader == (J, I, J)]
        assert is_clear(s, b)

    def test_interior_irreducible(self):
        # the interior q2 q1 is not a leading word: q2[q1] - [q1]q2 leads with q2 q1'
        b = bg(3, 4)
        s = [x for x in squadruplets(b)[0] if x.leader == (q(3), q(2), q(1), q(1))]
        assert s and all(is_clear(x, b) for x in s)

    def test_reducible_interior_not_clear(self):
        b = bg(2, 5)
        s = [x for x in squadruplets(b)[0] if not b.is_reducible(x.leader[1:-1])]
        t = [x for x in squadruplets(b)[0] if b.is_reducible(x.leader[1:-1])]
        assert all(is_clear(x, b) for x in s)
        assert t and not any(is_clear(x, b) for x in t)

    def test_empty_interior(self):
        s = SQuadruplet(0, 0, (I,), (I,), (I, I))
        assert is_clear(s, table_basis())


class TestSPolynomial:
    def test_table_pair(self):
        b = Basis([elem("j*i + k"), elem("i*j - k")], 3, 1)
        s = SQuadruplet(0, 1, (J,), (J,), (J, I, J))
        assert s_polynomial(s, b) == P("k*j + j*k")

    def test_below_leader_and_in_ideal(self):
        b = bg(2, 5)
        for s in squadruplets(b)[0]:
            sp = s_polynomial(s, b)
            assert not sp or (len(sp.lead_word), sp.lead_word) < (len(s.leader), s.leader)
            assert coordinatize(sp, 2).is_zero()


class TestCertify:
    def test_small_bg(self):
        r = certify(bg(1, 5), 5)
        assert r.passed and r.failures == []

    def test_deletion_detected(self):
        b = bg(2, 6)
        idx = next(i for i, e in enumerate(b) if e.family == "BG3b")
        r = certify(b.without(idx), 6)
        assert not r.passed
        for s, rem in r.failures:
            assert rem

    def test_table_only_all_mode(self):
        r = certify(table_basis(), 4, mode="all")
        assert r.passed and r.squads_total > 0

    @pytest.mark.parametrize("n,d", [(1, 6), (2, 4), (2, 5), (2, 6)])
    def test_filter_soundness(self, n, d):
        clear = certify(bg(n, d), d)
        full = certify(bg(n, d), d, mode="all")
        assert clear.passed == full.passed == True  # noqa: E712
        assert full.squads_reduced == full.squads_total
        assert clear.squads_reduced == clear.squads_clear == full.squads_clear

    def test_counts_frozen(self):
        r = certify(bg(2, 6), 6)
        assert (r.pairs_scanned, r.squads_total, r.squads_clear) == (375, 378, 372)

    def test_workers_deterministic(self):
        b = bg(2, 5)
        b0 = b.without(next(i for i, e in enumerate(b) if e.family == "BG4"))
        one = certify(b0, 5)
        many = certify(b0, 5, workers=3)
        assert one.failures == many.failures
        assert one.to_dict() | {"elapsed_ms": 0} == many.to_dict() | {"elapsed_ms": 0}

    def test_preconditions(self):
        with pytest.raises(DegreeOneElement):
            certify(Basis([elem("q1 - q1'")], 3, 1))
        dup = Basis([elem("q1'*q1 - q1*q1'"), elem("q1'*q1*q1 - q1*q1'*q1")], 3, 1)
        with pytest.raises(NotReduced):
            certify(dup)
        assert certify(dup, mode="all").squads_total == 0
        with pytest.raises(ValueError):
            certify(bg(1, 3), mode="some")

    def test_report_fields(self):
        d = certify(bg(1, 4), 4).to_dict()
        for key in ("n", "degree_bound", "squads_total", "squads_clear", "clear_ratio",
                    "failures", "elapsed_ms"):
            assert key in d


class TestLabels:
    def test_element_types(self):
        b = bg(3, 5)
        kinds = {element_type(e) for e in b}
        assert kinds == {"T", "I", "V", "U", "N4", "N"}

    def test_leader_label(self):
        b = bg(1, 3)
        (s,) = [x for x in squadruplets(b)[0] if x.leader == (J, I, J)]
        assert leader_label(s, b) == "T+T"
