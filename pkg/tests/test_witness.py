"""Constructive conjugating words: levi_conjugator and dominant_witness."""

from fractions import Fraction

import pytest

from helpers import get_system, type_names
from rootkit import (
    LengthClass,
    MultiplicityZero,
    NeitherSpecialNorCospecial,
    NotARoot,
    NotLong,
    NotPositiveRoot,
    NotSpecial,
    WeylWord,
    apply_word,
    dominant_rep,
    dominant_witness,
    full_base,
    height,
    highest_roots,
    is_cospecial,
    is_special,
    length_class,
    levi_conjugator,
    multiplicities,
)
from rootkit.linalg import vneg

Q = Fraction


def vec(*xs):
    return tuple(Q(x) for x in xs)


class TestLeviConjugator:
    def test_target_is_source(self):
        s = get_system("A3")
        res = levi_conjugator(s, 1, s.simples[1])
        assert res.word == WeylWord()
        assert res.source == res.target == s.simples[1]

    @pytest.mark.parametrize("n", range(4, 8))
    def test_d_highest_root(self, n):
        s = get_system(f"D{n}")
        top, _ = highest_roots(s)
        res = levi_conjugator(s, 0, top)
        assert res.word.avoids(0)
        assert apply_word(s, res.word, s.simples[0]) == top

    @pytest.mark.parametrize("i", range(4))
    def test_a4_highest_root_any_special(self, i):
        s = get_system("A4")
        top, _ = highest_roots(s)
        res = levi_conjugator(s, i, top)
        assert res.word.avoids(i)
        assert apply_word(s, res.word, s.simples[i]) == top

    def test_not_special(self):
        s = get_system("B3")
        top, _ = highest_roots(s)
        with pytest.raises(NotSpecial):
            levi_conjugator(s, 1, top)

    def test_not_long(self):
        s = get_system("B3")
        with pytest.raises(NotLong):
            levi_conjugator(s, 0, vec(1, 0, 0))

    def test_multiplicity_zero(self):
        s = get_system("B3")
        assert multiplicities(s, vec(0, 1, 1)).coeffs[0] == 0
        with pytest.raises(MultiplicityZero):
            levi_conjugator(s, 0, vec(0, 1, 1))

    def test_negative_target_rejected(self):
        s = get_system("A2")
        with pytest.raises(NotPositiveRoot):
            levi_conjugator(s, 0, vneg(highest_roots(s)[0]))

    def test_not_a_root(self):
        s = get_system("A2")
        with pytest.raises(NotARoot):
            levi_conjugator(s, 0, vec(2, -1, -1))

    @pytest.mark.parametrize("name", type_names(4))
    def test_exhaustive_small_ranks(self, name):
        s = get_system(name)
        top, _ = highest_roots(s)
        max_height = height(s, top)
        for i in range(s.rank):
            if not is_special(s, i):
                continue
            for b in s.positives:
                if length_class(s, b) is not LengthClass.LONG:
                    continue
                if multiplicities(s, b).coeffs[i] == 0:
                    continue
                res = levi_conjugator(s, i, b)
                assert res.word.avoids(i)
                assert apply_word(s, res.word, s.simples[i]) == b
                assert len(res.word) < max_height


class TestDominantWitness:
    @pytest.mark.parametrize("n", range(2, 8))
    def test_b_cospecial_short_root(self, n):
        s = get_system(f"B{n}")
        i = n - 1
        assert is_cospecial(s, i)
        res = dominant_witness(s, i)
        assert res.word.avoids(i)
        assert res.target == tuple(Q(int(k == 0)) for k in range(n))

    @pytest.mark.parametrize("name", ["A4", "D5", "E6", "E7"])
    def test_simply_laced_special_targets_highest(self, name):
        s = get_system(name)
        top, _ = highest_roots(s)
        for i in range(s.rank):
            if is_special(s, i):
                res = dominant_witness(s, i)
                assert res.target == top

    def test_g2_rejects(self):
        s = get_system("G2")
        for i in range(2):
            with pytest.raises(NeitherSpecialNorCospecial):
                dominant_witness(s, i)

    def test_f4_e8_reject_everywhere(self):
        for name in ("F4", "E8"):
            s = get_system(name)
            for i in range(s.rank):
                with pytest.raises(NeitherSpecialNorCospecial):
                    dominant_witness(s, i)

    @pytest.mark.parametrize("name", type_names(8))
    def test_matches_dominant_rep(self, name):
        s = get_system(name)
        for i in range(s.rank):
            if not (is_special(s, i) or is_cospecial(s, i)):
                continue
            res = dominant_witness(s, i)
            assert res.word.avoids(i)
            d, _ = dominant_rep(s, s.simples[i], full_base(s))
            assert res.target == d
            assert apply_word(s, res.word, s.simples[i]) == d
