"""Construction, coroots, pairings, duality, length classes."""

from fractions import Fraction

import pytest

from helpers import get_system, raw_pairing, type_names
from rootkit import (
    CartanType,
    InadmissibleRank,
    LengthClass,
    NotARoot,
    ParseError,
    admissible_types,
    cartan_matrix,
    closure_system,
    coroot,
    dual_system,
    length_class,
    pairing,
    symmetrizer,
)
from rootkit.linalg import form_value, vadd, vneg, vscale

Q = Fraction


def vec(*xs):
    return tuple(Q(x) for x in xs)


class TestCartanType:
    def test_parse(self):
        assert CartanType.parse("B3") == CartanType("B", 3)
        assert str(CartanType.parse("E8")) == "E8"

    @pytest.mark.parametrize("bad", ["Z9", "b3", "A", "3A", "A-1", ""])
    def test_parse_errors(self, bad):
        with pytest.raises(ParseError):
            CartanType.parse(bad)

    @pytest.mark.parametrize("fam,rank", [
        ("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9),
        ("F", 3), ("F", 5), ("G", 1), ("G", 3),
    ])
    def test_inadmissible_ranks(self, fam, rank):
        with pytest.raises(InadmissibleRank):
            CartanType(fam, rank)

    def test_admissible_count_rank_8(self):
        types = admissible_types(8)
        assert [str(t) for t in types] == type_names(8)
        assert len(types) == 31


class TestBuildSystem:
    def test_a2_golden(self):
        s = get_system("A2")
        expected = {vec(*[int(k == i) - int(k == j) for k in range(3)])
                    for i in range(3) for j in range(3) if i != j}
        assert set(s.roots) == expected
        assert len(s.roots) == 6
        assert s.simples == (vec(1, -1, 0), vec(0, 1, -1))

    def test_a1_smallest(self):
        s = get_system("A1")
        assert set(s.roots) == {vec(1, -1), vec(-1, 1)}

    def test_g2_golden(self):
        s = get_system("G2")
        assert len(s.roots) == 12
        assert s.simples == (vec(1, -1, 0), vec(-2, 1, 1))

    @pytest.mark.parametrize("name,count", [
        ("A4", 20), ("B4", 32), ("C4", 32), ("D4", 24),
        ("E6", 72), ("E7", 126), ("E8", 240), ("F4", 48), ("G2", 12),
    ])
    def test_root_counts(self, name, count):
        assert len(get_system(name).roots) == count

    @pytest.mark.parametrize("name", type_names(6))
    def test_symmetry_and_reducedness(self, name):
        s = get_system(name)
        roots = set(s.roots)
        assert roots == {vneg(b) for b in roots}
        assert all(any(x != 0 for x in b) for b in roots)
        for b in roots:
            assert vscale(2, b) not in roots
            assert vscale(Q(1, 2), b) not in roots

    @pytest.mark.parametrize("name", type_names(8))
    def test_length_class_counts(self, name):
        s = get_system(name)
        lengths = {s.sq_length(k) for k in range(len(s.roots))}
        assert len(lengths) == (1 if s.is_simply_laced else 2)

    @pytest.mark.parametrize("name", ["A3", "B3", "C3", "D4", "F4", "G2"])
    def test_pairing_integrality(self, name):
        s = get_system(name)
        for beta in s.roots:
            for gamma in s.roots:
                assert pairing(s, beta, gamma).denominator == 1


class TestCoroot:
    def test_simply_laced_self(self):
        s = get_system("A3")
        for b in s.roots:
            assert form_value(s.form, b, b) == 2
            assert coroot(s, b) == b

    def test_b_short(self):
        s = get_system("B3")
        e3 = vec(0, 0, 1)
        assert coroot(s, e3) == vec(0, 0, 2)

    def test_g2_long(self):
        s = get_system("G2")
        beta = s.simples[1]
        assert form_value(s.form, beta, beta) == 6
        assert coroot(s, beta) == vscale(Q(1, 3), beta)

    def test_not_a_root(self):
        s = get_system("A2")
        with pytest.raises(NotARoot):
            coroot(s, vec(1, 1, -2))


class TestPairing:
    @pytest.mark.parametrize("name", ["A1", "A3", "B2", "C3", "D4", "F4", "G2"])
    def test_self_pairing_two(self, name):
        s = get_system(name)
        for b in s.roots:
            assert pairing(s, b, b) == 2

    def test_g2_pairings(self):
        s = get_system("G2")
        alpha, beta = s.simples
        # Independent evaluation straight from coordinates.
        assert raw_pairing(s, alpha, beta) == -1
        assert raw_pairing(s, beta, alpha) == -3
        assert pairing(s, alpha, beta) == -1
        assert pairing(s, beta, alpha) == -3

    def test_not_a_root(self):
        s = get_system("B2")
        with pytest.raises(NotARoot):
            pairing(s, vec(1, 0), vec(3, 3))


class TestDualSystem:
    def test_a_self_dual(self):
        s = get_system("A3")
        assert set(dual_system(s).roots) == set(s.roots)

    def test_b_dual_is_c(self):
        b3 = get_system("B3")
        d = dual_system(b3)
        assert str(d.ctype) == "C3"
        assert set(d.roots) == set(get_system("C3").roots)
        assert d.simples == get_system("C3").simples

    @pytest.mark.parametrize("name", type_names(8))
    def test_cartan_transpose(self, name):
        s = get_system(name)
        d = dual_system(s)
        assert d.cartan == tuple(zip(*s.cartan))

    @pytest.mark.parametrize("name", ["A2", "B3", "C3", "F4", "G2"])
    def test_double_dual(self, name):
        s = get_system(name)
        dd = dual_system(dual_system(s))
        assert dd.roots == s.roots
        assert dd.simples == s.simples

    def test_g2_exchanges_length_classes(self):
        s = get_system("G2")
        d = dual_system(s)
        longs = {b for b in s.roots if length_class(s, b) is LengthClass.LONG}
        short_duals = {coroot(s, b) for b in longs}
        assert short_duals == {b for b in d.roots
                               if length_class(d, b) is LengthClass.SHORT}


class TestLengthClass:
    def test_simply_laced_all_long(self):
        s = get_system("A4")
        assert s.is_simply_laced
        assert all(length_class(s, b) is LengthClass.LONG for b in s.roots)

    def test_b3_classes(self):
        s = get_system("B3")
        assert not s.is_simply_laced
        assert form_value(s.form, vec(1, -1, 0), vec(1, -1, 0)) == 2
        assert form_value(s.form, vec(0, 0, 1), vec(0, 0, 1)) == 1
        assert length_class(s, vec(1, -1, 0)) is LengthClass.LONG
        assert length_class(s, vec(0, 0, 1)) is LengthClass.SHORT

    def test_g2_classes(self):
        s = get_system("G2")
        assert length_class(s, s.simples[0]) is LengthClass.SHORT
        assert length_class(s, s.simples[1]) is LengthClass.LONG


class TestClosureModels:
    @pytest.mark.parametrize("name", ["A1", "A5", "B2", "B5", "C3", "D4", "G2"])
    def test_matches_classical(self, name):
        classical = get_system(name)
        closure = closure_system(name)
        assert closure.cartan == classical.cartan
        assert closure.cartan == cartan_matrix(classical.ctype)
        assert len(closure.roots) == len(classical.roots)

    def test_symmetrizer_values(self):
        assert symmetrizer(cartan_matrix(CartanType("F", 4))) == (2, 2, 1, 1)
        assert symmetrizer(cartan_matrix(CartanType("G", 2))) == (1, 3)
        assert symmetrizer(cartan_matrix(CartanType("A", 4))) == (1, 1, 1, 1)
        assert symmetrizer(cartan_matrix(CartanType("B", 3))) == (2, 2, 1)
        assert symmetrizer(cartan_matrix(CartanType("C", 3))) == (1, 1, 2)

    def test_deterministic_rebuild(self):
        a = closure_system("F4")
        b = closure_system("F4")
        assert a.roots == b.roots
        assert a.form == b.form


@pytest.mark.parametrize("name", type_names(8))
def test_negation_is_involution(name):
    s = get_system(name)
    for idx in range(len(s.roots)):
        assert s.negation(s.negation(idx)) == idx
        assert s.roots[s.negation(idx)] == vneg(s.roots[idx])


@pytest.mark.parametrize("name", type_names(6))
def test_base_expansion_signs(name):
    s = get_system(name)
    for idx, b in enumerate(s.roots):
        coeffs = s.base_coefficients(idx)
        assert all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)
        recon = s.simples[0]
        recon = vscale(coeffs[0], s.simples[0])
        for c, a in zip(coeffs[1:], s.simples[1:]):
            recon = vadd(recon, vscale(c, a))
        assert recon == b
