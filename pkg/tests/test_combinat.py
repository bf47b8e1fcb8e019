import math

import pytest

from ellq.combinat import (adjacent_flip_symbols, component_rep_to_symbol,
                           conjugacy_class_size_sn, contents,
                           distinguished_partitions, g_poly, hook_lengths,
                           mn_character, n_invariant, partitions_of,
                           separates_component_group, symbol_positions,
                           symbol_to_component_rep, transpose, triv_symbol)
from ellq.exactq import RF_ONE, RF_Q, RationalFunction


def test_hooks():
    assert sorted(h for _, h in hook_lengths((2, 1))) == [1, 1, 3]
    assert [h for _, h in hook_lengths((5,))] == [5, 4, 3, 2, 1]
    assert hook_lengths(()) == []


def test_hooks_transpose_invariant():
    for n in range(1, 8):
        for lam in partitions_of(n):
            a = sorted(h for _, h in hook_lengths(lam))
            b = sorted(h for _, h in hook_lengths(transpose(lam)))
            assert a == b
            assert len(a) == n


def test_contents_and_n():
    assert sorted(c for _, c in contents((2,))) == [0, 1]
    assert sorted(c for _, c in contents((1, 1))) == [-1, 0]
    assert n_invariant((1, 1)) == 1
    for n in range(1, 7):
        assert n_invariant((n,)) == 0


def test_mn_basic():
    assert mn_character((3,), (3,)) == 1
    assert mn_character((1, 1, 1), (2, 1)) == -1  # sign character
    assert mn_character((2, 1), (3,)) == -1
    with pytest.raises(ValueError):
        mn_character((2,), (3,))


def test_mn_orthogonality():
    for n in range(1, 7):
        ps = partitions_of(n)
        for a in ps:
            for b in ps:
                s = sum(conjugacy_class_size_sn(al) * mn_character(a, al)
                        * mn_character(b, al) for al in ps)
                assert s == (math.factorial(n) if a == b else 0)


def test_g_poly_single_cell():
    t, s = RF_Q ** 2, -RF_Q
    assert g_poly((1,), t, s) == (1 - RF_Q) / (1 - RF_Q ** 2)
    # lam = (2) at s = 0: 1/((1-t)(1-t^2))
    t = RF_Q
    z = RationalFunction.of(0)
    assert g_poly((2,), t, z) == RF_ONE / ((1 - t) * (1 - t ** 2))


def test_g_poly_pole():
    with pytest.raises(ZeroDivisionError):
        g_poly((1,), RF_ONE, RF_ONE)


def test_g_poly_against_character_sum():
    # multiplicity of sigma_lam in S_t(C^n) x wedge_s(C^n) by explicit character
    # summation over S_n at rational points, against the hook-content series
    from fractions import Fraction
    pts = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(-1, 2), Fraction(2)),
           (Fraction(1, 5), Fraction(-1, 7))]
    for n in range(1, 6):
        for lam in partitions_of(n):
            for tv, sv in pts:
                total = Fraction(0)
                for alpha in partitions_of(n):
                    # permutation character on C^n: prod over cycles of
                    # 1/(1-t^len) for S_t and (1+s^... ) via cycle formula
                    size = conjugacy_class_size_sn(alpha)
                    st_val = Fraction(1)
                    for r in alpha:
                        st_val /= (1 - tv ** r)
                    wedge_val = Fraction(1)
                    for r in alpha:
                        wedge_val *= (1 + (sv ** r) * (-1) ** (r + 1))
                    total += size * mn_character(lam, alpha) * st_val * wedge_val
                total /= math.factorial(n)
                g = g_poly(lam, RationalFunction.of(tv.numerator, tv.denominator),
                           RationalFunction.of(sv.numerator, sv.denominator))
                assert g.num.degree <= 0 and g.den.degree <= 0
                assert g.num.evaluate(0) / g.den.evaluate(0) == total, (lam, tv, sv)


def test_distinguished_partitions():
    assert distinguished_partitions("C", 2) == [(4,)]
    assert distinguished_partitions("C", 3) == [(6,), (4, 2)]
    assert distinguished_partitions("D", 4) == [(7, 1), (5, 3)]
    assert distinguished_partitions("B", 2) == [(5,)]
    assert distinguished_partitions("B", 3) == [(7,)]
    assert distinguished_partitions("B", 4) == [(9,), (5, 3, 1)]
    for p in distinguished_partitions("B", 4):
        assert sum(p) == 9 and all(x % 2 == 1 for x in p) and len(set(p)) == len(p)


def test_triv_symbol_type_c():
    # single even part: no padding
    s = triv_symbol("C", (4,))
    assert s.top == (2,) and s.bottom == ()
    # three parts 2,4,6: entries {1,3,5}
    s = triv_symbol("C", (6, 4, 2))
    assert s.top == (1, 5) and s.bottom == (3,)
    # two parts: padded with a zero
    s = triv_symbol("C", (6, 2))
    assert s.top == (0, 5) and s.bottom == (2,)


def test_triv_symbol_type_d():
    s = triv_symbol("D", (7, 5, 3, 1))
    assert s.top == (0, 4) and s.bottom == (2, 6)
    # first entry always in the top row
    assert 0 in s.top


def test_triv_symbol_type_b_mirrors_c():
    s = triv_symbol("B", (5,))
    assert s.top == (2,) and s.bottom == ()
    s = triv_symbol("B", (5, 3, 1))
    assert s.top == (0, 4) and s.bottom == (2,)


def test_symbol_component_rep_round_trip():
    for kind, u in [("C", (6, 4, 2)), ("C", (8, 2)), ("D", (7, 5, 3, 1)),
                    ("B", (5, 3, 1))]:
        triv = triv_symbol(kind, u)
        assert symbol_to_component_rep(kind, u, triv) == (0,) * len(symbol_positions(kind, u))
        for sym, rep in adjacent_flip_symbols(kind, u):
            assert symbol_to_component_rep(kind, u, sym) == rep
            assert component_rep_to_symbol(kind, u, rep) == sym
            assert sum(rep) == 2  # two adjacent sign slots


def test_flip_symbols_strictly_increasing():
    for kind in ("C", "D"):
        for n in range(2, 9):
            for u in distinguished_partitions(kind, n):
                for sym, _ in adjacent_flip_symbols(kind, u):
                    assert all(sym.top[i] < sym.top[i + 1] for i in range(len(sym.top) - 1))
                    assert all(sym.bottom[i] < sym.bottom[i + 1] for i in range(len(sym.bottom) - 1))


def test_separation_up_to_rank_8():
    for kind in ("C", "D"):
        for n in range(1, 9):
            for u in distinguished_partitions(kind, n):
                assert separates_component_group(kind, u), (kind, u)


def test_sp12_separation_example():
    # three-part case: the component group modulo the diagonal has order 4
    u = (6, 4, 2)
    assert len(symbol_positions("C", u)) == 3
    assert separates_component_group("C", u)
