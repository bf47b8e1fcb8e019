from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellq.exactq import (QPolynomial, RationalFunction, RF_ONE, RF_Q,
                         cyclotomic, factor_cyclotomic, one_minus_qpow,
                         poly_gcd)


def test_cyclotomic_small():
    assert str(cyclotomic(1)) == "q - 1"
    assert str(cyclotomic(2)) == "q + 1"
    assert str(cyclotomic(6)) == "q^2 - q + 1"
    with pytest.raises(ValueError):
        cyclotomic(0)


def test_cyclotomic_divides_qn_minus_one():
    for n in range(1, 31):
        assert cyclotomic(n).divides(QPolynomial.qpow_minus_one(n))


def test_cyclotomic_degree_is_totient():
    import math
    for n in range(1, 31):
        phi = sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)
        assert cyclotomic(n).degree == phi
        assert cyclotomic(n).leading == 1


def test_factor_q6_minus_one():
    f = factor_cyclotomic(QPolynomial.qpow_minus_one(6))
    assert f.factors == {1: 1, 2: 1, 3: 1, 6: 1}
    assert f.scalar == 1 and f.q_power == 0 and f.remainder.is_one()


def test_factor_edge_cases():
    f = factor_cyclotomic(QPolynomial.of(1, 1))
    assert f.factors == {2: 1} and f.remainder.is_one()
    f = factor_cyclotomic(QPolynomial.of(2, 0, 1))  # q^2 + 2: no cyclotomic roots
    assert f.factors == {} and f.remainder == QPolynomial.of(2, 0, 1)
    with pytest.raises(ValueError):
        factor_cyclotomic(QPolynomial.zero())


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(1, 30), st.integers(1, 2)), max_size=4),
       st.integers(0, 3),
       st.fractions(min_value=Fraction(-5), max_value=Fraction(5)).filter(lambda x: x != 0))
def test_factorization_reconstructs(factors, qpow, scalar):
    p = QPolynomial.monomial(qpow, scalar)
    for n, m in factors:
        p = p * cyclotomic(n) ** m
    f = factor_cyclotomic(p)
    assert f.reconstruct() == p


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=6),
       st.lists(st.integers(-4, 4), min_size=1, max_size=6))
def test_rational_function_canonical(a, b):
    pa, pb = QPolynomial(a), QPolynomial(b)
    if pb.is_zero():
        with pytest.raises(ZeroDivisionError):
            RationalFunction(pa, pb)
        return
    r = RationalFunction(pa, pb)
    assert r.den.leading == 1
    assert poly_gcd(r.num, r.den).degree <= 0 or r.num.is_zero()
    # re-reducing is a fixed point
    again = RationalFunction(r.num, r.den)
    assert again == r


def test_evaluation_and_field_ops():
    r = RationalFunction.of(QPolynomial.of(1, -1), QPolynomial.of(1, 1))
    assert r.evaluate(2) == Fraction(-1, 3)
    assert r * r.inverse() == RF_ONE
    with pytest.raises(ZeroDivisionError):
        r.evaluate(-1)
    with pytest.raises(ZeroDivisionError):
        r / RationalFunction(QPolynomial.zero())


def test_cancellation():
    # (1 - q^2)/(1 - q) reduces to q + 1 by polynomial division
    r = RationalFunction(QPolynomial.of(1, 0, -1), QPolynomial.of(1, -1))
    assert r == RF_Q + 1


def test_negative_power_helper():
    assert one_minus_qpow(3) == RF_ONE - RF_Q ** 3
    assert one_minus_qpow(-1) == RF_ONE - RationalFunction.qpow(-1)
    assert one_minus_qpow(-1) == -(RF_ONE - RF_Q) / RF_Q


def test_json_round_trip():
    p = QPolynomial.of(Fraction(1, 2), -3, 0, 7)
    assert QPolynomial.from_json(p.to_json()) == p
    r = RationalFunction(p, QPolynomial.of(1, 2, 1))
    assert RationalFunction.from_json(r.to_json()) == r


def test_factored_rendering():
    f = (RF_Q - 1) ** 2 * cyclotomic(5) / (RationalFunction(cyclotomic(2)) ** 2
                                           * cyclotomic(3) * cyclotomic(6))
    assert f.factored() == "(q-1)^2 * Phi5 / (Phi2^2 Phi3 Phi6)"
