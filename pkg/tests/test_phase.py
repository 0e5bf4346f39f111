from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from twistalg.phase import PhaseCoefficient as P

coeffs = st.dictionaries(
    st.integers(-6, 6),
    st.fractions(min_value=-5, max_value=5, max_denominator=7),
    max_size=4,
).map(P)


@given(coeffs, coeffs, coeffs)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == P()


@given(coeffs)
def test_text_roundtrip(a):
    assert P.parse(str(a)) == a


@given(coeffs, coeffs)
def test_conjugation_is_a_ring_involution(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()


@given(st.integers(-20, 20), st.sampled_from([1, -1, Fraction(1, 3)]))
def test_monomial_inverse(k, q):
    m = P.mu(k, q)
    assert m * m.inverse() == P.const(1)


def test_non_units_have_no_inverse():
    with pytest.raises(Exception):
        (P.mu(1) + P.mu(2)).inverse()


def test_zero_is_canonical():
    assert P({3: 0}) == P()
    assert not P({3: 0})
    assert str(P()) == "0"


def test_lambda_is_mu_squared():
    assert P.parse("lambda") == P.mu(2)
    assert P.parse("lambdabar") * P.parse("lambda") == P.const(1)


def test_classical_specialisation():
    assert (P.mu(3, 2) - P.mu(-1)).at_one() == 1
