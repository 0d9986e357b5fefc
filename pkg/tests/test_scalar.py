from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kakeya.errors import DivisionByZero, FieldMismatch, UnsupportedField
from kakeya.scalar import (
    DEFAULT_REAL_TOLERANCE,
    PrimeField,
    RationalField,
    RealField,
    binomial,
    field_from_json,
)

F5 = PrimeField(5)
F7 = PrimeField(7)
QQ = RationalField()
RR = RealField()


def test_binomial_matches_factorial_definition():
    import math

    for a in range(12):
        for b in range(a + 1):
            expected = math.factorial(a) // (math.factorial(b) * math.factorial(a - b))
            assert binomial(a, b) == expected


def test_binomial_zero_above_diagonal():
    assert binomial(3, 5) == 0
    assert binomial(0, 1) == 0


def test_binomial_rejects_negatives():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        binomial(4, -2)


def test_prime_field_requires_prime():
    with pytest.raises(UnsupportedField):
        PrimeField(6)
    with pytest.raises(UnsupportedField):
        PrimeField(1)
    PrimeField(2)
    PrimeField(101)


def test_prime_field_canonical_residues():
    a = F5(7)
    assert a.value == 2
    assert (-a).value == 3
    assert F5(-1) == F5(4)


def test_prime_field_inverse():
    for raw in range(1, 7):
        x = F7(raw)
        assert (x * x.inverse()).value == 1
    with pytest.raises(DivisionByZero):
        F7(0).inverse()


@given(st.integers(), st.integers())
def test_prime_field_addition_is_mod_p(a, b):
    assert (F7(a) + F7(b)).value == (a + b) % 7


@given(st.fractions(), st.fractions())
def test_rational_field_is_exact(x, y):
    assert (QQ(x) + QQ(y)).value == x + y
    assert (QQ(x) * QQ(y)).value == x * y


@settings(max_examples=200)
@given(st.fractions())
def test_rational_string_round_trip(x):
    s = QQ(x).to_str()
    assert QQ.scalar_from_str(s) == QQ(x)


def test_real_equality_uses_tolerance():
    a = RR(1.0)
    b = RR(1.0 + DEFAULT_REAL_TOLERANCE / 10)
    c = RR(1.0 + 1e-3)
    assert a == b
    assert a != c
    assert (a - b).is_zero


def test_real_inverse_rejects_near_zero():
    with pytest.raises(DivisionByZero):
        RR(1e-12).inverse()
    assert (RR(2.0).inverse() * RR(2.0)) == RR(1.0)


def test_real_scalars_are_unhashable():
    with pytest.raises(TypeError):
        hash(RR(1.5))


def test_exact_scalars_hash_consistently():
    assert hash(F5(2)) == hash(F5(7))
    assert hash(QQ(Fraction(1, 2))) == hash(QQ(Fraction(2, 4)))


def test_cross_field_arithmetic_is_refused():
    with pytest.raises(FieldMismatch):
        F5(1) + F7(1)
    with pytest.raises(FieldMismatch):
        F5(1) == QQ(1)


def test_power_matches_repeated_multiplication():
    x = F7(3)
    acc = F7(1)
    for k in range(8):
        assert x**k == acc
        acc = acc * x


def test_field_json_round_trip():
    for fld in (F5, QQ, RealField(1e-6)):
        doc = fld.to_json()
        assert field_from_json(doc) == fld


def test_rational_to_str_always_carries_denominator():
    assert QQ(3).to_str() == "3/1"
    assert QQ(Fraction(-2, 6)).to_str() == "-1/3"


def test_scalar_from_str_inverts_to_str():
    for fld, raws in ((F7, [0, 1, 6]), (QQ, [Fraction(5, 3), -2])):
        for raw in raws:
            s = fld(raw)
            assert fld.scalar_from_str(s.to_str()) == s
    r = RealField()(0.125)
    assert RealField().scalar_from_str(r.to_str()) == r
