from fractions import Fraction

import pytest

from tcsurf.fields import GF2, QQ, PrimeField, field_from_name


def test_rational_arithmetic_is_exact():
    a = QQ.parse("1/3")
    b = QQ.parse("1/6")
    assert QQ.add(a, b) == Fraction(1, 2)
    assert QQ.mul(a, QQ.inv(a)) == QQ.one
    assert QQ.sub(QQ.zero, a) == QQ.neg(a)
    assert QQ.fmt(Fraction(-7, 2)) == "-7/2"


def test_rational_coerce_rejects_floats():
    assert QQ.coerce(5) == Fraction(5)
    with pytest.raises(TypeError):
        QQ.coerce(0.5)


def test_gf2_arithmetic():
    assert GF2.add(1, 1) == 0
    assert GF2.neg(1) == 1
    assert GF2.inv(1) == 1
    assert GF2.parse("5") == 1
    assert GF2.coerce(Fraction(1, 3)) == 1
    with pytest.raises(ZeroDivisionError):
        GF2.inv(0)
    with pytest.raises(ZeroDivisionError):
        GF2.coerce(Fraction(1, 2))


def test_odd_prime_field_inverses():
    F5 = PrimeField(5)
    for a in range(1, 5):
        assert F5.mul(a, F5.inv(a)) == 1


def test_nonprime_modulus_rejected():
    with pytest.raises(ValueError):
        PrimeField(4)


def test_field_lookup():
    assert field_from_name("Q") is QQ
    assert field_from_name("GF2") == GF2
    assert field_from_name("GF7") == PrimeField(7)
    with pytest.raises(ValueError):
        field_from_name("R")


def test_field_equality_and_hash():
    assert QQ == field_from_name("Q")
    assert GF2 != QQ
    assert hash(GF2) == hash(PrimeField(2))
