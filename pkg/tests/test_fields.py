"""Exact field arithmetic: canonical forms, squares, roots, axioms."""

from fractions import Fraction
from random import Random

import pytest

from arguesian.errors import InvalidField, NotASquare, UnorderedField, ZeroDenominator
from arguesian.fields import PrimeField, Q, field_from_text, make_rational

ODD_PRIMES_TO_101 = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67,
    71, 73, 79, 83, 89, 97, 101,
]


def test_make_rational_reduces():
    assert make_rational(2, 4) == make_rational(1, 2)
    assert str(make_rational(2, 4)) == "1/2"


def test_make_rational_zero_canonical():
    z = make_rational(0, 7)
    assert z.value == Fraction(0)
    assert str(z) == "0"


def test_make_rational_sign_normalisation():
    x = make_rational(-6, -4)
    assert x == make_rational(3, 2)
    assert x.value.denominator == 2


def test_make_rational_zero_denominator():
    with pytest.raises(ZeroDenominator):
        make_rational(1, 0)


def test_canonical_equality_and_hash():
    assert make_rational(4, 6) == make_rational(2, 3)
    assert hash(make_rational(4, 6)) == hash(make_rational(2, 3))
    f = PrimeField(13)
    assert f.scalar(20) == f.scalar(7)


def test_prime_field_rejects_characteristic_two():
    with pytest.raises(InvalidField):
        PrimeField(2)


def test_prime_field_rejects_composite():
    with pytest.raises(InvalidField):
        PrimeField(9)
    with pytest.raises(InvalidField):
        PrimeField(91)  # 7 * 13


def test_is_square_rationals():
    assert make_rational(4, 9).is_square()
    assert not make_rational(-1, 1).is_square()
    assert not make_rational(2, 1).is_square()
    assert make_rational(0, 5).is_square()


def test_is_square_small_prime_fields():
    f5 = PrimeField(5)
    assert f5.scalar(-1).is_square()  # 2^2 = 4 = -1 mod 5
    f13 = PrimeField(13)
    assert f13.scalar(3).is_square()  # 4^2 = 16 = 3 mod 13


@pytest.mark.parametrize("p", ODD_PRIMES_TO_101)
def test_is_square_matches_exhaustive_search(p):
    f = PrimeField(p)
    squares = {x * x % p for x in range(p)}
    for r in range(p):
        assert f.scalar(r).is_square() == (r in squares)


def test_sqrt_rationals():
    assert make_rational(9, 4).sqrt() == make_rational(3, 2)
    with pytest.raises(NotASquare):
        make_rational(2, 1).sqrt()


def test_sqrt_least_residue():
    f13 = PrimeField(13)
    assert f13.scalar(3).sqrt() == f13.scalar(4)  # the roots are 4 and 9


@pytest.mark.parametrize("p", [3, 5, 13, 17, 97, 101])
def test_sqrt_squares_back(p):
    f = PrimeField(p)
    for r in range(p):
        x = f.scalar(r)
        if x.is_square():
            root = x.sqrt()
            assert root * root == x


def test_sqrt_squares_back_rationals():
    rnd = Random(7)
    for _ in range(200):
        x = make_rational(rnd.randint(-40, 40), rnd.randint(1, 40))
        sq = x * x
        assert sq.is_square()
        root = sq.sqrt()
        assert root * root == sq
        assert root.value >= 0


@pytest.mark.parametrize("field", [Q, PrimeField(97)])
def test_field_axioms(field):
    rnd = Random(12)

    def rand():
        if field is Q:
            return make_rational(rnd.randint(-30, 30), rnd.randint(1, 12))
        return field.scalar(rnd.randrange(97))

    for _ in range(300):
        a, b, c = rand(), rand(), rand()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a
        if a:
            assert a * (field.one() / a) == field.one()
        assert a + (-a) == field.zero()


def test_textual_forms():
    assert Q.parse("3/2") == make_rational(3, 2)
    assert Q.parse("-6") == make_rational(-6, 1)
    assert Q.format(make_rational(-6, 4)) == "-3/2"
    f97 = PrimeField(97)
    assert f97.parse("1/3") == f97.scalar(65)
    assert f97.format(f97.scalar(65)) == "65"
    with pytest.raises(ValueError):
        Q.parse("1.5")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        make_rational(1, 2) / make_rational(0, 1)
    f = PrimeField(7)
    with pytest.raises(ZeroDivisionError):
        f.scalar(3) / f.scalar(0)


def test_residues_are_unordered():
    f = PrimeField(7)
    with pytest.raises(UnorderedField):
        f.scalar(2) < f.scalar(3)
    with pytest.raises(UnorderedField):
        abs(f.scalar(2))


def test_field_from_text():
    assert field_from_text("q") is Q or field_from_text("q") == Q
    assert field_from_text("fp:97") == PrimeField(97)
    with pytest.raises(InvalidField):
        field_from_text("fp:2")
    with pytest.raises(InvalidField):
        field_from_text("r")
