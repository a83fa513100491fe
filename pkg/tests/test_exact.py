from fractions import Fraction

import pytest

from ineqelim.exact import (
    ParseError,
    format_rational,
    parse_rational,
    rat_normalize,
    row_to_coprime_integers,
)


def test_rat_normalize_reduces():
    assert rat_normalize(2, 4) == Fraction(1, 2)
    assert rat_normalize(-3, -6) == Fraction(1, 2)
    v = rat_normalize(6, -4)
    assert (v.numerator, v.denominator) == (-3, 2)


def test_rat_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        rat_normalize(1, 0)


def test_format_roundtrip():
    for num in range(-12, 13):
        for den in range(1, 9):
            v = Fraction(num, den)
            assert parse_rational(format_rational(v)) == v


def test_format_integer_has_no_slash():
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-7)) == "-7"
    assert format_rational(Fraction(0)) == "0"
    assert format_rational(Fraction(1, 3)) == "1/3"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


@pytest.mark.parametrize(
    "token,value",
    [
        ("0", Fraction(0)),
        ("-5", Fraction(-5)),
        ("3/4", Fraction(3, 4)),
        ("-3/4", Fraction(-3, 4)),
        ("6/4", Fraction(3, 2)),
        ("007", Fraction(7)),
    ],
)
def test_parse_accepts(token, value):
    assert parse_rational(token) == value


@pytest.mark.parametrize(
    "token",
    ["", " 1", "1 ", "1/ 2", "1.5", "1e3", "+1", "1/-2", "a", "1/2/3", "--1", "/2"],
)
def test_parse_rejects(token):
    with pytest.raises(ParseError):
        parse_rational(token)


def test_parse_rejects_non_string():
    with pytest.raises(ParseError):
        parse_rational(3)


def test_parse_zero_denominator_message():
    with pytest.raises(ParseError, match="zero denominator"):
        parse_rational("1/0")


def test_coprime_integers_basic():
    ints, scale = row_to_coprime_integers([Fraction(1, 2), Fraction(3, 4)])
    assert ints == [2, 3]
    assert scale == 4
    assert all(scale * v == i for v, i in zip([Fraction(1, 2), Fraction(3, 4)], ints))


def test_coprime_integers_divides_common_factor():
    ints, scale = row_to_coprime_integers([Fraction(4), Fraction(-6), Fraction(0)])
    assert ints == [2, -3, 0]
    assert scale == Fraction(1, 2)


def test_coprime_integers_all_zero():
    ints, scale = row_to_coprime_integers([Fraction(0), Fraction(0)])
    assert ints == [0, 0]
    assert scale == 1


def test_coprime_integers_single_negative():
    ints, scale = row_to_coprime_integers([Fraction(-5, 3)])
    # gcd convention keeps the sign of the row: -5/3 * 3/5 = -1
    assert ints == [-1]
    assert scale == Fraction(3, 5)


def test_coprime_integers_empty_rejected():
    with pytest.raises(ValueError):
        row_to_coprime_integers([])


def test_coprime_integers_gcd_is_one():
    import math
    import random

    rng = random.Random(7)
    for _ in range(200):
        row = [
            Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 6))
        ]
        ints, scale = row_to_coprime_integers(row)
        assert all(scale * v == i for v, i in zip(row, ints))
        assert scale > 0
        nonzero = [abs(i) for i in ints if i]
        if nonzero:
            assert math.gcd(*nonzero) == 1
