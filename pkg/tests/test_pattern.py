from fractions import Fraction

import pytest

from valentropy.errors import PatternError, PatternSyntaxError
from valentropy.pattern import parse_pattern


def coeffs(p):
    return [dict(e.coeffs) for e in p.entries]


def test_constant_pattern_all_same_param():
    p = parse_pattern("[a,a,a,a]")
    assert coeffs(p) == [{"a": 1}] * 4
    assert p.params == ("a",)


def test_three_parameter_pattern():
    p = parse_pattern("[b,-b-c-d,c,d]")
    assert coeffs(p) == [{"b": 1}, {"b": -1, "c": -1, "d": -1}, {"c": 1}, {"d": 1}]
    assert p.params == ("b", "c", "d")
    assert str(p) == "[b,-b-c-d,c,d]"


def test_zero_pattern():
    p = parse_pattern("[0,0]")
    assert coeffs(p) == [{}, {}]
    assert p.params == ()


def test_rational_coefficients_and_whitespace():
    p = parse_pattern(" [ 1/2*a - 3*b , 0.5*a + a , -b ] ")
    assert coeffs(p) == [{"a": Fraction(1, 2), "b": -3}, {"a": Fraction(3, 2)}, {"b": -1}]


def test_cancelling_terms_drop_out():
    p = parse_pattern("[a-a,b]")
    assert coeffs(p) == [{}, {"b": 1}]
    assert p.params == ("b",)


def test_non_homogeneous_rejected():
    with pytest.raises(PatternError, match="non-homogeneous"):
        parse_pattern("[a,1]")
    with pytest.raises(PatternError, match="non-homogeneous"):
        parse_pattern("[a+2,b]")


@pytest.mark.parametrize("text, pos", [
    ("a,a]", 0),
    ("[a,,a]", 3),
    ("[a a]", 3),
    ("[a,A]", 3),
    ("[a,2*3]", 5),
    ("[a,b", 4),
    ("[a]x", 3),
    ("[2b]", 2),
])
def test_syntax_errors_carry_position(text, pos):
    with pytest.raises(PatternSyntaxError) as info:
        parse_pattern(text)
    assert info.value.position == pos
    assert f"position {pos}" in str(info.value)
