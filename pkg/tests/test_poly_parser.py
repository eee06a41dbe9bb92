from fractions import Fraction

import pytest

from qinv.algebra import GF, QQ, ZZ, Polynomial, parse_poly
from qinv.algebra.poly_parser import tokenize
from qinv.core.exceptions import CoefficientError, PolynomialParseError


def test_parse_terms() -> None:
    """
    Test coefficients, exponents and signs.
    """
    assert parse_poly("x1^2*x2 - 2*x3", ZZ) == Polynomial(
        ZZ, {(2, 1, 0): 1, (0, 0, 1): -2}
    )
    assert parse_poly("-x1 + x2", ZZ) == Polynomial(ZZ, {(1, 0, 0): -1, (0, 1, 0): 1})
    assert parse_poly("  x1 +   x2 ", ZZ) == parse_poly("x1+x2", ZZ)
    assert parse_poly("x1*x1^2", ZZ) == parse_poly("x1^3", ZZ)
    assert parse_poly("x1 - x1", ZZ).is_zero
    assert parse_poly("0", GF(3)).is_zero


def test_coefficient_juxtaposition() -> None:
    """
    Test that a leading coefficient may be written directly before a variable.
    """
    assert parse_poly("3x1x2", ZZ) == parse_poly("3*x1*x2", ZZ)
    assert parse_poly("2x3^2", ZZ) == parse_poly("2*x3^2", ZZ)


def test_cyclic_polynomial_over_f2() -> None:
    e_tt = parse_poly("x1^2*x2 + x2^2*x3 + x3^2*x1", GF(2))
    assert e_tt == Polynomial(GF(2), {(2, 1, 0): 1, (0, 2, 1): 1, (1, 0, 2): 1})


def test_rational_coefficients() -> None:
    """
    Test fractions over QQ and their rejection elsewhere.
    """
    assert parse_poly("1/2*x1", QQ).coefficient((1, 0, 0)) == Fraction(1, 2)
    assert parse_poly("4/2", QQ) == Polynomial.constant(QQ, 2)
    with pytest.raises(CoefficientError):
        parse_poly("1/2*x1", GF(3))
    with pytest.raises(CoefficientError):
        parse_poly("1/2*x1", ZZ)


@pytest.mark.parametrize(
    ("text", "position"),
    [
        ("x1 + * x2", 5),
        ("x4", 0),
        ("x1^", 3),
        ("x1 x2", 3),
        ("2*", 2),
        ("x1 + 1/", 7),
        ("", 0),
        ("x1 + y", 5),
    ],
)
def test_parse_errors_carry_position(text: str, position: int) -> None:
    """
    Test that syntax errors report the offending column.

    Args:
        text: Malformed polynomial text.
        position: Expected zero-based column.
    """
    with pytest.raises(PolynomialParseError) as excinfo:
        parse_poly(text, ZZ)
    assert excinfo.value.position == position
    assert f"at position {position}" in str(excinfo.value)


def test_tokenize() -> None:
    tokens = tokenize("2*x1^3")
    assert [(t.kind, t.text, t.position) for t in tokens] == [
        ("num", "2", 0),
        ("op", "*", 1),
        ("var", "x1", 2),
        ("op", "^", 4),
        ("num", "3", 5),
        ("end", "", 6),
    ]
