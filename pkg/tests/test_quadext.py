from fractions import Fraction

import pytest

from conicprym.quadext import (QuadExt, format_quadext, parse_quadext,
                               parse_rational, quadext_is_square)


def test_arithmetic_and_normalization():
    x = QuadExt(1, 2, 2)       # 1 + 2*sqrt(2)
    y = QuadExt(3, -1, 2)
    assert (x + y) == QuadExt(4, 1, 2)
    assert (x * y) == QuadExt(3 - 4, 6 - 1, 2)  # (1+2r)(3-r) = 3 - r + 6r - 2*2
    assert (x / x) == QuadExt(1, 0, 2)
    assert x.conjugate() == QuadExt(1, -2, 2)
    assert (x * x.conjugate()).rational_value() == Fraction(1 - 8)


def test_mixed_extensions_rejected():
    x = QuadExt(1, 1, 2)
    y = QuadExt(1, 1, 3)
    with pytest.raises(TypeError):
        _ = x + y
    # rational elements combine across markers
    assert QuadExt(5, 0, 2) + QuadExt(1, 1, 3) == QuadExt(6, 1, 3)


def test_d_must_be_squarefree():
    with pytest.raises(ValueError):
        QuadExt(1, 1, 4)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 1)
    with pytest.raises(ValueError):
        QuadExt(1, 1, 12)


def test_real_embedding_signs():
    assert QuadExt(5, -1, 2).sign() == 1          # 5 - sqrt(2) > 0
    assert QuadExt(1, -1, 2).sign() == -1         # 1 - sqrt(2) < 0
    assert QuadExt(0, 1, 2).sign() == 1
    assert QuadExt(-3, 2, 2).sign() == -1         # 2 sqrt(2) < 3
    assert QuadExt(-1, 1, 2).sign() == 1          # sqrt(2) > 1
    assert (QuadExt(3, 1, 2) < QuadExt(5, -1, 2)) is False  # 4.41 > 3.59
    assert QuadExt(5, -1, 2) < QuadExt(3, 1, 2)


def test_sign_rejects_imaginary():
    with pytest.raises(ValueError):
        QuadExt(1, 1, -1).sign()
    assert QuadExt(3, 0, -1).sign() == 1


def test_enclosure_narrows():
    x = QuadExt(0, 1, 2)
    lo, hi = x.enclosure(40)
    assert lo < hi
    assert hi - lo <= Fraction(1, 1 << 39)
    assert lo * lo < 2 < hi * hi


def test_parse_rational_exact_only():
    assert parse_rational("3/4") == Fraction(3, 4)
    assert parse_rational("-12") == Fraction(-12)
    with pytest.raises(ValueError):
        parse_rational("0.5")
    with pytest.raises(ValueError):
        parse_rational("1e3")
    with pytest.raises(ValueError):
        parse_rational("1/0")


def test_parse_quadext_round_trip():
    x = parse_quadext("4-3*sqrt(-1)", -1)
    assert x == QuadExt(4, -3, -1)
    assert parse_quadext("-1*sqrt(-1)", -1) == QuadExt(0, -1, -1)
    assert parse_quadext("7/2", -1) == QuadExt(Fraction(7, 2), 0, -1)
    y = QuadExt(Fraction(-41), Fraction(-143), -1)
    assert parse_quadext(format_quadext(y), -1) == y
    with pytest.raises(ValueError):
        parse_quadext("1+1*sqrt(2)", -1)   # wrong field marker


def test_quadext_square_roots():
    # 7 - 24i = (4 - 3i)^2
    x = QuadExt(7, -24, -1)
    y = quadext_is_square(x)
    assert y is not None and y * y == x
    assert quadext_is_square(QuadExt(2, 0, 2)) == QuadExt(0, 1, 2)
    assert quadext_is_square(QuadExt(3, 1, 2)) is None
