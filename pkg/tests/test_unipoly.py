from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conicprym.unipoly import (BinaryForm, UniPoly, discriminant, poly_gcd,
                               proportional, resultant, squarefree_decompose)


def P(*ints):
    return UniPoly.from_ints(ints)


def test_divmod_and_exact_div():
    f = P(-2, 0, 1) * P(3, 1) + P(5)
    q, r = f.divmod(P(3, 1))
    assert q == P(-2, 0, 1)
    assert r == P(5)
    with pytest.raises(ValueError):
        f.exact_div(P(3, 1))


def test_resultant_convention_pinned():
    # Sylvester determinant with the f-rows first
    assert resultant(P(-1, 1), P(1, 1)) == 2
    assert resultant(P(-1, 1), P(-1, 1)) == 0
    # swapping arguments flips by (-1)^(deg f * deg g)
    f, g = P(-2, 0, 1), P(0, -1, 0, 1)
    assert resultant(f, g) == -2
    assert resultant(g, f) == (-1) ** (2 * 3) * resultant(f, g)


def test_resultant_two_ways():
    # product over the roots 0, 1, -1 of g with the sign/leading normalization:
    # Res(f, g) = (-1)^(deg f deg g) lc(g)^deg f * prod f(root)
    f, g = P(-2, 0, 1), P(0, -1, 0, 1)
    by_product = (-1) ** (2 * 3) * 1 ** 2 * (
        Fraction(-2) * Fraction(1 - 2) * Fraction(1 - 2))
    assert resultant(f, g) == by_product == -2


def test_squarefree_decompose_examples():
    unit, factors = squarefree_decompose(P(1, -2, 1))    # (t-1)^2
    assert factors == [(P(-1, 1), 2)]
    unit, factors = squarefree_decompose(P(-2, 0, 1))
    assert factors == [(P(-2, 0, 1), 1)]
    # 3(t^2-6t+7)(t^2-10t+23)(t^2+4), expanded
    f = P(7, -6, 1) * P(23, -10, 1) * P(4, 0, 1) * P(3)
    unit, factors = squarefree_decompose(f)
    assert unit == 3
    assert sorted(m for _, m in factors) == [1]
    [(g, m)] = factors
    assert m == 1 and g.degree() == 6


def test_squarefree_reassembly_exact():
    f = P(1, 2, 1) * P(1, 2, 1) * P(-3, 1) * P(7)
    unit, factors = squarefree_decompose(f)
    rebuilt = UniPoly([unit])
    for g, m in factors:
        for _ in range(m):
            rebuilt = rebuilt * g
    assert rebuilt == f


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        squarefree_decompose(UniPoly([]))
    with pytest.raises(ValueError):
        resultant(UniPoly([]), P(1))


def test_discriminant():
    assert discriminant(P(-2, 0, 1)) == 8       # t^2 - 2
    assert discriminant(P(1, 2, 1)) == 0        # (t+1)^2
    assert discriminant(P(0, -1, 0, 1)) == 4    # t^3 - t: 4*1 - 27*0 style


def test_binary_form_round_trip():
    f = P(1, 2, 3)
    b = BinaryForm.from_unipoly(f, 4)
    assert b.dehomogenize() == f
    assert b.vanishes_at_infinity()
    assert b.value(Fraction(2), Fraction(1)) == f.eval(Fraction(2))


def test_proportional():
    assert proportional([2, 4, 6], [1, 2, 3]) == 2
    assert proportional([2, 4, 0], [1, 2, 3]) is None
    assert proportional([0, 4], [0, 2]) == 2


coeffs6 = st.lists(st.integers(-30, 30), min_size=2, max_size=7)


@settings(max_examples=120, deadline=None)
@given(coeffs6, coeffs6)
def test_resultant_zero_iff_common_factor(a, b):
    f, g = UniPoly.from_ints(a), UniPoly.from_ints(b)
    if f.is_zero() or g.is_zero() or f.degree() < 1 or g.degree() < 1:
        return
    r = resultant(f, g)
    assert (r == 0) == (poly_gcd(f, g).degree() > 0)


@settings(max_examples=80, deadline=None)
@given(coeffs6)
def test_squarefree_reassembles(a):
    f = UniPoly.from_ints(a)
    if f.is_zero():
        return
    unit, factors = squarefree_decompose(f)
    rebuilt = UniPoly([unit])
    for g, m in factors:
        for _ in range(m):
            rebuilt = rebuilt * g
    assert rebuilt == f
