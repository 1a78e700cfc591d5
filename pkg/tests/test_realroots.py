from fractions import Fraction

import pytest

from common import SEXTIC_DISCONNECTED, SEXTIC_SPHERE
from conicprym.quadext import QuadExt
from conicprym.realroots import (DomainError, RealAlgebraic, count_roots_in_interval,
                                 isolate_real_roots, isolated_roots,
                                 rational_between_points, sign_at,
                                 simplest_rational_between)
from conicprym.unipoly import UniPoly


def P(*ints):
    return UniPoly.from_ints(ints)


def sextic(desc):
    return UniPoly.from_ints(list(reversed(desc)))


def test_isolate_t2_minus_1():
    roots = isolated_roots(P(-1, 0, 1))
    assert len(roots) == 2
    assert roots[0] == Fraction(-1) and roots[1] == Fraction(1)


def test_disconnected_sextic_has_four_bracketed_roots():
    f = sextic(SEXTIC_DISCONNECTED)
    roots = isolated_roots(f)
    assert len(roots) == 4
    a1, a2, a3, a4 = roots
    assert a1 < Fraction(-3, 4) < a2 < 0 < a3 < Fraction(1, 2) < a4 < 1


def test_sphere_sextic_has_two_roots():
    f = sextic(SEXTIC_SPHERE)
    roots = isolated_roots(f)
    assert len(roots) == 2
    assert roots[0] < 0 < roots[1] < 2


def test_count_roots_in_interval():
    assert count_roots_in_interval(P(-2, 0, 1), Fraction(0), Fraction(2)) == 1
    # sqrt(2) < 3/2, so (3/2, 1+sqrt2] contains no root of t^2 - 2
    assert count_roots_in_interval(P(-2, 0, 1), Fraction(3, 2), QuadExt(1, 1, 2)) == 0
    f = sextic(SEXTIC_DISCONNECTED)
    assert count_roots_in_interval(f, Fraction(-3, 4), Fraction(0)) == 1
    with pytest.raises(DomainError):
        count_roots_in_interval(P(1, 2, 1), Fraction(-2), Fraction(0))


def test_sign_at_examples():
    assert sign_at(P(-2, 0, 1), Fraction(1)) == -1
    assert sign_at(P(-2, 0, 1), QuadExt(0, 1, 2)) == 0
    assert sign_at(P(-3, 1), QuadExt(5, -1, 2)) == 1    # 5 - sqrt2 > 3
    alg = isolated_roots(sextic(SEXTIC_DISCONNECTED))[0]
    assert sign_at(P(0, 1), alg) == -1                  # the smallest root is negative
    assert sign_at(sextic(SEXTIC_DISCONNECTED), alg) == 0


def test_sign_stable_under_refinement():
    f = sextic(SEXTIC_DISCONNECTED)
    root = isolated_roots(f, simplify=False)[2]
    g = P(7, -13, 3, 1)
    s = sign_at(g, root)
    cur = root
    for _ in range(6):
        cur = cur.refine_step()
        assert sign_at(g, cur) == s


def test_quadratic_normalization():
    f = P(7, -6, 1)      # roots 3 +- sqrt2
    roots = isolated_roots(f)
    assert [r.kind for r in roots] == ["quad", "quad"]
    assert roots[0] == QuadExt(3, -1, 2)
    assert roots[1] == QuadExt(3, 1, 2)
    # rational roots collapse to the rational variant
    r = isolated_roots(P(-1, 0, 1))[0]
    assert r.kind == "rat"


def test_ordering_across_fields():
    a = RealAlgebraic.wrap(QuadExt(3, 1, 2))                 # 4.414
    roots = isolated_roots(P(-19, 0, 1), simplify=False)     # +-sqrt(19) ~ 4.359
    b = roots[1]
    assert b < a
    assert a.cmp(a) == 0
    c = isolated_roots(P(7, -6, 1), simplify=False)
    # same number through two representations compares equal
    assert RealAlgebraic.wrap(QuadExt(3, 1, 2)).cmp(
        RealAlgebraic.from_root(P(7, -6, 1), Fraction(4), Fraction(5), simplify=False)) == 0


def test_isolation_respects_range():
    f = P(-1, 0, 1)
    inside = isolate_real_roots(f, Fraction(0), Fraction(2))
    assert len(inside) == 1
    none = isolate_real_roots(f, Fraction(2), Fraction(3))
    assert none == []


def test_simplest_rational_between():
    assert simplest_rational_between(Fraction(1, 3), Fraction(1, 2)) == Fraction(1, 2)
    assert simplest_rational_between(Fraction(7, 5), Fraction(3, 2)) == Fraction(3, 2)
    assert simplest_rational_between(Fraction(-3, 2), Fraction(-1, 2)) == Fraction(-1)
    assert simplest_rational_between(Fraction(2), Fraction(3)) == Fraction(2)


def test_rational_between_points():
    a = QuadExt(5, -1, 2)
    b = QuadExt(3, 1, 2)
    q = rational_between_points(RealAlgebraic.wrap(a), RealAlgebraic.wrap(b))
    assert RealAlgebraic.wrap(a) < RealAlgebraic.wrap(q) < RealAlgebraic.wrap(b)
