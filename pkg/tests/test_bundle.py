import random
from fractions import Fraction

import pytest

from common import (QUARTIC_NEGDEF, TRIPLE_DISCONNECTED, TRIPLE_NEGDEF,
                    TRIPLE_SPHERE, SEXTIC_DISCONNECTED, SEXTIC_NEGDEF,
                    SEXTIC_SPHERE, WITNESS_PRIMES, form2)
from conicprym.bundle import (DegenerateCurveError, FormTriple, cover_equations,
                              cover_smooth_witness, default_witness_primes,
                              degenerate_fiber_form, discriminant_quartic,
                              fiber_form, pgl2_act, prym_sextic,
                              smooth_quartic_check)
from conicprym.quadext import QuadExt
from conicprym.quadform import signature
from conicprym.ternary import TernaryForm
from conicprym.unipoly import UniPoly, proportional


def test_discriminant_quartic_trivial():
    uv = form2({"u*v": 1})
    triple = FormTriple(TernaryForm.zero(2), uv, TernaryForm.zero(2), "t")
    quartic = discriminant_quartic(triple)
    assert quartic == uv * uv


def test_discriminant_quartic_negdef_exact():
    assert discriminant_quartic(TRIPLE_NEGDEF) == QUARTIC_NEGDEF


def test_discriminant_quartic_evaluation_oracle():
    rng = random.Random(5)
    quartic = discriminant_quartic(TRIPLE_DISCONNECTED)
    t = TRIPLE_DISCONNECTED
    for _ in range(30):
        pt = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3))
        direct = t.q2.eval(pt) ** 2 - t.q1.eval(pt) * t.q3.eval(pt)
        assert quartic.eval(pt) == direct


def test_cover_equations_negdef_printed():
    pres = cover_equations(TRIPLE_NEGDEF)
    g1, g2, g3 = pres.generators
    # -u^2 - v^2 - 3w^2 - r^2
    assert g1.terms == {(2, 0, 0, 0, 0): Fraction(-1), (0, 2, 0, 0, 0): Fraction(-1),
                        (0, 0, 2, 0, 0): Fraction(-3), (0, 0, 0, 2, 0): Fraction(-1)}
    assert g2.terms == {(2, 0, 0, 0, 0): Fraction(3), (0, 2, 0, 0, 0): Fraction(5),
                        (0, 0, 0, 1, 1): Fraction(-1)}
    assert g3.terms == {(2, 0, 0, 0, 0): Fraction(-7), (0, 2, 0, 0, 0): Fraction(-23),
                        (0, 0, 2, 0, 0): Fraction(-12), (0, 0, 0, 0, 2): Fraction(-1)}


def test_cover_contains_listed_points():
    pres = cover_equations(TRIPLE_DISCONNECTED)

    def q(a, b):
        return QuadExt(a, b, -1)

    pts = [
        (q(0, -1), q(2, 0), q(0, 0), q(4, -3), q(52, -21)),
        (q(0, 1), q(2, 0), q(0, 0), q(4, 3), q(52, 21)),
        (q(1, -1), q(4, 0), q(0, 0), q(1, 7), q(-41, -143)),
        (q(1, 1), q(4, 0), q(0, 0), q(1, -7), q(-41, 143)),
    ]
    for pt in pts:
        assert all(r.is_zero() for r in pres.residues_at(pt))


def test_smooth_quartic_examples():
    u4 = TernaryForm(4, {(4, 0, 0): Fraction(1)})
    cert = smooth_quartic_check(u4, [3, 5])
    assert cert.verdict == "singular"
    assert cert.singular_point is not None
    fermat = TernaryForm(4, {(4, 0, 0): Fraction(1), (0, 4, 0): Fraction(1),
                             (0, 0, 4): Fraction(1)})
    assert smooth_quartic_check(fermat, WITNESS_PRIMES).verdict == "smooth"
    assert smooth_quartic_check(discriminant_quartic(TRIPLE_DISCONNECTED),
                                WITNESS_PRIMES).verdict == "smooth"
    with pytest.raises(ValueError):
        smooth_quartic_check(fermat, [])


def test_cover_smoothness():
    for triple in (TRIPLE_DISCONNECTED, TRIPLE_SPHERE, TRIPLE_NEGDEF):
        cert = cover_smooth_witness(cover_equations(triple), WITNESS_PRIMES)
        assert cert.verdict == "smooth"
        assert cert.prime in WITNESS_PRIMES
    degenerate = FormTriple(form2({"u^2": 1}), form2({"u*v": 1}), form2({"v^2": 1}), "deg")
    cert = cover_smooth_witness(cover_equations(degenerate), WITNESS_PRIMES)
    assert cert.verdict == "unknown"


def test_default_witness_primes():
    primes = default_witness_primes([TRIPLE_NEGDEF.q1, TRIPLE_NEGDEF.q2, TRIPLE_NEGDEF.q3])
    assert primes == [3, 5, 7, 11, 13]
    half = form2({"u^2": Fraction(1, 3)})
    assert default_witness_primes([half])[:2] == [5, 7]


def test_pgl2_identity_and_swap():
    ident = pgl2_act(((1, 0), (0, 1)), TRIPLE_NEGDEF)
    assert ident.q1 == TRIPLE_NEGDEF.q1 and ident.q3 == TRIPLE_NEGDEF.q3
    swapped = pgl2_act(((0, 1), (1, 0)), TRIPLE_NEGDEF)
    assert swapped.q1 == TRIPLE_NEGDEF.q3
    assert swapped.q2 == TRIPLE_NEGDEF.q2
    assert swapped.q3 == TRIPLE_NEGDEF.q1
    with pytest.raises(ValueError):
        pgl2_act(((1, 2), (2, 4)), TRIPLE_NEGDEF)


def test_pgl2_discriminant_covariance():
    rng = random.Random(17)
    base = discriminant_quartic(TRIPLE_SPHERE)
    for _ in range(20):
        while True:
            a, b, c, d = (rng.randint(-4, 4) for _ in range(4))
            if a * d - b * c != 0:
                break
        moved = discriminant_quartic(pgl2_act(((a, b), (c, d)), TRIPLE_SPHERE))
        keys = sorted(set(base.coeffs) | set(moved.coeffs))
        scalar = proportional([moved.coeff(k) for k in keys],
                              [base.coeff(k) for k in keys])
        assert scalar is not None and scalar != 0


def test_prym_sextic_exact_and_rejection():
    curve = prym_sextic(TRIPLE_NEGDEF)
    assert curve.f == UniPoly.from_ints(list(reversed(SEXTIC_NEGDEF)))
    ident = form2({"u^2": 1, "v^2": 1, "w^2": 1})
    with pytest.raises(DegenerateCurveError) as err:
        prym_sextic(FormTriple(ident, TernaryForm.zero(2), ident, "bad"))
    assert err.value.factorization is not None


def test_degenerate_fiber_form_matches_printed():
    for triple, printed in ((TRIPLE_DISCONNECTED, SEXTIC_DISCONNECTED),
                            (TRIPLE_SPHERE, SEXTIC_SPHERE)):
        form = degenerate_fiber_form(triple)
        scalar = proportional(form.coeffs, [Fraction(c) for c in printed])
        assert scalar == Fraction(-1, 4)


def test_degenerate_fiber_form_dehomogenizes_to_prym():
    rng = random.Random(23)
    count = 0
    while count < 10:
        forms = []
        for _ in range(3):
            named = {}
            for mono in ("u^2", "u*v", "v^2", "u*w", "v*w", "w^2"):
                named[mono] = Fraction(rng.randint(-5, 5))
            forms.append(form2(named))
        triple = FormTriple(forms[0], forms[1], forms[2], "rand")
        try:
            curve = prym_sextic(triple)
        except (DegenerateCurveError, ValueError):
            continue
        assert degenerate_fiber_form(triple).dehomogenize() == curve.f
        count += 1


def test_fiber_form_examples():
    sig = signature(fiber_form(TRIPLE_DISCONNECTED, (Fraction(-3), Fraction(4))))
    assert sig.pair() == (0, 4)
    sig = signature(fiber_form(TRIPLE_SPHERE, (Fraction(2), Fraction(1))))
    assert sig.pair() == (1, 3)


def test_fiber_form_determinant_is_negated_pencil_det():
    from conicprym.linalg import det
    rng = random.Random(29)
    for _ in range(10):
        t = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        four = fiber_form(TRIPLE_NEGDEF, (t, Fraction(1)))
        three = fiber_form(TRIPLE_NEGDEF, (t, Fraction(1)))
        d4 = det(four.rows)
        from conicprym.quadform import pencil_gram
        m1, m2, m3 = TRIPLE_NEGDEF.grams()
        d3 = det(pencil_gram(m1, m2, m3, t, Fraction(1)).rows)
        assert d4 == -d3


def test_conic_quotient_identity():
    """Substituting the printed quotient map into -2a^2-2b^2+c^2 reproduces
    -16 times the quartic of the negative-definite example, exactly."""
    a = form2({"u^2": 4, "w^2": -33})
    b = form2({"v^2": 4, "w^2": -81})
    c = form2({"w^2": 126})
    conic = TernaryForm(2, {(2, 0, 0): Fraction(-2), (0, 2, 0): Fraction(-2),
                            (0, 0, 2): Fraction(1)})
    composed = conic.substitute((a, b, c))
    assert composed == discriminant_quartic(TRIPLE_NEGDEF).scale(Fraction(-16))
