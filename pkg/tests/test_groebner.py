import random
from itertools import product

import pytest

from conicprym.groebner import (FpPoly, PrimeFieldIdeal, buchberger, grevlex_key,
                                groebner_basis, projective_empty)


def make(p, nvars, terms):
    return FpPoly(p, nvars, terms)


def test_grevlex_order():
    # x > y > z in grevlex for equal degree: last nonzero exponent difference negative
    assert grevlex_key((1, 0)) > grevlex_key((0, 1))
    assert grevlex_key((2, 0, 0)) > grevlex_key((1, 1, 0)) > grevlex_key((0, 2, 0))
    assert grevlex_key((1, 1, 0)) > grevlex_key((1, 0, 1))
    assert grevlex_key((0, 0, 2)) < grevlex_key((0, 1, 1))


def test_basis_coordinate_ideal():
    ideal = PrimeFieldIdeal(3, 2, [make(3, 2, {(1, 0): 1}), make(3, 2, {(0, 1): 1})])
    gb = groebner_basis(ideal)
    lead = sorted(g.lm() for g in gb.basis)
    assert lead == [(0, 1), (1, 0)]


def test_basis_containment():
    ideal = PrimeFieldIdeal(5, 2, [make(5, 2, {(2, 0): 1, (0, 2): -1}),
                                   make(5, 2, {(1, 0): 1, (0, 1): -1})])
    gb = groebner_basis(ideal)
    assert len(gb.basis) == 1
    assert gb.basis[0].terms == {(1, 0): 1, (0, 1): 4}


def test_basis_idempotent_and_cached():
    ideal = PrimeFieldIdeal(5, 2, [make(5, 2, {(2, 0): 1}), make(5, 2, {(0, 1): 1})])
    gb = groebner_basis(ideal)
    gb2 = groebner_basis(gb)
    assert gb2 is gb


def test_even_p_rejected():
    with pytest.raises(ValueError):
        PrimeFieldIdeal(2, 2, [make(2, 2, {(1, 0): 1})])
    with pytest.raises(ValueError):
        PrimeFieldIdeal(9, 2, [make(9, 2, {(1, 0): 1})])


def test_projective_empty_examples():
    irr = PrimeFieldIdeal(3, 3, [make(3, 3, {(1, 0, 0): 1}),
                                 make(3, 3, {(0, 1, 0): 1}),
                                 make(3, 3, {(0, 0, 1): 1})], projective=True)
    assert projective_empty(irr) is True
    uv = PrimeFieldIdeal(3, 3, [make(3, 3, {(1, 1, 0): 1})], projective=True)
    assert projective_empty(uv) is False


def test_fermat_quartic_jacobian_ideal():
    # partial derivatives of u^4+v^4+w^4 over F_5, plus the quartic itself:
    # the only common zero over F_5 and F_25 is the origin
    p = 5
    quartic = make(p, 3, {(4, 0, 0): 1, (0, 4, 0): 1, (0, 0, 4): 1})
    partials = [make(p, 3, {(3, 0, 0): 4}), make(p, 3, {(0, 3, 0): 4}),
                make(p, 3, {(0, 0, 3): 4})]
    ideal = PrimeFieldIdeal(p, 3, [quartic] + partials, projective=True)
    gb = groebner_basis(ideal)
    lead_pure = {g.lm() for g in gb.basis if sum(1 for e in g.lm() if e) == 1}
    vars_hit = {next(i for i, e in enumerate(lm) if e) for lm in lead_pure}
    assert vars_hit == {0, 1, 2}
    assert projective_empty(ideal)
    assert _exhaustive_projective_empty(ideal)


# -- exhaustive F_p / F_p^2 oracle -------------------------------------------------


def _fp2_elements(p, nonresidue):
    return [(a, b) for a in range(p) for b in range(p)]


def _fp2_mul(x, y, p, n):
    a, b = x
    c, d = y
    return ((a * c + b * d * n) % p, (a * d + b * c) % p)


def _fp2_pow(x, e, p, n):
    out = (1, 0)
    base = x
    while e:
        if e & 1:
            out = _fp2_mul(out, base, p, n)
        base = _fp2_mul(base, base, p, n)
        e >>= 1
    return out


def _nonresidue(p):
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return c
    raise AssertionError


def _eval_fp2(poly, point, p, n):
    total = (0, 0)
    for mono, coeff in poly.terms.items():
        term = (coeff % p, 0)
        for x, e in zip(point, mono):
            if e:
                term = _fp2_mul(term, _fp2_pow(x, e, p, n), p, n)
        total = ((total[0] + term[0]) % p, (total[1] + term[1]) % p)
    return total


def _projective_points_fp2(p, nvars, n):
    elems = _fp2_elements(p, n)
    seen = []
    # representatives: first nonzero coordinate = 1
    for lead in range(nvars):
        for tail in product(elems, repeat=nvars - lead - 1):
            pt = ((0, 0),) * lead + ((1, 0),) + tail
            seen.append(pt)
    return seen


def _exhaustive_projective_empty(ideal):
    p = ideal.p
    n = _nonresidue(p)
    for pt in _projective_points_fp2(p, ideal.nvars, n):
        if all(_eval_fp2(g, pt, p, n) == (0, 0) for g in ideal.generators):
            return False
    return True


def test_projective_empty_vs_exhaustive_search():
    """Sound directions of the small-field oracle: an empty verdict forbids
    F_p / F_p^2 points, and a found point forbids an empty verdict.  (A
    nonempty scheme can still have all its points in larger fields, e.g.
    three conjugate lines.)"""
    rng = random.Random(2024)
    checked_nonempty = 0
    for p in (3, 5, 7):
        for _ in range(12):
            gens = []
            for _ in range(rng.randint(1, 3)):
                deg = rng.randint(1, 3)
                terms = {}
                monos = [m for m in product(range(deg + 1), repeat=3) if sum(m) == deg]
                for m in monos:
                    c = rng.randint(0, p - 1)
                    if c:
                        terms[m] = c
                if terms:
                    gens.append(make(p, 3, terms))
            if not gens:
                continue
            ideal = PrimeFieldIdeal(p, 3, gens, projective=True)
            empty = projective_empty(ideal)
            found_point = not _exhaustive_projective_empty(ideal)
            if empty:
                assert not found_point
            if found_point:
                assert not empty
                checked_nonempty += 1
    assert checked_nonempty >= 10
