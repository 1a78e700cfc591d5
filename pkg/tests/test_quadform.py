import random
from fractions import Fraction

import pytest

from common import TRIPLE_DISCONNECTED, TRIPLE_NEGDEF, form2
from conicprym.bundle import fiber_form, pencil_form
from conicprym.linalg import char_poly, det, rank_and_det
from conicprym.quadext import QuadExt
from conicprym.quadform import (SymQuadraticForm, diagonalize, form_from_gram,
                                gram_matrix, restrict_to_line, signature)
from conicprym.unipoly import UniPoly


def test_gram_matrix_examples():
    g = gram_matrix(form2({"u^2": 1, "v^2": 1, "w^2": 1}))
    assert g.rows == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    g = gram_matrix(form2({"u*v": 2}))
    assert g.rows[0][1] == 1 and g.rows[1][0] == 1 and g.rows[0][0] == 0
    g = gram_matrix(form2({"u^2": 3, "v^2": 5}))
    assert g.rows == [[3, 0, 0], [0, 5, 0], [0, 0, 0]]


def test_gram_round_trip():
    q = form2({"u^2": -31, "u*v": 12, "v^2": -6, "u*w": 9, "v*w": 531, "w^2": 25})
    assert form_from_gram(gram_matrix(q)) == q


def test_signature_examples():
    assert signature(SymQuadraticForm([[1, 0, 0], [0, 1, 0], [0, 0, 1]])).pair() == (3, 0)
    m1 = gram_matrix(TRIPLE_NEGDEF.q1)
    assert signature(m1).pair() == (0, 3)       # negative definite
    # fiber at the pencil parameter (0:1) extended by the -z^2 block
    sig = signature(fiber_form(TRIPLE_DISCONNECTED, (Fraction(0), Fraction(1))))
    assert sig.pair() == (1, 3)


def test_signature_rank_deficient():
    m = SymQuadraticForm([[1, 0, 0], [0, 0, 0], [0, 0, -2]])
    s = signature(m)
    assert s.pair() == (1, 1) and s.rank == 2


def test_restrict_to_line_examples():
    m = gram_matrix(form2({"u^2": 1, "v^2": 1, "w^2": 1}))
    a, b, c = restrict_to_line(m, (1, 0, 0), (0, 1, 0))
    assert (a, b, c) == (1, 0, 1)
    m1 = gram_matrix(TRIPLE_NEGDEF.q1)
    a, b, c = restrict_to_line(m1, (1, 0, 0), (0, 0, 1))
    assert (a, b, c) == (-1, 0, -3)


def test_pencil_form_endpoints():
    m = pencil_form(TRIPLE_NEGDEF, (Fraction(1), Fraction(0)))
    assert m.rows == gram_matrix(TRIPLE_NEGDEF.q1).rows
    m = pencil_form(TRIPLE_NEGDEF, (Fraction(0), Fraction(1)))
    assert m.rows == gram_matrix(TRIPLE_NEGDEF.q3).rows
    with pytest.raises(ValueError):
        pencil_form(TRIPLE_NEGDEF, (Fraction(0), Fraction(0)))


def test_disconnected_fiber_signature_at_half():
    sig = signature(fiber_form(TRIPLE_DISCONNECTED, (Fraction(1), Fraction(2))))
    assert sig.pair() == (0, 4)


def test_signature_congruence_invariance():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.choice((3, 4))
        m = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        sym = [[(m[i][j] + m[j][i]) / 2 for j in range(n)] for i in range(n)]
        form = SymQuadraticForm(sym)
        while True:
            a = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            _, d = rank_and_det(a)
            if d != 0:
                break
        sig = signature(form)
        sig2 = signature(form.congruent_by(a))
        assert sig.pair() == sig2.pair()
        # p + q is the rank, and negation swaps the pair
        assert sig.rank == rank_and_det(sym)[0]
        neg = SymQuadraticForm([[-x for x in row] for row in sym])
        assert signature(neg).pair() == (sig.negatives, sig.positives)


def test_rank_and_det_examples():
    assert rank_and_det([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == (3, 1)
    i = QuadExt(0, 1, -1)
    one = QuadExt(1, 0, -1)

    def q(a, b):
        return QuadExt(a, b, -1)

    rows = [
        [q(0, -1), q(2, 0), q(4, -3), q(52, -21)],
        [q(0, 1), q(2, 0), q(4, 3), q(52, 21)],
        [q(1, -1), q(4, 0), q(1, 7), q(-41, -143)],
        [q(1, 1), q(4, 0), q(1, -7), q(-41, 143)],
    ]
    rank, d = rank_and_det(rows)
    assert rank == 4
    assert d == QuadExt(-23040, 0, -1)
    rows2 = [rows[0], rows[0], rows[2], rows[3]]
    rank2, d2 = rank_and_det(rows2)
    assert rank2 == 3 and d2 == 0


def test_char_poly():
    chi = char_poly([[Fraction(2), Fraction(0)], [Fraction(0), Fraction(3)]])
    assert chi == UniPoly.from_ints([6, -5, 1])


def test_diagonalize_congruence():
    rng = random.Random(3)
    for _ in range(20):
        rows = [[Fraction(rng.randint(-4, 4)) for _ in range(3)] for _ in range(3)]
        sym = [[(rows[i][j] + rows[j][i]) / 2 for j in range(3)] for i in range(3)]
        m = SymQuadraticForm(sym)
        diag, trans = diagonalize(m)
        out = m.congruent_by(trans)
        for i in range(3):
            for j in range(3):
                if i != j:
                    assert out.rows[i][j] == 0
                else:
                    assert out.rows[i][i] == diag[i]
