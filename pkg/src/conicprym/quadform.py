"""Symmetric matrices of quadratic forms, exact Sylvester signatures, and
restrictions of forms to projective lines."""

from dataclasses import dataclass
from fractions import Fraction

from .linalg import char_poly, rank_and_det
from .quadext import scalar_is_zero, scalar_sign
from .ternary import TernaryForm
from .unipoly import UniPoly


class SymQuadraticForm:
    """Symmetric n x n matrix M with Q(x) = x M x^T."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("matrix must be symmetric")
        self.n = n
        self.rows = rows

    def entry(self, i, j):
        return self.rows[i][j]

    def eval(self, xs):
        total = Fraction(0)
        for i in range(self.n):
            for j in range(self.n):
                total = total + xs[i] * self.rows[i][j] * xs[j]
        return total

    def extend_with_minus_one(self) -> "SymQuadraticForm":
        """Block sum with the 1x1 matrix (-1), the z^2 term of the double cover."""
        n = self.n
        rows = [r + [Fraction(0)] for r in self.rows]
        rows.append([Fraction(0)] * n + [Fraction(-1)])
        return SymQuadraticForm(rows)

    def congruent_by(self, a_rows) -> "SymQuadraticForm":
        """A^T M A for a square matrix A."""
        n = self.n
        am = [[sum((self.rows[i][k] * a_rows[k][j] for k in range(n)), Fraction(0))
               for j in range(n)] for i in range(n)]
        out = [[sum((a_rows[k][i] * am[k][j] for k in range(n)), Fraction(0))
                for j in range(n)] for i in range(n)]
        return SymQuadraticForm(out)

    def __eq__(self, other):
        return isinstance(other, SymQuadraticForm) and self.rows == other.rows

    def __repr__(self):
        return f"SymQuadraticForm({self.rows})"


@dataclass(frozen=True)
class Signature:
    positives: int
    negatives: int

    @property
    def rank(self) -> int:
        return self.positives + self.negatives

    def is_definite(self, n: int) -> bool:
        return self.rank == n and (self.positives == 0 or self.negatives == 0)

    def indefinite(self) -> bool:
        return self.positives >= 1 and self.negatives >= 1

    def pair(self):
        return (self.positives, self.negatives)


def gram_matrix(form: TernaryForm) -> SymQuadraticForm:
    """Symmetric matrix of a ternary quadratic form (cross terms halved)."""
    if form.degree != 2:
        raise ValueError("gram_matrix needs a homogeneous degree-2 form")
    def c(mono):
        return form.coeff(mono)
    half = Fraction(1, 2)
    return SymQuadraticForm([
        [c((2, 0, 0)), c((1, 1, 0)) * half, c((1, 0, 1)) * half],
        [c((1, 1, 0)) * half, c((0, 2, 0)), c((0, 1, 1)) * half],
        [c((1, 0, 1)) * half, c((0, 1, 1)) * half, c((0, 0, 2))],
    ])


def form_from_gram(m: SymQuadraticForm) -> TernaryForm:
    coeffs = {}
    monos = [(2, 0, 0), (0, 2, 0), (0, 0, 2)]
    for i in range(3):
        coeffs[monos[i]] = m.rows[i][i]
    coeffs[(1, 1, 0)] = m.rows[0][1] * 2
    coeffs[(1, 0, 1)] = m.rows[0][2] * 2
    coeffs[(0, 1, 1)] = m.rows[1][2] * 2
    return TernaryForm(2, coeffs)


def signature(m: SymQuadraticForm) -> Signature:
    """Sylvester signature via Descartes counting on the characteristic
    polynomial: symmetric matrices have only real eigenvalues, so after
    stripping the x^k rank-deficiency factor the sign-variation count of the
    coefficients is exactly the number of positive eigenvalues."""
    chi = char_poly(m.rows)
    cs = list(chi.coeffs)
    k = 0
    while k < len(cs) and scalar_is_zero(cs[k]):
        k += 1
    cs = cs[k:]
    rank = len(cs) - 1
    signs = [scalar_sign(c) for c in cs if not scalar_is_zero(c)]
    pos = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
    return Signature(pos, rank - pos)


def restrict_to_line(m: SymQuadraticForm, p, q):
    """Binary quadratic of the form restricted to the line spanned by points
    p, q under (s:t) -> s*p + t*q.  Returns (a, b, c) with a s^2 + b s t + c t^2."""
    if m.n != len(p) or m.n != len(q):
        raise ValueError("dimension mismatch")
    def bil(x, y):
        total = Fraction(0)
        for i in range(m.n):
            for j in range(m.n):
                total = total + x[i] * m.rows[i][j] * y[j]
        return total
    a = bil(p, p)
    b = bil(p, q) * 2
    c = bil(q, q)
    return a, b, c


def pencil_gram(m1: SymQuadraticForm, m2: SymQuadraticForm, m3: SymQuadraticForm, t0, t1) -> SymQuadraticForm:
    """Gram matrix of t0^2 Q1 + 2 t0 t1 Q2 + t1^2 Q3."""
    if scalar_is_zero(t0) and scalar_is_zero(t1):
        raise ValueError("(0:0) is not a point of the parameter line")
    a, b, c = t0 * t0, 2 * t0 * t1, t1 * t1
    rows = [[a * m1.rows[i][j] + b * m2.rows[i][j] + c * m3.rows[i][j]
             for j in range(m1.n)] for i in range(m1.n)]
    return SymQuadraticForm(rows)


def pencil_det_poly(m1: SymQuadraticForm, m2: SymQuadraticForm, m3: SymQuadraticForm) -> UniPoly:
    """det(t^2 M1 + 2 t M2 + M3) as a polynomial in t."""
    t_sq = UniPoly([Fraction(0), Fraction(0), Fraction(1)])
    two_t = UniPoly([Fraction(0), Fraction(2)])
    one = UniPoly([Fraction(1)])
    n = m1.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(t_sq.scale(m1.rows[i][j]) + two_t.scale(m2.rows[i][j]) + one.scale(m3.rows[i][j]))
        rows.append(row)
    from .linalg import poly_matrix_det
    return poly_matrix_det(rows)


def diagonalize(m: SymQuadraticForm):
    """Rational congruence diagonalization: returns (diag entries, A) with
    A^T M A diagonal.  Symmetric Gaussian elimination with the standard
    off-diagonal fixups."""
    n = m.n
    rows = [list(r) for r in m.rows]
    trans = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]

    def add_col(dst, src, factor):
        for i in range(n):
            rows[i][dst] = rows[i][dst] + rows[i][src] * factor
        for i in range(n):
            rows[dst][i] = rows[dst][i] + rows[src][i] * factor
        for i in range(n):
            trans[i][dst] = trans[i][dst] + trans[i][src] * factor

    def swap(i, j):
        for r in rows:
            r[i], r[j] = r[j], r[i]
        rows[i], rows[j] = rows[j], rows[i]
        for r in trans:
            r[i], r[j] = r[j], r[i]

    for k in range(n):
        if scalar_is_zero(rows[k][k]):
            pivot = None
            for i in range(k + 1, n):
                if not scalar_is_zero(rows[i][i]):
                    pivot = i
                    break
            if pivot is not None:
                swap(k, pivot)
            else:
                found = None
                for i in range(k, n):
                    for j in range(i + 1, n):
                        if not scalar_is_zero(rows[i][j]):
                            found = (i, j)
                            break
                    if found:
                        break
                if not found:
                    break  # remaining block is zero
                i, j = found
                if i != k:
                    swap(k, i)
                    j = k if j == k else j
                add_col(k, j, Fraction(1))
        piv = rows[k][k]
        for i in range(k + 1, n):
            if not scalar_is_zero(rows[k][i]):
                add_col(i, k, -rows[k][i] / piv)
    diag = [rows[i][i] for i in range(n)]
    return diag, trans
