"""Exact matrix kernels: fraction-free rank/determinant and characteristic
polynomials over Fraction or QuadExt entries."""

from fractions import Fraction

from .quadext import QuadExt, scalar_is_zero
from .unipoly import UniPoly


def rank_and_det(rows):
    """(rank, det) by fraction-free Gaussian elimination; det is None for
    non-square input."""
    m = [list(r) for r in rows]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    if any(len(r) != nc for r in m):
        raise ValueError("ragged matrix")
    square = nr == nc and nr > 0
    sign = 1
    prev = None
    rank = 0
    row = 0
    for col in range(nc):
        if row >= nr:
            break
        pivot = None
        for i in range(row, nr):
            if not scalar_is_zero(m[i][col]):
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != row:
            m[row], m[pivot] = m[pivot], m[row]
            sign = -sign
        for i in range(row + 1, nr):
            for j in range(col + 1, nc):
                num = m[i][j] * m[row][col] - m[i][col] * m[row][j]
                m[i][j] = num if prev is None else _exact_div(num, prev)
            m[i][col] = m[i][col] - m[i][col]
        prev = m[row][col]
        rank += 1
        row += 1
    det = None
    if square:
        if rank < nr:
            det = Fraction(0)
        else:
            det = m[nr - 1][nc - 1] if sign == 1 else -m[nr - 1][nc - 1]
    return rank, det


def _exact_div(a, b):
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        return a.exact_div(b)
    return a / b


def det(rows):
    r, d = rank_and_det(rows)
    if d is None:
        raise ValueError("determinant of a non-square matrix")
    return d


def poly_matrix_det(rows):
    """Determinant of a small matrix with UniPoly entries (cofactor expansion)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = entry * poly_matrix_det(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    if total is None:
        return UniPoly([])
    return total


def char_poly(rows) -> UniPoly:
    """det(x*I - M) as a UniPoly over the entry field."""
    n = len(rows)
    x = UniPoly([Fraction(0), Fraction(1)])
    mat = []
    for i in range(n):
        row = []
        for j in range(n):
            c = rows[i][j]
            entry = -UniPoly([c])
            if i == j:
                entry = entry + x
            row.append(entry)
        mat.append(row)
    return poly_matrix_det(mat)
