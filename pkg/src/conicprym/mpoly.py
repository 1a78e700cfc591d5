"""Sparse multivariate polynomials over Q, just enough for the cover
equations in P^4: arithmetic, partials, evaluation, and reduction mod p."""

from fractions import Fraction

from .groebner import FpPoly
from .quadext import scalar_is_zero


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms):
        self.nvars = nvars
        self.terms = {m: c for m, c in dict(terms).items() if not scalar_is_zero(c)}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def variable(cls, nvars, idx, c=Fraction(1)):
        mono = tuple(1 if i == idx else 0 for i in range(nvars))
        return cls(nvars, {mono: Fraction(c)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return MPoly(self.nvars, out)

    def __neg__(self):
        return MPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return MPoly(self.nvars, {m: c * other for m, c in self.terms.items()})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(m1, m2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return MPoly(self.nvars, out)

    def partial(self, var):
        out = {}
        for m, c in self.terms.items():
            e = m[var]
            if e == 0:
                continue
            key = list(m)
            key[var] = e - 1
            out[tuple(key)] = c * e
        return MPoly(self.nvars, out)

    def eval(self, point):
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for x, e in zip(point, m):
                for _ in range(e):
                    term = term * x
            total = total + term
        return total

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def mod_p(self, p: int) -> FpPoly:
        """Reduction mod p; denominators must be invertible mod p."""
        out = {}
        for m, c in self.terms.items():
            den = c.denominator % p
            if den == 0:
                raise ValueError(f"denominator {c.denominator} not invertible mod {p}")
            val = c.numerator * pow(den, p - 2, p) % p
            if val:
                out[m] = val
        return FpPoly(p, self.nvars, out)

    def __repr__(self):
        return f"MPoly({self.nvars}, {self.terms})"


def mpoly_from_ternary(form, nvars=3, offset=0) -> MPoly:
    """Embed a TernaryForm into an MPoly with u,v,w at positions offset..offset+2."""
    out = {}
    for (i, j, k), c in form.coeffs.items():
        mono = [0] * nvars
        mono[offset] = i
        mono[offset + 1] = j
        mono[offset + 2] = k
        out[tuple(mono)] = Fraction(c)
    return MPoly(nvars, out)


def mpoly_det3(rows):
    """Determinant of a 3x3 MPoly matrix."""
    a, b, c = rows[0]
    d, e, f = rows[1]
    g, h, i = rows[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
