"""Dense univariate polynomials over exact scalars (Fraction or QuadExt).

Coefficients are stored lowest degree first.  The zero polynomial has an
empty coefficient tuple and degree -1.  Heavy rational computations
(Sturm chains, gcds, resultants) are routed through integer-coefficient
paths with content stripping so coefficient growth stays subresultant-sized.
"""

from fractions import Fraction
from math import gcd as int_gcd

from .quadext import QuadExt, scalar_is_zero, scalar_sign


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and scalar_is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_ints(cls, coeffs):
        return cls([Fraction(c) for c in coeffs])

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def x(cls):
        return cls([Fraction(0), Fraction(1)])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, UniPoly):
            other = UniPoly([other])
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly([])
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if scalar_is_zero(ca):
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return UniPoly(out)

    __rmul__ = __mul__

    def scale(self, c):
        if scalar_is_zero(c):
            return UniPoly([])
        return UniPoly([a * c for a in self.coeffs])

    def shift_mul(self, k: int):
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UniPoly([Fraction(0)] * k + list(self.coeffs))

    def divmod(self, other):
        """Euclidean division over the coefficient field."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        d = other.degree()
        lc = other.lc()
        quot = [Fraction(0)] * max(0, len(rem) - d)
        while len(rem) - 1 >= d and rem:
            while rem and scalar_is_zero(rem[-1]):
                rem.pop()
            if len(rem) - 1 < d:
                break
            q = rem[-1] / lc
            k = len(rem) - 1 - d
            quot[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - q * c
            rem.pop()
        return UniPoly(quot), UniPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def derivative(self):
        return UniPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        """Horner evaluation; x may be Fraction, int, QuadExt or float."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return Fraction(0)
        return acc

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly([])
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly([c])
        return acc

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lc()
        return UniPoly([c / lc for c in self.coeffs])

    def map_coeffs(self, fn):
        return UniPoly([fn(c) for c in self.coeffs])

    def reversed_coeffs(self, n=None):
        """x^n * f(1/x) for n >= deg f (homogeneous reversal)."""
        n = self.degree() if n is None else n
        if n < self.degree():
            raise ValueError("reversal degree below polynomial degree")
        out = [Fraction(0)] * (n + 1)
        for i, c in enumerate(self.coeffs):
            out[n - i] = c
        return UniPoly(out)

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if not scalar_is_zero(c)]
        return "UniPoly(" + " + ".join(terms) + ")"


# -- integer-coefficient helpers ------------------------------------------------


def to_int_coeffs(f: UniPoly):
    """Clear denominators: returns (list of ints, multiplier m) with m*f integral."""
    den = 1
    for c in f.coeffs:
        if not isinstance(c, Fraction):
            raise TypeError("rational coefficients required")
        den = den * c.denominator // int_gcd(den, c.denominator)
    return [int(c * den) for c in f.coeffs], den

def int_content(cs) -> int:
    g = 0
    for c in cs:
        g = int_gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def int_primitive(cs):
    """Strip positive integer content, preserving sign."""
    g = int_content(cs)
    if g in (0, 1):
        return list(cs)
    return [c // g for c in cs]


def int_eval_sign(cs, x: Fraction) -> int:
    """Sign of an integer polynomial at a rational point, exactly.

    Uses the homogeneous Horner form sum c_i p^i q^(n-i), all in integers.
    """
    if not cs:
        return 0
    p, q = x.numerator, x.denominator
    n = len(cs) - 1
    acc = 0
    qpow = 1
    for i in range(n, -1, -1):
        acc = acc * p + cs[i] * qpow
        qpow *= q
    return (acc > 0) - (acc < 0)


def int_prem(f, g):
    """Pseudo-remainder of integer coefficient lists (lowest first).

    Returns prem(f, g) after multiplying f by lc(g)^delta with delta forced
    even, so evaluation signs match sign(rem) pointwise.
    """
    f = list(f)
    g = list(g)
    df, dg = len(f) - 1, len(g) - 1
    if dg < 0:
        raise ZeroDivisionError
    lcg = g[-1]
    delta = df - dg + 1
    if delta % 2 == 1:
        delta += 1  # even power keeps the multiplier positive
    scale = lcg ** delta
    f = [c * scale for c in f]
    while len(f) - 1 >= dg and f:
        while f and f[-1] == 0:
            f.pop()
        if len(f) - 1 < dg:
            break
        k = len(f) - 1 - dg
        q, r = divmod(f[-1], lcg)
        if r != 0:
            # should not happen given the pre-scaling; guard anyway
            f = [c * lcg for c in f]
            continue
        for i in range(dg + 1):
            f[k + i] -= q * g[i]
        f.pop()
    while f and f[-1] == 0:
        f.pop()
    return f


def int_gcd_poly(a, b):
    """Primitive-PRS gcd of integer coefficient lists, primitive output."""
    a = int_primitive([c for c in a])
    b = int_primitive([c for c in b])
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = int_prem(a, b)
        a, b = b, int_primitive(r)
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over the coefficient field (integer PRS fast path for Q)."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    if all(isinstance(c, Fraction) for c in f.coeffs + g.coeffs):
        fi, _ = to_int_coeffs(f)
        gi, _ = to_int_coeffs(g)
        h = int_gcd_poly(fi, gi)
        return UniPoly.from_ints(h).monic()
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(f: UniPoly) -> UniPoly:
    if f.is_zero():
        raise ValueError("zero polynomial")
    g = poly_gcd(f, f.derivative())
    if g.degree() <= 0:
        return f
    return f.divmod(g)[0]


def squarefree_decompose(f: UniPoly):
    """Yun's algorithm: f = unit * prod factor_i^mult_i, factors monic, coprime.

    Returns (unit, [(factor, multiplicity), ...]) for characteristic-0 scalars.
    """
    if f.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    unit = f.lc()
    f = f.monic()
    if f.degree() == 0:
        return unit, []
    d = f.derivative()
    a = poly_gcd(f, d)
    out = []
    b = f.exact_div(a)
    c = d.exact_div(a)
    i = 1
    while True:
        z = c - b.derivative()
        if z.is_zero():
            if b.degree() > 0:
                out.append((b.monic(), i))
            break
        g = poly_gcd(b, z)
        if g.degree() > 0:
            out.append((g.monic(), i))
        b = b.exact_div(g)
        c = z.exact_div(g)
        i += 1
    return unit, out


def is_squarefree_poly(f: UniPoly) -> bool:
    return poly_gcd(f, f.derivative()).degree() <= 0


# -- determinants and resultants ------------------------------------------------


def det_int(rows) -> int:
    """Bareiss fraction-free determinant of an integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_generic(rows, is_zero, exact_div):
    """Bareiss determinant over an integral domain with exact division."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        raise ValueError("empty matrix")
    sign = 1
    prev = None
    for k in range(n - 1):
        if is_zero(m[k][k]):
            for i in range(k + 1, n):
                if not is_zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[0][0] - m[0][0]  # domain zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = num if prev is None else exact_div(num, prev)
            m[i][k] = m[k][k] - m[k][k]
        prev = m[k][k]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def sylvester_matrix(f: UniPoly, g: UniPoly):
    """Sylvester matrix with the f-rows first (deg g of them), columns
    holding coefficients from highest to lowest degree."""
    m, n = f.degree(), g.degree()
    if m < 0 or n < 0:
        raise ValueError("resultant of zero polynomial")
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly):
    """det of the Sylvester matrix (f-rows first)."""
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant requires nonzero polynomials")
    if f.degree() == 0:
        return f.lc() ** g.degree() if g.degree() >= 0 else Fraction(1)
    if g.degree() == 0:
        return g.lc() ** f.degree()
    if all(isinstance(c, Fraction) for c in f.coeffs + g.coeffs):
        fi, df_den = to_int_coeffs(f)
        gi, dg_den = to_int_coeffs(g)
        r = det_int(sylvester_matrix(UniPoly.from_ints(fi), UniPoly.from_ints(gi)))
        return Fraction(r) / (Fraction(df_den) ** g.degree() * Fraction(dg_den) ** f.degree())
    rows = sylvester_matrix(f, g)
    return det_generic(rows, scalar_is_zero, lambda a, b: a / b)


def discriminant(f: UniPoly):
    """disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree()
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    r = resultant(f, f.derivative())
    s = -1 if (n * (n - 1) // 2) % 2 else 1
    return s * r / f.lc()


# -- binary forms -----------------------------------------------------------------


class BinaryForm:
    """Homogeneous form sum_i c_i t0^(n-i) t1^i (c fixed length n+1)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        cs = list(coeffs)
        if len(cs) != n + 1:
            raise ValueError("coefficient count must be degree + 1")
        self.n = n
        self.coeffs = tuple(cs)

    @classmethod
    def from_unipoly(cls, f: UniPoly, n: int) -> "BinaryForm":
        """Homogenize f(t) (t = t0/t1) to degree n."""
        if f.degree() > n:
            raise ValueError("degree exceeds homogenization target")
        return cls(n, [f.coeff(n - i) for i in range(n + 1)])

    def dehomogenize(self) -> UniPoly:
        """f(t) = F(t, 1)."""
        return UniPoly(list(reversed(self.coeffs)))

    def value(self, t0, t1):
        total = None
        for i, c in enumerate(self.coeffs):
            term = c * t0 ** (self.n - i) * t1 ** i
            total = term if total is None else total + term
        return total

    def vanishes_at_infinity(self) -> bool:
        """True when (1:0) is a root, i.e. t1 divides the form."""
        return scalar_is_zero(self.coeffs[0])

    def is_zero(self) -> bool:
        return all(scalar_is_zero(c) for c in self.coeffs)

    def scale(self, c):
        return BinaryForm(self.n, [a * c for a in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, BinaryForm) and self.n == other.n and self.coeffs == other.coeffs

    def __repr__(self):
        return f"BinaryForm({self.n}, {list(self.coeffs)})"


def proportional(f, g):
    """Nonzero scalar c with f = c*g (sequences of scalars), or None."""
    fa, ga = list(f), list(g)
    if len(fa) != len(ga):
        return None
    c = None
    for a, b in zip(fa, ga):
        az, bz = scalar_is_zero(a), scalar_is_zero(b)
        if az != bz:
            return None
        if not az:
            ratio = a / b
            if c is None:
                c = ratio
            elif ratio != c:
                return None
    return c
