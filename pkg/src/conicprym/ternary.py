"""Homogeneous forms in u, v, w with exact coefficients.

Monomial keys are exponent triples (i, j, k) with i + j + k = degree;
absent keys are zero.  Coefficients are Fractions or QuadExt elements.
"""

from fractions import Fraction

from .quadext import scalar_is_zero


class TernaryForm:
    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs):
        self.degree = degree
        clean = {}
        for mono, c in dict(coeffs).items():
            i, j, k = mono
            if i + j + k != degree:
                raise ValueError(f"monomial {mono} is not of degree {degree}")
            if not scalar_is_zero(c):
                clean[(i, j, k)] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, degree: int) -> "TernaryForm":
        return cls(degree, {})

    @classmethod
    def from_named(cls, degree: int, named) -> "TernaryForm":
        """Build from {'u^2': c, 'u*v': c, ...} style monomial names."""
        out = {}
        for name, c in named.items():
            mono = _parse_monomial(name, degree)
            out[mono] = out.get(mono, Fraction(0)) + c
        return cls(degree, out)

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, mono):
        return self.coeffs.get(tuple(mono), Fraction(0))

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return TernaryForm(self.degree, out)

    def __neg__(self):
        return TernaryForm(self.degree, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return TernaryForm(self.degree, {m: a * c for m, a in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, TernaryForm):
            return self.scale(other)
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                key = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return TernaryForm(self.degree + other.degree, out)

    def eval(self, point):
        u, v, w = point
        total = Fraction(0)
        for (i, j, k), c in self.coeffs.items():
            total = total + c * u ** i * v ** j * w ** k
        return total

    def partial(self, var: int) -> "TernaryForm":
        """d/d(u,v,w)[var]; degree drops by one."""
        out = {}
        for mono, c in self.coeffs.items():
            e = mono[var]
            if e == 0:
                continue
            key = list(mono)
            key[var] = e - 1
            out[tuple(key)] = c * e
        return TernaryForm(max(self.degree - 1, 0), out)

    def substitute(self, forms) -> "TernaryForm":
        """Evaluate at three forms of a common degree m; result degree = m * degree."""
        m = forms[0].degree
        if any(f.degree != m for f in forms):
            raise ValueError("substituted forms must share a degree")
        if self.degree == 0:
            raise ValueError("substitution into a constant form")
        total = TernaryForm.zero(m * self.degree)
        for (i, j, k), c in self.coeffs.items():
            acc = None
            for f, e in zip(forms, (i, j, k)):
                for _ in range(e):
                    acc = f if acc is None else acc * f
            total = total + acc.scale(c)
        return total

    def restrict_to_parametrized_line(self, p, q):
        """Binary form in (s, t): evaluate at s*p + t*q.

        p and q are coordinate triples; the result is a list of coefficients
        [g_0, ..., g_n] for sum g_i s^(n-i) t^i.
        """
        n = self.degree
        out = [Fraction(0)] * (n + 1)
        for (i, j, k), c in self.coeffs.items():
            # expand prod (s*p_x + t*q_x)^e by binomial convolution
            poly = [Fraction(1)]  # coefficients in t, ascending
            for (pc, qc, e) in ((p[0], q[0], i), (p[1], q[1], j), (p[2], q[2], k)):
                base = _binomial_power(pc, qc, e)
                poly = _convolve(poly, base)
            for idx, a in enumerate(poly):
                out[idx] = out[idx] + c * a
        return out

    def __eq__(self, other):
        return (isinstance(other, TernaryForm) and self.degree == other.degree
                and self.coeffs == other.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        names = []
        for (i, j, k) in sorted(self.coeffs, reverse=True):
            c = self.coeffs[(i, j, k)]
            mono = "".join(f"{n}^{e}" if e > 1 else n for n, e in (("u", i), ("v", j), ("w", k)) if e)
            names.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(names)


def _binomial_power(pc, qc, e):
    """Coefficients of (s*pc + t*qc)^e in ascending powers of t (s-degree e-i)."""
    out = [Fraction(1)]
    for _ in range(e):
        out = _convolve(out, [pc, qc])
    return out


def _convolve(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if scalar_is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _parse_monomial(name: str, degree: int):
    s = name.replace(" ", "").replace("*", "")
    exps = {"u": 0, "v": 0, "w": 0}
    i = 0
    while i < len(s):
        var = s[i]
        if var not in exps:
            raise ValueError(f"bad monomial {name!r}")
        i += 1
        e = 1
        if i < len(s) and s[i] == "^":
            i += 1
            start = i
            while i < len(s) and s[i].isdigit():
                i += 1
            e = int(s[start:i])
        exps[var] += e
    if sum(exps.values()) != degree:
        raise ValueError(f"monomial {name!r} does not have degree {degree}")
    return (exps["u"], exps["v"], exps["w"])


def monomial_name(mono) -> str:
    i, j, k = mono
    if i + j + k == 0:
        return "1"
    return "*".join(f"{n}^{e}" if e > 1 else n for n, e in (("u", i), ("v", j), ("w", k)) if e)
