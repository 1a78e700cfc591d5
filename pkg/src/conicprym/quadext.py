"""Exact arithmetic in real and imaginary quadratic extensions Q(sqrt(d)).

Elements are a + b*sqrt(d) with a, b rational and d a squarefree integer,
d not in {0, 1}.  Two elements combine only when their d agree; mixing
different extensions raises TypeError rather than building a compositum.
For d > 0 the real embedding fixes sqrt(d) > 0, so signs and rational
enclosures are exact.
"""

from fractions import Fraction
from math import isqrt

Rat = Fraction


def is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        if n % d == 0:
            n //= d
        d += 1
    return True


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def rational_is_square(q: Fraction) -> bool:
    return q >= 0 and is_square(q.numerator) and is_square(q.denominator)


def rational_sqrt(q: Fraction) -> Fraction:
    """Exact square root of a rational square."""
    if not rational_is_square(q):
        raise ValueError(f"{q} is not a rational square")
    return Fraction(isqrt(q.numerator), isqrt(q.denominator))


class QuadExt:
    """a + b*sqrt(d) with exact Fraction components."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        if d in (0, 1) or not is_squarefree(d):
            raise ValueError(f"d must be squarefree and not 0 or 1, got {d}")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = d

    # -- construction helpers -------------------------------------------------

    @classmethod
    def of(cls, x, d: int) -> "QuadExt":
        """Coerce a rational (or same-d QuadExt) into Q(sqrt(d))."""
        if isinstance(x, QuadExt):
            if x.b == 0:
                return cls(x.a, 0, d)
            if x.d != d:
                raise TypeError(f"cannot coerce sqrt({x.d}) element into Q(sqrt({d}))")
            return x
        return cls(Fraction(x), 0, d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d and self.b != 0 and other.b != 0:
                raise TypeError(f"mixed extensions: sqrt({self.d}) vs sqrt({other.d})")
            d = self.d if self.b != 0 or other.d == self.d else other.d
            return QuadExt.of(self, d), QuadExt.of(other, d)
        if isinstance(other, (int, Fraction)):
            return self, QuadExt(Fraction(other), 0, self.d)
        return self, NotImplemented

    # -- ring / field operations ----------------------------------------------

    def __add__(self, other):
        s, o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(s.a + o.a, s.b + o.b, s.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        s, o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(s.a - o.a, s.b - o.b, s.d)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        s, o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExt(s.a * o.a + s.b * o.b * s.d, s.a * o.b + s.b * o.a, s.d)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExt":
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero (or zero-norm) element")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        s, o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return s * o.inverse()

    def __rtruediv__(self, other):
        return QuadExt(Fraction(other), 0, self.d) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadExt(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- predicates -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> Fraction:
        if self.b != 0:
            raise ValueError("not rational")
        return self.a

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            if self.d == other.d:
                return self.a == other.a and self.b == other.b
            # distinct squarefree d: equal only if both rational
            return self.b == 0 and other.b == 0 and self.a == other.a
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    # -- real embedding (d > 0) --------------------------------------------------

    def sign(self) -> int:
        """Exact sign under the embedding with sqrt(d) > 0.  Requires d > 0."""
        if self.d < 0:
            if self.b != 0:
                raise ValueError("sign undefined for imaginary quadratic elements")
            a = self.a
            return (a > 0) - (a < 0)
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        # a and b*sqrt(d) compete: compare a^2 with b^2 d
        n = self.norm()
        if n == 0:
            return 0
        return sa if n > 0 else sb

    def __lt__(self, other):
        s, o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (s - o).sign() < 0

    def __le__(self, other):
        s, o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (s - o).sign() <= 0

    def __gt__(self, other):
        return not self.__le__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def enclosure(self, k: int = 30):
        """Rational interval [lo, hi] containing the real value, width <= |b|/2^(k-1)."""
        if self.d < 0 and self.b != 0:
            raise ValueError("no real embedding for d < 0")
        if self.b == 0:
            return self.a, self.a
        scale = 1 << k
        n = isqrt(self.d * scale * scale)
        lo_s, hi_s = Fraction(n, scale), Fraction(n + 1, scale)
        if self.b > 0:
            return self.a + self.b * lo_s, self.a + self.b * hi_s
        return self.a + self.b * hi_s, self.a + self.b * lo_s

    def __float__(self):
        if self.d < 0 and self.b != 0:
            raise ValueError("not real")
        lo, hi = self.enclosure(60)
        return float((lo + hi) / 2)

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        return f"({self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt({self.d}))"


def scalar_sign(x) -> int:
    """Sign of an exact scalar: Fraction/int or real QuadExt."""
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def scalar_is_zero(x) -> bool:
    if hasattr(x, "is_zero"):
        return x.is_zero()
    return x == 0


def quadext_is_square(x: QuadExt):
    """Return y in Q(sqrt(d)) with y*y == x, or None.

    Solves (p + q sqrt d)^2 = x: needs the field norm of x to be a rational
    square, then p^2 = (a + sqrt(norm))/2 for one choice of sign.
    """
    d = x.d
    if x.is_zero():
        return QuadExt(0, 0, d)
    if x.b == 0:
        if rational_is_square(x.a):
            return QuadExt(rational_sqrt(x.a), 0, d)
        if rational_is_square(x.a / d):
            return QuadExt(0, rational_sqrt(x.a / d), d)
        return None
    n = x.norm()
    if not rational_is_square(n):
        return None
    s = rational_sqrt(n)
    for root in (s, -s):
        p2 = (x.a + root) / 2
        if p2 != 0 and rational_is_square(p2):
            p = rational_sqrt(p2)
            q = x.b / (2 * p)
            y = QuadExt(p, q, d)
            if y * y == x:
                return y
    return None


def parse_rational(text: str) -> Fraction:
    """Parse an exact rational literal 'a' or 'a/b'.  Decimal points are rejected."""
    s = text.strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"decimal literals are forbidden, use exact rationals: {text!r}")
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s), 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def parse_quadext(text: str, d: int) -> QuadExt:
    """Parse 'a', 'a+b*sqrt(d)', 'b*sqrt(d)' style literals into Q(sqrt(d))."""
    s = text.strip().replace(" ", "")
    if "sqrt" not in s:
        return QuadExt(parse_rational(s), 0, d)
    head, tail = s.split("sqrt", 1)
    if not tail.startswith("(") or not tail.endswith(")"):
        raise ValueError(f"malformed quadratic literal {text!r}")
    d_in = int(tail[1:-1])
    if d_in != d:
        raise ValueError(f"inconsistent field: sqrt({d_in}) in a d={d} certificate")
    head = head[:-1] if head.endswith("*") else head
    # split rational part and sqrt coefficient: a+b* or a-b* or bare b*
    a_part, b_part = "0", head
    for i in range(len(head) - 1, 0, -1):
        if head[i] in "+-" and head[i - 1] not in "+-/*":
            a_part, b_part = head[:i], head[i:]
            break
    if b_part in ("", "+"):
        b = Fraction(1)
    elif b_part == "-":
        b = Fraction(-1)
    else:
        b = parse_rational(b_part)
    return QuadExt(parse_rational(a_part), b, d)


def format_quadext(x: QuadExt) -> str:
    if x.b == 0:
        return str(x.a)
    b = str(x.b) if x.b < 0 else "+" + str(x.b)
    if x.a == 0:
        b = str(x.b)
        return f"{b}*sqrt({x.d})"
    return f"{x.a}{b}*sqrt({x.d})"
