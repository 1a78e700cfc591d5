"""Sturm sequences, certified real root isolation, and real algebraic numbers.

Rational-coefficient chains run on integer coefficient lists with pseudo
remainders and content stripping (the example sextics carry 10-digit
coefficients, naive rational remainders explode).  Chains over a real
quadratic extension use plain field remainders; the degrees there stay small.

A RealAlgebraic is one of
  - an exact rational,
  - an exact a + b*sqrt(d) with d > 0,
  - (squarefree integer witness polynomial, isolating interval (lo, hi]),
with ordering and sign queries decided exactly.  Interval-variant numbers are
normalized to the rational or quadratic form whenever the witness admits a
rational or quadratic factor through the root (trial d up to 30).
"""

from fractions import Fraction
from math import isqrt

from .quadext import QuadExt, is_squarefree, rational_is_square, rational_sqrt, scalar_sign
from .unipoly import (
    UniPoly,
    int_eval_sign,
    int_prem,
    int_primitive,
    poly_gcd,
    squarefree_part,
    to_int_coeffs,
)


class DomainError(ValueError):
    pass


# -- Sturm chains -----------------------------------------------------------------


def sturm_chain_ints(cs):
    """Sturm chain of an integer coefficient list, content-stripped each step."""
    f = int_primitive(cs)
    chain = [f]
    d = [i * c for i, c in enumerate(f)][1:]
    if d:
        chain.append(int_primitive(d))
    while len(chain[-1]) > 1:
        r = int_prem(chain[-2], chain[-1])
        r = int_primitive([-c for c in r])
        if not r:
            break
        chain.append(r)
    return chain


def sturm_chain_field(f: UniPoly):
    """Sturm chain via field remainders (QuadExt coefficients)."""
    chain = [f]
    d = f.derivative()
    if not d.is_zero():
        chain.append(d)
    while chain[-1].degree() > 0:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            break
        chain.append(-r)
    return chain


def _variations(signs) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v


class SturmChain:
    """Sign-variation oracle: counts distinct real roots in (a, b]."""

    def __init__(self, f: UniPoly):
        self.f = f
        if all(isinstance(c, (int, Fraction)) for c in f.coeffs):
            ints, _ = to_int_coeffs(f)
            self._int_chain = sturm_chain_ints(ints)
            self._field_chain = None
        else:
            self._int_chain = None
            self._field_chain = sturm_chain_field(f)

    def _signs_at(self, x):
        if self._int_chain is not None and isinstance(x, (int, Fraction)):
            return [int_eval_sign(cs, Fraction(x)) for cs in self._int_chain]
        if self._int_chain is not None:
            members = [UniPoly.from_ints(cs) for cs in self._int_chain]
        else:
            members = self._field_chain
        out = []
        for g in members:
            if isinstance(x, RealAlgebraic) and x.kind == "alg":
                out.append(sign_at(g, x))
            elif isinstance(x, RealAlgebraic):
                out.append(scalar_sign(g.eval(x.value)))
            else:
                out.append(scalar_sign(g.eval(x)))
        return out

    def variations(self, x) -> int:
        return _variations(self._signs_at(x))

    def variations_at_neg_inf(self) -> int:
        if self._int_chain is not None:
            signs = [(1 if cs[-1] > 0 else -1) * (-1 if (len(cs) - 1) % 2 else 1)
                     for cs in self._int_chain]
        else:
            signs = [scalar_sign(g.lc()) * (-1 if g.degree() % 2 else 1) for g in self._field_chain]
        return _variations(signs)

    def variations_at_pos_inf(self) -> int:
        if self._int_chain is not None:
            signs = [1 if cs[-1] > 0 else -1 for cs in self._int_chain]
        else:
            signs = [scalar_sign(g.lc()) for g in self._field_chain]
        return _variations(signs)

    def count(self, a, b) -> int:
        """Roots in (a, b]; a or b may be None for -infinity / +infinity."""
        va = self.variations_at_neg_inf() if a is None else self.variations(a)
        vb = self.variations_at_pos_inf() if b is None else self.variations(b)
        return va - vb


def _magnitude_bound(c) -> Fraction:
    if isinstance(c, QuadExt):
        return abs(c.a) + abs(c.b) * (isqrt(abs(c.d)) + 1)
    return abs(Fraction(c))


def _magnitude_floor(c) -> Fraction:
    """Positive lower bound for |c|, c nonzero."""
    if isinstance(c, QuadExt):
        if c.b == 0:
            return abs(c.a)
        return abs(c.norm()) / _magnitude_bound(c.conjugate())
    return abs(Fraction(c))


def cauchy_bound(f: UniPoly) -> Fraction:
    """B with every real root of f inside [-B, B]."""
    if f.is_zero():
        raise DomainError("zero polynomial")
    if f.degree() == 0:
        return Fraction(1)
    m = max(_magnitude_bound(c) for c in f.coeffs[:-1])
    return 1 + m / _magnitude_floor(f.lc())


def isolate_real_roots(f: UniPoly, lo=None, hi=None):
    """Isolating intervals (lo, hi] with rational endpoints for the distinct
    real roots of f in the optional rational range, ordered increasingly.

    Returns triples (lo, hi, squarefree witness)."""
    if f.is_zero():
        raise DomainError("zero polynomial has no isolated roots")
    g = squarefree_part(f)
    if g.degree() <= 0:
        return []
    chain = SturmChain(g)
    bound = cauchy_bound(g)
    a = Fraction(-bound - 1) if lo is None else Fraction(lo)
    b = Fraction(bound + 1) if hi is None else Fraction(hi)
    if a >= b:
        return []
    out = []
    stack = [(a, b, chain.count(a, b))]
    while stack:
        x, y, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append((x, y))
            continue
        mid = (x + y) / 2
        left = chain.count(x, mid)
        stack.append((mid, y, n - left))
        stack.append((x, mid, left))
    out.sort()
    return [(x, y, g) for (x, y) in out]


def count_roots_in_interval(f: UniPoly, lo, hi) -> int:
    """Exact count of real roots of squarefree f in (lo, hi]."""
    if poly_gcd(f, f.derivative()).degree() > 0:
        raise DomainError("count_roots_in_interval requires a squarefree polynomial")
    if compare_points(lo, hi) >= 0:
        raise DomainError("need lo < hi")
    return SturmChain(f).count(_as_point(lo), _as_point(hi))


def _as_point(x):
    if isinstance(x, RealAlgebraic):
        return x if x.kind == "alg" else x.value
    return x


def compare_points(a, b) -> int:
    return RealAlgebraic.wrap(a).cmp(RealAlgebraic.wrap(b))


# -- sign of a polynomial at an exact point -----------------------------------------


def sign_at(f: UniPoly, x) -> int:
    """Exact sign of f at x (Fraction, QuadExt with d > 0, or RealAlgebraic)."""
    if isinstance(x, (int, Fraction)):
        if all(isinstance(c, (int, Fraction)) for c in f.coeffs):
            ints, _ = to_int_coeffs(f)
            return int_eval_sign(ints, Fraction(x))
        return scalar_sign(f.eval(x))
    if isinstance(x, QuadExt):
        return scalar_sign(f.eval(x))
    if not isinstance(x, RealAlgebraic):
        raise TypeError(f"unsupported point type {type(x)!r}")
    if x.kind in ("rat", "quad"):
        return sign_at(f, x.value)
    if f.is_zero():
        return 0
    g = poly_gcd(f, x.witness)
    if g.degree() > 0 and SturmChain(g).count(x.lo, x.hi) == 1:
        return 0
    fsq = squarefree_part(f)
    chain = SturmChain(fsq)
    cur = x
    while chain.count(cur.lo, cur.hi) != 0:
        cur = cur.refine_step()
        if cur.kind != "alg":
            return sign_at(f, cur)
    return sign_at(f, cur.hi)


# -- real algebraic numbers ---------------------------------------------------------


class RealAlgebraic:
    """Exact rational | quadratic irrational (d > 0) | isolated witness root."""

    __slots__ = ("kind", "value", "witness", "lo", "hi", "_chain")

    def __init__(self, kind, value=None, witness=None, lo=None, hi=None, chain=None):
        self.kind = kind
        self.value = value
        self.witness = witness
        self.lo = lo
        self.hi = hi
        self._chain = chain

    @classmethod
    def wrap(cls, x):
        if isinstance(x, RealAlgebraic):
            return x
        if isinstance(x, (int, Fraction)):
            return cls("rat", Fraction(x))
        if isinstance(x, QuadExt):
            if x.b == 0:
                return cls("rat", x.a)
            if x.d < 0:
                raise DomainError("no real embedding for d < 0")
            return cls("quad", x)
        raise TypeError(f"cannot wrap {type(x)!r}")

    @classmethod
    def from_root(cls, f: UniPoly, lo, hi, simplify: bool = True):
        """The unique root of squarefree f in (lo, hi]."""
        ints, _ = to_int_coeffs(f)
        w = UniPoly.from_ints(int_primitive(ints))
        chain = SturmChain(w)
        lo, hi = Fraction(lo), Fraction(hi)
        if chain.count(lo, hi) != 1:
            raise DomainError("interval does not isolate exactly one root")
        num = cls("alg", witness=w, lo=lo, hi=hi, chain=chain)
        if sign_at(w, hi) == 0:
            return cls("rat", hi)
        if simplify:
            simplified = num._try_simplify()
            if simplified is not None:
                return simplified
        return num

    # -- refinement --

    def refine_step(self) -> "RealAlgebraic":
        if self.kind != "alg":
            return self
        mid = (self.lo + self.hi) / 2
        if sign_at(self.witness, mid) == 0:
            return RealAlgebraic("rat", mid)
        if self._chain.count(self.lo, mid) == 1:
            return RealAlgebraic("alg", witness=self.witness, lo=self.lo, hi=mid, chain=self._chain)
        return RealAlgebraic("alg", witness=self.witness, lo=mid, hi=self.hi, chain=self._chain)

    def refined(self, width) -> "RealAlgebraic":
        cur = self
        while cur.kind == "alg" and cur.hi - cur.lo > width:
            cur = cur.refine_step()
        return cur

    def enclosure(self, width=Fraction(1, 1 << 30)):
        """Rational [lo, hi] containing the value, hi - lo <= width."""
        if self.kind == "rat":
            return self.value, self.value
        if self.kind == "quad":
            k = 8
            while True:
                lo, hi = self.value.enclosure(k)
                if hi - lo <= width:
                    return lo, hi
                k *= 2
        cur = self.refined(width)
        if cur.kind != "alg":
            return cur.enclosure(width)
        return cur.lo, cur.hi

    # -- queries --

    def sign(self) -> int:
        if self.kind == "rat":
            return scalar_sign(self.value)
        if self.kind == "quad":
            return self.value.sign()
        if self.lo >= 0:
            return 1
        if self.hi < 0:
            return -1
        if sign_at(self.witness, Fraction(0)) == 0:
            return 0  # zero lies in (lo, hi], so it is the isolated root
        cur = self
        while cur.kind == "alg" and cur.lo < 0 <= cur.hi:
            cur = cur.refine_step()
        return cur.sign()

    def cmp(self, other) -> int:
        other = RealAlgebraic.wrap(other)
        a, b = self, other
        if a.kind == "rat" and b.kind == "rat":
            return (a.value > b.value) - (a.value < b.value)
        if a.kind != "alg" and b.kind != "alg":
            if a.kind == "quad" and b.kind == "quad" and a.value.d != b.value.d:
                pass  # irrationals in distinct quadratic fields are never equal
            else:
                d = a.value.d if a.kind == "quad" else b.value.d
                xa = QuadExt.of(a.value, d)
                xb = QuadExt.of(b.value, d)
                return (xa - xb).sign()
        elif a.kind == "alg" and b.kind == "alg":
            g = poly_gcd(a.witness, b.witness)
            if g.degree() > 0:
                cg = SturmChain(g)
                if cg.count(a.lo, a.hi) == 1 and cg.count(b.lo, b.hi) == 1:
                    mlo, mhi = max(a.lo, b.lo), min(a.hi, b.hi)
                    if mlo < mhi and cg.count(mlo, mhi) == 1:
                        return 0
        elif a.kind == "alg":
            if sign_at(a.witness, b.value) == 0 and _value_in_interval(b, a.lo, a.hi):
                return 0
        else:
            if sign_at(b.witness, a.value) == 0 and _value_in_interval(a, b.lo, b.hi):
                return 0
        width = Fraction(1, 16)
        while True:
            la, ha = a.enclosure(width)
            lb, hb = b.enclosure(width)
            if ha < lb:
                return -1
            if hb < la:
                return 1
            width /= 1 << 8

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    def __eq__(self, other):
        if isinstance(other, (RealAlgebraic, int, Fraction, QuadExt)):
            return self.cmp(other) == 0
        return NotImplemented

    def approx(self, digits: int = 12) -> float:
        lo, hi = self.enclosure(Fraction(1, 10 ** (digits + 2)))
        return float((lo + hi) / 2)

    def __repr__(self):
        if self.kind == "rat":
            return f"RealAlgebraic({self.value})"
        if self.kind == "quad":
            return f"RealAlgebraic({self.value!r})"
        return f"RealAlgebraic(root of deg {self.witness.degree()} in ({self.lo}, {self.hi}])"

    # -- normalization --

    def _try_simplify(self):
        """Detect a rational or quadratic value for an interval-variant root.

        Complete for factors of degree <= 2: rational roots have denominator
        dividing lc, and a monic rational quadratic factor of the witness has
        coefficient denominators dividing lc, so a narrow enough enclosure
        leaves one candidate, verified by exact division.
        """
        w = self.witness
        lc = abs(int(w.lc()))
        base = Fraction(1, 2 * lc * lc + 2)
        cur = self.refined(base)
        if cur.kind != "alg":
            return cur
        cand = simplest_rational_between(cur.lo, cur.hi)
        if cand.denominator <= lc and sign_at(w, cand) == 0:
            return RealAlgebraic("rat", cand)
        scale = max(abs(cur.lo), abs(cur.hi)) + 1
        for (olo, ohi, _) in isolate_real_roots(w):
            if olo == cur.lo and ohi == cur.hi:
                continue
            sib = RealAlgebraic("alg", witness=w, lo=olo, hi=ohi, chain=self._chain)
            scale_s = max(scale, abs(olo) + 1, abs(ohi) + 1)
            tight = base / (4 * scale_s)
            me = cur.refined(tight)
            sib = sib.refined(tight)
            if me.kind != "alg" or sib.kind != "alg":
                continue
            s_cand = simplest_rational_between(me.lo + sib.lo, me.hi + sib.hi)
            if s_cand.denominator > lc:
                continue
            prods = [me.lo * sib.lo, me.lo * sib.hi, me.hi * sib.lo, me.hi * sib.hi]
            p_cand = simplest_rational_between(min(prods), max(prods))
            if p_cand.denominator > lc:
                continue
            quad = UniPoly([p_cand, -s_cand, Fraction(1)])
            if not (w % quad).is_zero():
                continue
            disc = s_cand * s_cand - 4 * p_cand
            if disc <= 0:
                continue
            for d in range(2, 31):
                if not is_squarefree(d):
                    continue
                if rational_is_square(disc / d):
                    e = rational_sqrt(disc / d)
                    for sgn in (1, -1):
                        val = QuadExt(s_cand / 2, sgn * e / 2, d)
                        if RealAlgebraic("quad", val).cmp(RealAlgebraic("rat", me.lo)) > 0 and \
                           RealAlgebraic("quad", val).cmp(RealAlgebraic("rat", me.hi)) <= 0:
                            return RealAlgebraic("quad", val)
                    break
        return None


def _value_in_interval(x: "RealAlgebraic", lo: Fraction, hi: Fraction) -> bool:
    return x.cmp(RealAlgebraic("rat", lo)) > 0 and x.cmp(RealAlgebraic("rat", hi)) <= 0


def simplest_rational_between(lo: Fraction, hi: Fraction) -> Fraction:
    """Smallest-denominator rational in [lo, hi] (continued-fraction walk)."""
    if lo > hi:
        raise ValueError("empty interval")
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -simplest_rational_between(-hi, -lo)
    fl = lo.numerator // lo.denominator
    ceil_lo = fl if lo == fl else fl + 1
    if ceil_lo <= hi:
        return Fraction(ceil_lo)
    inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl))
    return fl + 1 / inner


def rational_between_points(a, b) -> Fraction:
    """A rational strictly between a < b (any exact point types)."""
    a = RealAlgebraic.wrap(a)
    b = RealAlgebraic.wrap(b)
    width = Fraction(1, 16)
    while True:
        _, ha = a.enclosure(width)
        lb, _ = b.enclosure(width)
        if ha < lb:
            for cand in (simplest_rational_between(ha, lb), (ha + lb) / 2):
                c = RealAlgebraic.wrap(cand)
                if a.cmp(c) < 0 and c.cmp(b) < 0:
                    return cand
        width /= 256


def isolated_roots(f: UniPoly, lo=None, hi=None, simplify: bool = True):
    """Real roots of f as RealAlgebraic numbers, increasing.

    lo/hi may be exact rationals or arbitrary RealAlgebraic bounds; irrational
    bounds are applied by exact filtering after isolation.
    """
    rational_lo = lo if isinstance(lo, (int, Fraction)) or lo is None else None
    rational_hi = hi if isinstance(hi, (int, Fraction)) or hi is None else None
    out = [RealAlgebraic.from_root(g, a, b, simplify=simplify)
           for (a, b, g) in isolate_real_roots(f, rational_lo, rational_hi)]
    if rational_lo is None and lo is not None:
        out = [r for r in out if r.cmp(RealAlgebraic.wrap(lo)) > 0]
    if rational_hi is None and hi is not None:
        out = [r for r in out if r.cmp(RealAlgebraic.wrap(hi)) <= 0]
    return out
