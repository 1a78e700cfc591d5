"""Derived objects of a quadric triple: the discriminant quartic, its double
cover in P^4, the genus-2 curve of the quadric surface pencil, fiber forms,
and witness-prime smoothness certificates."""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

from .groebner import PrimeFieldIdeal, ResourceError, projective_empty
from .mpoly import MPoly, mpoly_det3, mpoly_from_ternary
from .quadext import QuadExt
from .quadform import SymQuadraticForm, gram_matrix, pencil_det_poly, pencil_gram
from .realroots import isolated_roots
from .ternary import TernaryForm
from .unipoly import BinaryForm, UniPoly, is_squarefree_poly, squarefree_decompose


class DegenerateCurveError(ValueError):
    """The pencil determinant failed the squarefree degree-5/6 contract."""

    def __init__(self, message, factorization=None):
        super().__init__(message)
        self.factorization = factorization


@dataclass(frozen=True)
class FormTriple:
    q1: TernaryForm
    q2: TernaryForm
    q3: TernaryForm
    name: str = ""

    def __post_init__(self):
        for q in (self.q1, self.q2, self.q3):
            if q.degree != 2:
                raise ValueError("triple entries must be quadratic forms")
        if self.q1.is_zero() and self.q2.is_zero() and self.q3.is_zero():
            raise ValueError("triple must not be identically zero")

    def grams(self):
        return gram_matrix(self.q1), gram_matrix(self.q2), gram_matrix(self.q3)


@dataclass(frozen=True)
class CoverPresentation:
    """delta = Q2^2 - Q1*Q3 and the three quadrics cutting the double cover
    in P^4 with coordinates [u:v:w:r:s]."""
    delta: TernaryForm
    generators: tuple  # three MPoly in 5 variables

    def residues_at(self, point):
        return tuple(g.eval(point) for g in self.generators)


@dataclass(frozen=True)
class Genus2Curve:
    f: UniPoly
    label: str = ""

    def degree(self):
        return self.f.degree()


@dataclass(frozen=True)
class SmoothnessCertificate:
    verdict: str                      # smooth | singular | unknown
    method: str                      # witness-prime(p) | explicit-singular-point | none
    prime: Optional[int] = None
    singular_point: Optional[tuple] = None
    detail: str = ""


def discriminant_quartic(triple: FormTriple) -> TernaryForm:
    """Q2^2 - Q1*Q3, the quartic under the conic fibration."""
    return triple.q2 * triple.q2 - triple.q1 * triple.q3


def cover_equations(triple: FormTriple) -> CoverPresentation:
    """The quadrics Q1 - r^2, Q2 - r s, Q3 - s^2 in [u:v:w:r:s]."""
    r = MPoly.variable(5, 3)
    s = MPoly.variable(5, 4)
    g1 = mpoly_from_ternary(triple.q1, 5) - r * r
    g2 = mpoly_from_ternary(triple.q2, 5) - r * s
    g3 = mpoly_from_ternary(triple.q3, 5) - s * s
    return CoverPresentation(discriminant_quartic(triple), (g1, g2, g3))


def default_witness_primes(forms, count=5):
    """First `count` odd primes not dividing any coefficient denominator."""
    dens = set()
    for form in forms:
        for c in form.coeffs.values():
            dens.add(Fraction(c).denominator)
    out = []
    p = 3
    while len(out) < count:
        if all(d % p for d in dens):
            out.append(p)
        p += 2
        while any(p % q == 0 for q in range(3, p) if q * q <= p) or p % 2 == 0:
            p += 1
    return out


def prym_sextic(triple: FormTriple) -> Genus2Curve:
    """f(t) = -det(t^2 M1 + 2 t M2 + M3); rejected unless squarefree of
    degree 5 or 6."""
    m1, m2, m3 = triple.grams()
    f = -pencil_det_poly(m1, m2, m3)
    if f.is_zero() or f.degree() not in (5, 6):
        raise DegenerateCurveError(
            f"pencil determinant has degree {f.degree()}, need 5 or 6")
    unit, factors = squarefree_decompose(f)
    if any(mult > 1 for _, mult in factors):
        raise DegenerateCurveError(
            "pencil determinant is not squarefree",
            factorization=(unit, factors))
    return Genus2Curve(f, label=triple.name)


def degenerate_fiber_form(triple: FormTriple) -> BinaryForm:
    """-det(t0^2 M1 + 2 t0 t1 M2 + t1^2 M3) as a binary sextic; vanishes at
    the parameters of the rank-dropping quadric surface fibers."""
    m1, m2, m3 = triple.grams()
    f = -pencil_det_poly(m1, m2, m3)
    if f.is_zero():
        raise DegenerateCurveError("pencil determinant vanishes identically")
    return BinaryForm.from_unipoly(f, 6)


def fiber_form(triple: FormTriple, t0, t1=None) -> SymQuadraticForm:
    """Gram matrix on (u,v,w,z) of t0^2 Q1 + 2 t0 t1 Q2 + t1^2 Q3 - z^2."""
    if t1 is None:
        t0, t1 = _parameter_pair(t0)
    m1, m2, m3 = triple.grams()
    return pencil_gram(m1, m2, m3, t0, t1).extend_with_minus_one()


def pencil_form(triple: FormTriple, t0, t1=None, extended: bool = False) -> SymQuadraticForm:
    """3x3 Gram matrix of the pencil at (t0:t1); 4x4 with the -1 block on request."""
    if t1 is None:
        t0, t1 = _parameter_pair(t0)
    m1, m2, m3 = triple.grams()
    m = pencil_gram(m1, m2, m3, t0, t1)
    return m.extend_with_minus_one() if extended else m


def _parameter_pair(t):
    from .realroots import RealAlgebraic

    if isinstance(t, tuple):
        return t
    if isinstance(t, (int, Fraction, QuadExt)):
        return (t, Fraction(1))
    if isinstance(t, RealAlgebraic):
        if t.kind == "rat":
            return (t.value, Fraction(1))
        if t.kind == "quad":
            return (t.value, Fraction(1))
        raise TypeError("fiber forms at interval-variant parameters need number-field "
                        "arithmetic beyond one square root; pass a rational or quadratic t")
    raise TypeError(f"bad pencil parameter {t!r}")


def pgl2_act(m_rows, triple: FormTriple) -> FormTriple:
    """Reparametrize the pencil by (t0, t1) -> (a t0 + b t1, c t0 + d t1):
    Q1' = a^2 Q1 + 2ac Q2 + c^2 Q3,
    Q2' = ab Q1 + (ad+bc) Q2 + cd Q3,
    Q3' = b^2 Q1 + 2bd Q2 + d^2 Q3."""
    (a, b), (c, d) = m_rows
    a, b, c, d = Fraction(a), Fraction(b), Fraction(c), Fraction(d)
    if a * d - b * c == 0:
        raise ValueError("parameter change must be invertible")
    q1, q2, q3 = triple.q1, triple.q2, triple.q3
    new1 = q1.scale(a * a) + q2.scale(2 * a * c) + q3.scale(c * c)
    new2 = q1.scale(a * b) + q2.scale(a * d + b * c) + q3.scale(c * d)
    new3 = q1.scale(b * b) + q2.scale(2 * b * d) + q3.scale(d * d)
    return FormTriple(new1, new2, new3, name=triple.name)


# -- smoothness ------------------------------------------------------------------


def smooth_quartic_check(quartic: TernaryForm, witness_primes) -> SmoothnessCertificate:
    """Jacobian-criterion smoothness for a plane quartic.

    A witness prime with good reduction and projectively empty Jacobian ideal
    certifies smoothness over Q (the quartic discriminant is then a p-adic
    unit).  Singular verdicts carry an explicit rational or quadratic point
    found by resultant elimination.
    """
    if quartic.is_zero():
        raise ValueError("zero quartic")
    primes = list(witness_primes)
    if not primes:
        raise ValueError("need at least one witness prime")
    for p in primes:
        try:
            gens = _jacobian_ideal_mod_p(quartic, p)
        except ValueError:
            continue  # bad reduction of the coefficients
        if any(g is None for g in gens):
            continue
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        try:
            ideal = PrimeFieldIdeal(p, 3, gens, projective=True)
            if projective_empty(ideal):
                return SmoothnessCertificate("smooth", f"witness-prime({p})", prime=p)
        except ResourceError:
            continue
    point = _singular_point_search(quartic)
    if point is not None:
        return SmoothnessCertificate("singular", "explicit-singular-point",
                                     singular_point=point)
    return SmoothnessCertificate("unknown", "none",
                                 detail="no witness prime certified and no small-field singular point found")


def _jacobian_ideal_mod_p(quartic: TernaryForm, p: int):
    f = mpoly_from_ternary(quartic, 3)
    gens = [f] + [f.partial(i) for i in range(3)]
    out = []
    for g in gens:
        gp = g.mod_p(p)
        out.append(gp)
    if out[0].is_zero():
        return [None]
    return out


def cover_smooth_witness(pres: CoverPresentation, witness_primes) -> SmoothnessCertificate:
    """Smoothness of the double cover in P^4: at a witness prime the ideal of
    the three quadrics plus all 3x3 minors of their Jacobian must be
    projectively empty.  One-sided: never returns 'singular'."""
    jac = [[g.partial(i) for i in range(5)] for g in pres.generators]
    minors = []
    for cols in combinations(range(5), 3):
        rows = [[jac[r][c] for c in cols] for r in range(3)]
        minors.append(mpoly_det3(rows))
    gens_q = list(pres.generators) + minors
    for p in witness_primes:
        try:
            gens = [g.mod_p(p) for g in gens_q]
        except ValueError:
            continue
        if any(g.is_zero() for g in gens[:3]):
            continue  # a defining quadric degenerated mod p
        try:
            ideal = PrimeFieldIdeal(p, 5, [g for g in gens if not g.is_zero()], projective=True)
            if projective_empty(ideal):
                return SmoothnessCertificate("smooth", f"witness-prime({p})", prime=p)
        except ResourceError:
            continue
    return SmoothnessCertificate("unknown", "none",
                                 detail="no witness prime certified the cover smooth")


# -- explicit singular points over Q and Q(sqrt d) ---------------------------------


def _singular_point_search(quartic: TernaryForm):
    """Rational or quadratic common zero of the partial derivatives, by
    coordinate-point checks, coordinate-line restrictions, and a resultant
    elimination in the affine chart w = 1."""
    parts = [quartic.partial(i) for i in range(3)]

    def is_singular(pt):
        return all(_eval_zero(g, pt) for g in parts)

    for pt in ((Fraction(1), Fraction(0), Fraction(0)),
               (Fraction(0), Fraction(1), Fraction(0)),
               (Fraction(0), Fraction(0), Fraction(1))):
        if is_singular(pt):
            return pt

    # coordinate lines: restrict the partials, take gcds, try small-field roots
    for line in range(3):
        pt = _singular_on_coordinate_line(parts, line)
        if pt is not None and is_singular(pt):
            return pt

    pt = _singular_affine_search(parts)
    if pt is not None and is_singular(pt):
        return pt
    return None


def _eval_zero(form: TernaryForm, pt) -> bool:
    val = form.eval(pt)
    if isinstance(val, QuadExt):
        return val.is_zero()
    return val == 0


def _binary_from_line(form: TernaryForm, line: int):
    """Restrict to the coordinate line (one variable = 0) as a UniPoly in the
    affine coordinate of the two remaining variables plus its reversal degree."""
    p, q = {0: ((0, 1, 0), (0, 0, 1)),
            1: ((1, 0, 0), (0, 0, 1)),
            2: ((1, 0, 0), (0, 1, 0))}[line]
    coeffs = form.restrict_to_parametrized_line(p, q)
    return coeffs  # s^(n-i) t^i, ascending in t


def _singular_on_coordinate_line(parts, line: int):
    from .unipoly import poly_gcd

    restrictions = []
    deg = None
    for g in parts:
        cs = _binary_from_line(g, line)
        restrictions.append(cs)
        deg = len(cs) - 1
    gcd_poly = None
    for cs in restrictions:
        f = UniPoly(list(reversed(cs)))
        if f.is_zero():
            continue
        gcd_poly = f if gcd_poly is None else poly_gcd(gcd_poly, f)
    if gcd_poly is None:
        # all partials vanish on the whole line; pick a point on it
        return _point_from_line_parameter(line, Fraction(0))
    if gcd_poly.degree() <= 0:
        # check the point at parameter infinity: all restrictions with lead 0
        if all(cs[0] == 0 for cs in restrictions):
            return _point_from_line_parameter(line, None)
        return None
    for root in _small_field_roots(gcd_poly):
        return _point_from_line_parameter(line, root)
    if all(cs[0] == 0 for cs in restrictions):
        return _point_from_line_parameter(line, None)
    return None


def _point_from_line_parameter(line: int, t):
    """Point on the coordinate line at parameter (1:t), or (0:1) for t=None."""
    if line == 0:
        base, other = (0, 1, 0), (0, 0, 1)
    elif line == 1:
        base, other = (1, 0, 0), (0, 0, 1)
    else:
        base, other = (1, 0, 0), (0, 1, 0)
    if t is None:
        return tuple(Fraction(x) for x in other)
    return tuple(Fraction(b) + t * Fraction(o) for b, o in zip(base, other))


def _small_field_roots(f: UniPoly):
    """Rational and quadratic (one sqrt) roots of f, real or imaginary."""
    from .unipoly import squarefree_decompose as sqf

    out = []
    _, factors = sqf(f)
    for g, _mult in factors:
        if g.degree() == 1:
            out.append(-g.coeff(0) / g.coeff(1))
        elif g.degree() == 2:
            a, b, c = g.coeff(2), g.coeff(1), g.coeff(0)
            disc = b * b - 4 * a * c
            if disc == 0:
                out.append(-b / (2 * a))
                continue
            root = _sqrt_as_quadext(disc)
            if root is not None:
                out.append((QuadExt.of(-b, root.d) + root) / (2 * a))
    return out


def _sqrt_as_quadext(x: Fraction):
    """sqrt(x) as a QuadExt when x = e^2 * d with d squarefree |d| manageable."""
    from .quadext import rational_is_square, rational_sqrt

    if x == 0:
        return None
    num, den = x.numerator, x.denominator
    n = num * den  # sqrt(x) = sqrt(num*den)/den
    d = _squarefree_kernel(n)
    if d is None:
        return None
    e2 = Fraction(n, d)
    if not rational_is_square(e2):
        return None
    e = rational_sqrt(e2) / den
    if d == 1:
        return QuadExt(e, 0, 2)
    return QuadExt(0, e, d)


def _squarefree_kernel(n: int, limit: int = 10 ** 6):
    """Squarefree part of n by trial division; None if a large factor blocks it."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    d = 1
    f = 2
    while f * f <= n and f <= limit:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        if e % 2:
            d *= f
        f += 1
    if f > limit and n > 1:
        return None
    return sign * d * n


def _singular_affine_search(parts):
    """Eliminate u from the first two partials in the chart w = 1."""
    try:
        res_v = _resultant_in_u(parts[0], parts[1])
    except ValueError:
        return None
    if res_v is None or res_v.is_zero():
        return None
    for v0 in _small_field_roots(res_v):
        for u0 in _common_u_roots(parts, v0):
            return (u0, _lift(v0, u0), Fraction(1))
    return None


def _lift(v0, u0):
    if isinstance(u0, QuadExt) and not isinstance(v0, QuadExt):
        return QuadExt.of(Fraction(v0), u0.d)
    return v0


def _resultant_in_u(f: TernaryForm, g: TernaryForm):
    """Res_u of the w=1 dehomogenizations, as a UniPoly in v."""
    fu = _as_u_poly(f)
    gu = _as_u_poly(g)
    if fu is None or gu is None or not fu or not gu:
        return None
    from .unipoly import det_generic, sylvester_matrix

    pf = UniPoly(fu)
    pg = UniPoly(gu)
    if pf.degree() <= 0 or pg.degree() <= 0:
        return None
    rows = sylvester_matrix(pf, pg)
    return det_generic(rows, lambda x: getattr(x, "is_zero", lambda: x == 0)(),
                       _entry_exact_div)


def _entry_exact_div(a, b):
    if not isinstance(a, UniPoly):
        a = UniPoly([a])
    if not isinstance(b, UniPoly):
        b = UniPoly([b])
    return a.exact_div(b)


def _as_u_poly(form: TernaryForm):
    """Coefficients in u (ascending) of form(u, v, 1), as UniPoly-in-v entries."""
    degree = form.degree
    buckets = {}
    for (i, j, k), c in form.coeffs.items():
        buckets.setdefault(i, {})[j] = buckets.get(i, {}).get(j, Fraction(0)) + c
    if not buckets:
        return None
    max_u = max(buckets)
    out = []
    for i in range(max_u + 1):
        b = buckets.get(i, {})
        if b:
            n = max(b)
            out.append(UniPoly([b.get(j, Fraction(0)) for j in range(n + 1)]))
        else:
            out.append(UniPoly([]))
    while out and out[-1].is_zero():
        out.pop()
    return out


def _common_u_roots(parts, v0):
    """Small-field common roots in u of all three partials at (u, v0, 1)."""
    from .unipoly import poly_gcd

    polys = []
    for g in parts:
        cs = _as_u_poly(g)
        if cs is None:
            continue
        vals = [c.eval(v0) for c in cs]
        f = UniPoly(vals)
        if not f.is_zero():
            polys.append(f)
    if not polys:
        return [Fraction(0)]
    g = polys[0]
    for h in polys[1:]:
        g = _gcd_over_field(g, h)
    if g.degree() <= 0:
        return []
    return _small_field_roots_in_field(g, v0)


def _gcd_over_field(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _small_field_roots_in_field(g: UniPoly, v0):
    """Roots of g staying inside Q or the quadratic field of v0."""
    out = []
    if g.degree() == 1:
        out.append(-g.coeff(0) / g.coeff(1))
    elif g.degree() == 2:
        a, b, c = g.coeff(2), g.coeff(1), g.coeff(0)
        disc = b * b - 4 * a * c
        if isinstance(disc, QuadExt):
            from .quadext import quadext_is_square
            root = quadext_is_square(disc)
            if root is not None:
                out.append((-b + root) / (2 * a))
        else:
            if disc == 0:
                out.append(-b / (2 * a))
            else:
                root = _sqrt_as_quadext(Fraction(disc))
                if root is not None:
                    out.append((QuadExt.of(Fraction(-b), root.d) + root) / (2 * a))
    else:
        # fall back to rational roots via the linear factors of a squarefree split
        from .unipoly import squarefree_decompose as sqf
        if all(isinstance(c, Fraction) for c in g.coeffs):
            _, factors = sqf(g)
            for h, _m in factors:
                if h.degree() == 1:
                    out.append(-h.coeff(0) / h.coeff(1))
                elif h.degree() == 2:
                    out.extend(x for x in _small_field_roots(h))
    return out
