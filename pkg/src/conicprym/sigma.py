"""Lines meeting the real quartic nowhere transversely, tangency polynomials
against the branch conics of the quadric surface pencil, and the audited
surjectivity check that real fiber lines cover those lines.

The full semialgebraic statement is replaced by a finite audited grid with an
exact certificate per sampled line: pencil boundary parameters are isolated
exactly as roots of a degree-<=12 discriminant resultant, arc membership is
decided by exact restriction at rational samples, and each certificate pins a
root of the tangency polynomial inside the real-line parameter interval with
a fiber signature check.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bundle import FormTriple, fiber_form
from .quadext import QuadExt, scalar_is_zero
from .quadform import gram_matrix, restrict_to_line, signature
from .realroots import (RealAlgebraic, count_roots_in_interval, isolated_roots,
                        rational_between_points, sign_at)
from .ternary import TernaryForm
from .unipoly import UniPoly, det_generic, squarefree_decompose, squarefree_part


class SigmaDomainError(ValueError):
    pass


@dataclass(frozen=True)
class ProjLine:
    form: TernaryForm            # nonzero linear form over Q or Q(sqrt d)
    span: tuple                  # two distinct points on the line

    @classmethod
    def from_form(cls, form: TernaryForm) -> "ProjLine":
        if form.degree != 1 or form.is_zero():
            raise SigmaDomainError("a line needs a nonzero linear form")
        a = form.coeff((1, 0, 0))
        b = form.coeff((0, 1, 0))
        c = form.coeff((0, 0, 1))
        one, zero = Fraction(1), Fraction(0)
        if not scalar_is_zero(c):
            span = ((c, zero, -a), (zero, c, -b))
        elif not scalar_is_zero(b):
            span = ((b, -a, zero), (zero, zero, one))
        else:
            span = ((zero, one, zero), (zero, zero, one))
        return cls(form, span)

    @classmethod
    def from_coeffs(cls, a, b, c) -> "ProjLine":
        return cls.from_form(TernaryForm(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c}))


def restrict_quartic(quartic: TernaryForm, line: ProjLine):
    """Binary quartic [g_0..g_4] (sum g_i s^(4-i) t^i) of the quartic on the line."""
    p, q = line.span
    return quartic.restrict_to_parametrized_line(p, q)


def _binary_real_root_data(g):
    """(affine UniPoly, multiplicity of the (0:1) root at infinity of the
    parametrization) for a binary form coefficient list."""
    u = UniPoly(list(g))
    inf_mult = (len(g) - 1) - u.degree() if not u.is_zero() else None
    return u, inf_mult


def sigma_membership(line: ProjLine, quartic: TernaryForm) -> bool:
    """True iff every real intersection of the line with the quartic has
    multiplicity >= 2: the multiplicity-one part of the restriction must have
    no real projective roots."""
    g = restrict_quartic(quartic, line)
    if all(scalar_is_zero(c) for c in g):
        raise SigmaDomainError("line lies inside the quartic")
    u, inf_mult = _binary_real_root_data(g)
    if inf_mult == 1:
        return False  # the parametrization's point at infinity is a simple real root
    if u.degree() <= 0:
        return True
    _, factors = squarefree_decompose(u)
    for factor, mult in factors:
        if mult != 1:
            continue
        if _has_real_root(factor):
            return False
    return True


def _has_real_root(f: UniPoly) -> bool:
    from .realroots import SturmChain
    return SturmChain(f).count(None, None) > 0


@dataclass(frozen=True)
class TangencyPolynomial:
    full: UniPoly                # discriminant of the restricted pencil, deg <= 4 in t
    radical: UniPoly             # squarefree part
    square_factors: tuple        # (factor, multiplicity >= 2) removed parts
    is_quadratic: bool           # whether the radical has degree <= 2


def tangency_polynomial(triple: FormTriple, line: ProjLine) -> TangencyPolynomial:
    """Discriminant in the line parameter of the pencil restricted to the
    line: vanishes exactly at the fibers whose branch conic is tangent to it."""
    p, q = line.span
    m1, m2, m3 = triple.grams()
    a1, b1, c1 = restrict_to_line(m1, p, q)
    a2, b2, c2 = restrict_to_line(m2, p, q)
    a3, b3, c3 = restrict_to_line(m3, p, q)
    if all(scalar_is_zero(x) for x in (a1, b1, c1, a2, b2, c2, a3, b3, c3)):
        raise SigmaDomainError("pencil restricts to zero on the line")
    A = UniPoly([c for c in (a3, 2 * a2, a1)])
    B = UniPoly([c for c in (b3, 2 * b2, b1)])
    C = UniPoly([c for c in (c3, 2 * c2, c1)])
    T = B * B - A * C * UniPoly([Fraction(4)])
    if T.is_zero():
        raise SigmaDomainError("tangency polynomial vanishes identically")
    unit, factors = squarefree_decompose(T)
    radical = UniPoly([Fraction(1)])
    squares = []
    for factor, mult in factors:
        radical = radical * factor
        if mult > 1:
            squares.append((factor, mult))
    return TangencyPolynomial(T, radical, tuple(squares), radical.degree() <= 2)


@dataclass(frozen=True)
class TangencyCertificate:
    line_coeffs: tuple
    tangency: TangencyPolynomial
    root: RealAlgebraic
    sample_t: Fraction
    sample_signature: tuple


@dataclass(frozen=True)
class CoverageFailure:
    line_coeffs: tuple
    endpoint_signs: tuple        # (sign at lo, sign at hi) of the radical
    double_root_signs: tuple     # signs at the removed square factors' real roots
    detail: str


def line_covered_certificate(triple: FormTriple, line: ProjLine, lo, hi):
    """Find a root of the tangency polynomial in [lo, hi] and record a (2,2)
    fiber signature at a rational parameter next to it; failure is data."""
    tp = tangency_polynomial(triple, line)
    root = _root_in_closed_interval(tp.radical, lo, hi)
    if root is None:
        lo_sign = _field_sign_at(tp.radical, lo)
        hi_sign = _field_sign_at(tp.radical, hi)
        dbl = []
        for factor, _mult in tp.square_factors:
            if all(isinstance(c, Fraction) for c in factor.coeffs):
                for r in isolated_roots(factor, simplify=False):
                    dbl.append(_sign_of_root_in_interval(r, lo, hi))
        return CoverageFailure(_line_coeff_tuple(line), (lo_sign, hi_sign), tuple(dbl),
                               "no tangency root inside the real-line interval")
    sample = _interior_sample_near(root, lo, hi)
    sig = signature(fiber_form(triple, (sample, Fraction(1))))
    if sig.pair() != (2, 2):
        # the sample landed on a rank-drop parameter; move to a fresh one
        sample = rational_between_points(RealAlgebraic.wrap(lo), RealAlgebraic.wrap(hi))
        sig = signature(fiber_form(triple, (sample, Fraction(1))))
    if sig.pair() != (2, 2):
        return CoverageFailure(_line_coeff_tuple(line), (0, 0), (),
                               "no (2,2) sample available inside the interval")
    return TangencyCertificate(_line_coeff_tuple(line), tp, root, sample, sig.pair())


def _line_coeff_tuple(line: ProjLine):
    return (line.form.coeff((1, 0, 0)), line.form.coeff((0, 1, 0)), line.form.coeff((0, 0, 1)))


def _point_value(x):
    if isinstance(x, RealAlgebraic):
        return x if x.kind == "alg" else x.value
    return x


def _root_in_closed_interval(f: UniPoly, lo, hi) -> Optional[RealAlgebraic]:
    from .quadext import scalar_sign
    lo_w = RealAlgebraic.wrap(lo)
    hi_w = RealAlgebraic.wrap(hi)
    if _field_sign_at(f, lo) == 0:
        return lo_w
    if count_roots_in_interval(f, lo, hi) == 0:
        return None
    if all(isinstance(c, Fraction) for c in f.coeffs):
        for r in isolated_roots(f):
            if lo_w.cmp(r) < 0 and r.cmp(hi_w) <= 0:
                return r
        return None
    if _field_sign_at(f, hi) == 0:
        return hi_w
    return _isolate_quadext_root(f, lo_w, hi_w)


def _field_sign_at(f: UniPoly, x) -> int:
    from .quadext import scalar_sign
    v = _point_value(x)
    if isinstance(v, RealAlgebraic):
        return sign_at(f, v)
    return scalar_sign(f.eval(v)) if not all(isinstance(c, Fraction) for c in f.coeffs) \
        else sign_at(f, v)


def _isolate_quadext_root(f: UniPoly, lo_w: RealAlgebraic, hi_w: RealAlgebraic):
    """Root of a Q(sqrt d)-coefficient polynomial in (lo, hi], represented over
    Q through the conjugate-norm witness."""
    from .realroots import SturmChain
    norm = f * f.map_coeffs(lambda c: c.conjugate() if isinstance(c, QuadExt) else c)
    norm_rat = norm.map_coeffs(lambda c: c.a if isinstance(c, QuadExt) else Fraction(c))
    chain_f = SturmChain(f)
    # rational bracket around one root of f inside the interval
    width = Fraction(1, 8)
    while True:
        la, ha = lo_w.enclosure(width)
        lb, hb = hi_w.enclosure(width)
        if ha < lb and chain_f.count(ha, lb) >= 1:
            a, b = ha, lb
            break
        width /= 16
    while chain_f.count(a, b) > 1:
        mid = (a + b) / 2
        if chain_f.count(a, mid) >= 1:
            b = mid
        else:
            a = mid
    from .unipoly import squarefree_part as _sqf
    witness = _sqf(norm_rat)
    chain_n = SturmChain(witness)
    while chain_n.count(a, b) != 1:
        mid = (a + b) / 2
        if chain_f.count(a, mid) == 1:
            b = mid
        else:
            a = mid
    return RealAlgebraic.from_root(witness, a, b)


def _sign_of_root_in_interval(r: RealAlgebraic, lo, hi) -> int:
    lo_w = RealAlgebraic.wrap(lo)
    hi_w = RealAlgebraic.wrap(hi)
    if lo_w.cmp(r) <= 0 and r.cmp(hi_w) <= 0:
        return 0
    return -1 if r.cmp(lo_w) < 0 else 1


def _interior_sample_near(root: RealAlgebraic, lo, hi) -> Fraction:
    """Rational strictly inside (lo, hi), taken inside the root's bracket when
    the root is interior."""
    lo_w = RealAlgebraic.wrap(lo)
    hi_w = RealAlgebraic.wrap(hi)
    if lo_w.cmp(root) < 0 and root.cmp(hi_w) < 0:
        cur = root
        if cur.kind == "alg":
            width = (cur.hi - cur.lo)
            while not (lo_w.cmp(RealAlgebraic.wrap(cur.lo)) < 0
                       and RealAlgebraic.wrap(cur.hi).cmp(hi_w) < 0):
                width /= 2
                cur = cur.refined(width)
                if cur.kind != "alg":
                    break
            if cur.kind == "alg":
                return _avoid_root(cur.lo, cur.hi, root)
        return rational_between_points(lo_w, root)
    return rational_between_points(lo_w, hi_w)


def _avoid_root(lo: Fraction, hi: Fraction, root: RealAlgebraic) -> Fraction:
    for cand in (lo + (hi - lo) / 3, lo + (hi - lo) * 2 / 3, (lo + hi) / 2):
        if root.cmp(RealAlgebraic.wrap(cand)) != 0:
            return cand
    return lo + (hi - lo) / 5


# -- pencils -------------------------------------------------------------------------


@dataclass(frozen=True)
class PencilThroughPoint:
    base: tuple                  # rational point in P^2
    gen1: TernaryForm            # two independent lines through the base
    gen2: TernaryForm

    def __post_init__(self):
        if not scalar_is_zero(self.gen1.eval(self.base)) or not scalar_is_zero(self.gen2.eval(self.base)):
            raise SigmaDomainError("generators must pass through the base point")

    def line_at(self, lam, mu=Fraction(1)) -> ProjLine:
        form = self.gen1.scale(lam) + self.gen2.scale(mu)
        if form.is_zero():
            raise SigmaDomainError("(0:0) pencil parameter")
        return ProjLine.from_form(form)


def pencil_through(base) -> PencilThroughPoint:
    """Pencil of lines through a rational point, generated by two coordinate
    cross forms."""
    b = tuple(Fraction(x) for x in base)
    forms = []
    cands = [TernaryForm(1, {(1, 0, 0): b[1], (0, 1, 0): -b[0]}),
             TernaryForm(1, {(1, 0, 0): b[2], (0, 0, 1): -b[0]}),
             TernaryForm(1, {(0, 1, 0): b[2], (0, 0, 1): -b[1]})]
    for f in cands:
        if f.is_zero():
            continue
        if not forms:
            forms.append(f)
            continue
        if not _lines_parallel(forms[0], f):
            forms.append(f)
            break
    if len(forms) < 2:
        raise SigmaDomainError("could not build a pencil at the base point")
    return PencilThroughPoint(b, forms[0], forms[1])


def _lines_parallel(f1: TernaryForm, f2: TernaryForm) -> bool:
    a = [f1.coeff((1, 0, 0)), f1.coeff((0, 1, 0)), f1.coeff((0, 0, 1))]
    b = [f2.coeff((1, 0, 0)), f2.coeff((0, 1, 0)), f2.coeff((0, 0, 1))]
    for i in range(3):
        for j in range(3):
            if not scalar_is_zero(a[i] * b[j] - a[j] * b[i]):
                return False
    return True


def _pencil_restriction(pencil: PencilThroughPoint, quartic: TernaryForm):
    """Restriction of the quartic to the moving line lambda*gen1 + gen2,
    parametrized by s*base + t*q(lambda); coefficients are UniPoly in lambda."""
    p = pencil.base
    a_pt = _point_on_line_not(pencil.gen2, p)
    b_pt = _point_on_line_not(pencil.gen1, p)
    c1 = pencil.gen1.eval(a_pt)     # nonzero: a_pt off gen1
    c2 = pencil.gen2.eval(b_pt)
    a_pt = tuple(x / c1 for x in a_pt)
    b_pt = tuple(x / c2 for x in b_pt)
    lam = UniPoly([Fraction(0), Fraction(1)])
    q_moving = tuple(UniPoly([a]) - lam * UniPoly([b]) for a, b in zip(a_pt, b_pt))
    return quartic.restrict_to_parametrized_line(p, q_moving)


def _point_on_line_not(line: TernaryForm, p):
    """A rational point on V(line) independent from p."""
    pl = ProjLine.from_form(line)
    for cand in pl.span:
        if not _proj_parallel(cand, p):
            return cand
    raise SigmaDomainError("degenerate pencil span")


def _proj_parallel(a, b):
    for i in range(3):
        for j in range(3):
            if not scalar_is_zero(a[i] * b[j] - a[j] * b[i]):
                return False
    return True


def pencil_boundary_params(pencil: PencilThroughPoint, quartic: TernaryForm):
    """Parameters where the restricted quartic acquires a real multiple root.

    Returns (params, infinity_is_boundary): the finite parameters are exact
    real algebraic numbers in increasing order.
    """
    if scalar_is_zero(quartic.eval(pencil.base)):
        raise SigmaDomainError("base point lies on the quartic")
    g = _pencil_restriction(pencil, quartic)
    g = [c if isinstance(c, UniPoly) else UniPoly([c]) for c in g]
    u = UniPoly(g)  # polynomial in the line parameter with UniPoly-in-lambda coefficients
    du = u.derivative()
    disc = _bivariate_resultant(u, du)
    if disc.is_zero():
        raise SigmaDomainError("pencil restriction is degenerate (identically multiple roots)")
    radical = squarefree_part(disc)
    lc = abs(int(radical.lc() * radical.lc().denominator)) or 1
    params = []
    for root in isolated_roots(radical, simplify=(lc < 10 ** 9)):
        if _multiple_root_is_real(u, du, root):
            params.append(root)
    inf_boundary = _has_real_multiple_root(_line_restriction_at_infinity(pencil, quartic))
    return params, inf_boundary


def _line_restriction_at_infinity(pencil: PencilThroughPoint, quartic: TernaryForm):
    line = ProjLine.from_form(pencil.gen1)
    return restrict_quartic(quartic, line)


def _has_real_multiple_root(g) -> bool:
    u, inf_mult = _binary_real_root_data(g)
    if inf_mult is not None and inf_mult >= 2:
        return True
    if u.degree() <= 0:
        return False
    _, factors = squarefree_decompose(u)
    for factor, mult in factors:
        if mult >= 2 and _has_real_root(factor):
            return True
    return False


def _bivariate_resultant(u: UniPoly, v: UniPoly) -> UniPoly:
    """Res_x of two polynomials whose coefficients are UniPoly in lambda."""
    from .unipoly import sylvester_matrix

    rows = sylvester_matrix(u, v)
    det = det_generic(rows, lambda x: getattr(x, "is_zero", lambda: x == 0)(),
                      _poly_div)
    return det if isinstance(det, UniPoly) else UniPoly([det])


def _poly_div(a, b):
    if not isinstance(a, UniPoly):
        a = UniPoly([a])
    if not isinstance(b, UniPoly):
        b = UniPoly([b])
    return a.exact_div(b)


def _subresultant_coefficient_polys(u: UniPoly, v: UniPoly, j: int):
    """Coefficients [c_0..c_j] (UniPoly in lambda) of the j-th subresultant of
    u and v with respect to the line parameter."""
    n, m = u.degree(), v.degree()
    size = n + m - 2 * j
    width = n + m - j
    rows = []
    uc = [u.coeff(n - i) for i in range(n + 1)]       # descending
    vc = [v.coeff(m - i) for i in range(m + 1)]
    for sh in range(m - j):
        row = [Fraction(0)] * width
        for i, c in enumerate(uc):
            row[sh + i] = c
        rows.append(row)
    for sh in range(n - j):
        row = [Fraction(0)] * width
        for i, c in enumerate(vc):
            row[sh + i] = c
        rows.append(row)
    out = []
    for i in range(j + 1):
        cols = list(range(size - 1)) + [width - 1 - i]
        m_sub = [[row[c] for c in cols] for row in rows]
        out.append(det_generic(m_sub, lambda x: getattr(x, "is_zero", lambda: x == 0)(),
                               _poly_div))
    return [c if isinstance(c, UniPoly) else UniPoly([c]) for c in out]


def _multiple_root_is_real(u: UniPoly, du: UniPoly, lam: RealAlgebraic) -> bool:
    """At a root of the parameter discriminant, decide whether the multiple
    root of the restricted quartic is real: locate the gcd degree by the
    principal subresultant signs, then test the gcd's reality."""
    for j in (1, 2, 3):
        coeffs = _subresultant_coefficient_polys(u, du, j)
        principal = coeffs[j]
        if sign_at(principal, _point_value(lam)) != 0:
            if j in (1, 3):
                return True  # odd-degree gcd always has a real root
            disc = coeffs[1] * coeffs[1] - UniPoly([Fraction(4)]) * coeffs[2] * coeffs[0]
            return sign_at(disc, _point_value(lam)) >= 0
    return True  # gcd degree >= 4: the whole quartic is a square of a real quadratic etc.


# -- the audit -----------------------------------------------------------------------


@dataclass(frozen=True)
class PencilAudit:
    base: tuple
    boundary_params: tuple
    infinity_boundary: bool
    arcs: tuple                  # (span description, member: bool, samples: tuple)
    certificates: tuple
    failures: tuple


@dataclass(frozen=True)
class AuditReport:
    base_line_in_sigma: bool
    interval: tuple              # (lo, hi) of the real-line parameter interval
    pencils: tuple
    certified: int
    failed: int
    skipped_base_points: tuple

    @property
    def passed(self):
        return self.failed == 0


def default_base_points(count: int):
    """Deterministic rational points on the line w = 0."""
    pts = [(Fraction(1), Fraction(0), Fraction(0)), (Fraction(0), Fraction(1), Fraction(0))]
    k = 1
    seq = []
    while len(seq) < count - 2:
        for q in (Fraction(k), Fraction(-k), Fraction(1, k + 1), Fraction(-1, k + 1)):
            seq.append((Fraction(1), q, Fraction(0)))
            if len(seq) >= count - 2:
                break
        k += 1
    return (pts + seq)[:count]


def surjectivity_audit(triple: FormTriple, base_points: int = 20,
                       lines_per_pencil: int = 10,
                       refine_width: Fraction = Fraction(1, 1024)):
    """Sample pencils through rational points of the base line, carve each
    into arcs by the exact boundary parameters, test membership, and certify
    every sampled member line."""
    from .topology import classify_real_locus

    report = classify_real_locus(triple)
    if report.real_line_intervals in ((), ("full",)) or not report.real_line_intervals:
        raise SigmaDomainError("no real-line parameter interval: audit precondition fails")
    interval = report.real_line_intervals[0]
    if interval.through_infinity:
        raise SigmaDomainError("wrapping real-line intervals are not auditable with the affine grid")
    lo, hi = interval.lo, interval.hi

    from .bundle import discriminant_quartic
    quartic = discriminant_quartic(triple)
    base_line = ProjLine.from_coeffs(Fraction(0), Fraction(0), Fraction(1))
    base_in_sigma = sigma_membership(base_line, quartic)

    pencils = []
    certified = 0
    failed = 0
    skipped = []
    for base in default_base_points(base_points):
        if scalar_is_zero(quartic.eval(base)):
            skipped.append(base)
            continue
        pencil = pencil_through(base)
        params, inf_boundary = pencil_boundary_params(pencil, quartic)
        arcs, samples_by_arc = _arc_samples(pencil, quartic, params, inf_boundary,
                                            lines_per_pencil, refine_width)
        certs = []
        fails = []
        for lam in samples_by_arc:
            line = pencil.line_at(lam)
            res = line_covered_certificate(triple, line, lo, hi)
            if isinstance(res, TangencyCertificate):
                certs.append(res)
            else:
                fails.append(res)
        exact_boundary = _exact_boundary_certs(triple, pencil, params, lo, hi)
        for res in exact_boundary:
            if isinstance(res, TangencyCertificate):
                certs.append(res)
            else:
                fails.append(res)
        certified += len(certs)
        failed += len(fails)
        pencils.append(PencilAudit(base, tuple(params), inf_boundary, tuple(arcs),
                                   tuple(certs), tuple(fails)))
    return AuditReport(base_in_sigma, (lo, hi), tuple(pencils), certified, failed,
                       tuple(skipped))


def _arc_samples(pencil, quartic, params, inf_boundary, budget, refine_width):
    """Rational parameters of member lines inside the Sigma arcs of the pencil."""
    arcs = []
    circle = list(params)
    if not circle:
        lam = Fraction(0)
        member = sigma_membership(pencil.line_at(lam), quartic)
        arcs.append(("whole pencil", member))
        return arcs, ([Fraction(0), Fraction(1), Fraction(-1)][:budget] if member else [])
    gaps = []
    for i in range(len(circle) - 1):
        gaps.append((circle[i], circle[i + 1], False))
    gaps.append((circle[-1], circle[0], True))
    candidates = []
    member_flags = []
    for (a, b, wraps) in gaps:
        if wraps:
            _, ha = a.enclosure(Fraction(1, 4))
            lb, _ = b.enclosure(Fraction(1, 4))
            arc_samples = [ha + 1, ha + 2, ha + 4, lb - 1, lb - 2]
        else:
            mid = rational_between_points(a, b)
            arc_samples = [mid]
            near_a = _near_boundary_sample(a, b, refine_width, from_left=True)
            near_b = _near_boundary_sample(b, a, refine_width, from_left=False)
            for x in (near_a, near_b):
                if x is not None and x not in arc_samples:
                    arc_samples.append(x)
            for edge in (near_a, near_b):
                if edge is not None:
                    extra = (mid + edge) / 2
                    if extra not in arc_samples:
                        arc_samples.append(extra)
        member = sigma_membership(pencil.line_at(arc_samples[0]), quartic)
        member_flags.append(member)
        arcs.append(((_pt_repr(a), _pt_repr(b), wraps), member))
        candidates.append(arc_samples if member else [])
    n_member = sum(1 for m in member_flags if m)
    samples = []
    if n_member:
        per_arc = max(1, budget // n_member)
        for arc_samples in candidates:
            samples.extend(arc_samples[:per_arc])
    return arcs, samples


def _near_boundary_sample(edge, other, width, from_left):
    a = RealAlgebraic.wrap(edge)
    cur = a.refined(width) if a.kind == "alg" else a
    try:
        if from_left:
            lo_, hi_ = cur.enclosure(width)
            cand = hi_ + width
            if RealAlgebraic.wrap(cand).cmp(RealAlgebraic.wrap(other)) < 0 and \
               a.cmp(RealAlgebraic.wrap(cand)) < 0:
                return cand
        else:
            lo_, hi_ = cur.enclosure(width)
            cand = lo_ - width
            if RealAlgebraic.wrap(cand).cmp(RealAlgebraic.wrap(other)) > 0 and \
               a.cmp(RealAlgebraic.wrap(cand)) > 0:
                return cand
    except Exception:
        return None
    return None


def _pt_repr(x):
    if isinstance(x, RealAlgebraic):
        if x.kind == "rat":
            return str(x.value)
        if x.kind == "quad":
            from .quadext import format_quadext
            return format_quadext(x.value)
        return f"root in ({x.lo}, {x.hi}]"
    return str(x)


def _exact_boundary_certs(triple, pencil, params, lo, hi):
    """Run the tangency certificate exactly at boundary lines whose parameter
    is rational or quadratic over a compatible field."""
    out = []
    interval_ds = set()
    for x in (lo, hi):
        if isinstance(x, RealAlgebraic) and x.kind == "quad":
            interval_ds.add(x.value.d)
    for lam in params:
        if lam.kind == "rat":
            line = pencil.line_at(lam.value)
        elif lam.kind == "quad" and (not interval_ds or lam.value.d in interval_ds):
            line = pencil.line_at(lam.value)
        else:
            continue
        out.append(line_covered_certificate(triple, line, lo, hi))
    return out
