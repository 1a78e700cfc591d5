"""Real-locus analysis of the quadric surface fibration over P^1(R).

The parameter line is treated as a circle: the point at infinity (1:0) is an
ordinary sample of the homogeneous fiber form.  Signatures are constant on
the open segments between real roots of the degenerate-fiber sextic because
the rank can only drop at its roots.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bundle import DegenerateCurveError, FormTriple, degenerate_fiber_form, fiber_form
from .quadform import Signature, gram_matrix, signature
from .realroots import RealAlgebraic, isolated_roots, rational_between_points
from .unipoly import is_squarefree_poly


INF = "inf"  # marker for the parameter (1:0)


@dataclass(frozen=True)
class Segment:
    left: object          # RealAlgebraic | INF
    right: object
    sample: tuple         # (t0, t1) exact rationals
    sig: Signature


@dataclass(frozen=True)
class SignatureProfile:
    roots: tuple                 # ascending finite RealAlgebraic roots
    has_infinity_root: bool
    segments: tuple              # Segment, in circular order starting after roots[0]

    def circle_points(self):
        pts = list(self.roots)
        if self.has_infinity_root:
            pts.append(INF)
        return pts


@dataclass(frozen=True)
class CircularInterval:
    lo: object                  # RealAlgebraic | INF
    hi: object
    through_infinity: bool

    def contains_parameter_circle(self):
        return False


@dataclass(frozen=True)
class RealTopologyReport:
    profile: SignatureProfile
    real_point_intervals: tuple
    real_line_intervals: tuple
    full_circle: bool
    component_count: int
    classification: str          # empty | disconnected(n) | three-sphere | connected-other
    pi1_surjective: bool


def signature_profile(triple: FormTriple) -> SignatureProfile:
    """Isolate the rank-drop parameters and attach one exact signature per
    open segment of the parameter circle."""
    form = degenerate_fiber_form(triple)
    f = form.dehomogenize()
    if not is_squarefree_poly(f):
        raise DegenerateCurveError("degenerate-fiber sextic is not squarefree")
    roots = isolated_roots(f)
    has_inf = form.vanishes_at_infinity()
    segments = []
    k = len(roots)

    def sig_at(t0, t1):
        return signature(fiber_form(triple, (t0, t1)))

    if k == 0:
        if not has_inf:
            sample = (Fraction(1), Fraction(0))
            segments.append(Segment(INF, INF, sample, sig_at(*sample)))
        else:
            sample = (Fraction(0), Fraction(1))
            segments.append(Segment(INF, INF, sample, sig_at(*sample)))
        return SignatureProfile(tuple(roots), has_inf, tuple(segments))

    for i in range(k - 1):
        t = rational_between_points(roots[i], roots[i + 1])
        segments.append(Segment(roots[i], roots[i + 1], (t, Fraction(1)), sig_at(t, Fraction(1))))
    if has_inf:
        hi_sample = _beyond(roots[-1], +1)
        segments.append(Segment(roots[-1], INF, (hi_sample, Fraction(1)), sig_at(hi_sample, Fraction(1))))
        lo_sample = _beyond(roots[0], -1)
        segments.append(Segment(INF, roots[0], (lo_sample, Fraction(1)), sig_at(lo_sample, Fraction(1))))
    else:
        sample = (Fraction(1), Fraction(0))
        segments.append(Segment(roots[-1], roots[0], sample, sig_at(*sample)))
    return SignatureProfile(tuple(roots), has_inf, tuple(segments))


def _beyond(root: RealAlgebraic, direction: int) -> Fraction:
    lo, hi = root.enclosure(Fraction(1, 4))
    return (hi + 1) if direction > 0 else (lo - 1)


def _merge_segments(profile: SignatureProfile, keep) -> tuple:
    """Closures of maximal circular runs of segments passing `keep`."""
    segs = profile.segments
    flags = [keep(s.sig) for s in segs]
    n = len(segs)
    if all(flags):
        return ("full",)
    if not any(flags):
        return tuple()
    out = []
    starts = [i for i in range(n) if flags[i] and not flags[(i - 1) % n]]
    for s0 in starts:
        run = [s0]
        j = s0
        while flags[(j + 1) % n]:
            j = (j + 1) % n
            run.append(j)
        wraps = any(segs[i].left is INF or segs[i].right is INF or segs[i].sample[1] == 0
                    for i in run)
        out.append(CircularInterval(segs[s0].left, segs[j].right, wraps))
    return tuple(out)


def real_point_intervals(profile: SignatureProfile):
    """Closed parameter intervals with nonempty real fibers: indefinite
    signature (both p >= 1 and q >= 1)."""
    return _merge_segments(profile, lambda s: s.indefinite())


def real_line_intervals(profile: SignatureProfile):
    """Closed parameter intervals whose fibers contain real lines: (2,2)."""
    return _merge_segments(profile, lambda s: s.pair() == (2, 2))


def cover_real_points_empty(triple: FormTriple) -> str:
    """'empty-certified' when Q1 is negative definite: r^2 = Q1 forces
    u = v = w = 0 and then r s = s^2 = 0 kills every real point of the cover."""
    sig = signature(gram_matrix(triple.q1))
    if sig.pair() == (0, 3):
        return "empty-certified"
    return "inconclusive"


def classify_real_locus(triple: FormTriple) -> RealTopologyReport:
    profile = signature_profile(triple)
    points = real_point_intervals(profile)
    lines = real_line_intervals(profile)
    full = points == ("full",)
    if not points:
        return RealTopologyReport(profile, points, lines, False, 0, "empty", False)
    if full:
        return RealTopologyReport(profile, points, lines, True, 1, "connected-other", True)
    n = len(points)
    if n >= 2:
        return RealTopologyReport(profile, points, lines, False, n, f"disconnected({n})", False)
    classification = "connected-other"
    if _three_sphere_interval(profile, points[0]):
        classification = "three-sphere"
    return RealTopologyReport(profile, points, lines, False, 1, classification, False)


def _three_sphere_interval(profile: SignatureProfile, interval: CircularInterval) -> bool:
    """Shrinking-spheres criterion: the boundary-adjacent segments are
    (1,3)/(3,1) and any middle segments are (2,2); endpoints are simple roots
    (automatic: the sextic is squarefree).  The (2,2) band is the ruled
    region between the two sphere families."""
    segs = profile.segments
    n = len(segs)
    start = next(i for i in range(n) if segs[i].left is interval.lo)
    run = []
    i = start
    while True:
        run.append(segs[i])
        if segs[i].right is interval.hi:
            break
        i = (i + 1) % n
        if len(run) > n:
            return False
    if interval.lo is INF or interval.hi is INF:
        return False
    sigs = [s.sig.pair() for s in run]
    if sigs[0] not in ((1, 3), (3, 1)) or sigs[-1] not in ((1, 3), (3, 1)):
        return False
    return all(s == (2, 2) for s in sigs[1:-1])


def profile_csv_rows(profile: SignatureProfile):
    """CSV rows (t_exact, t_approx, p, q), one per segment sample."""
    rows = []
    for seg in profile.segments:
        t0, t1 = seg.sample
        if t1 == 0:
            exact = "1/0"
            approx = "inf"
        else:
            val = Fraction(t0) / Fraction(t1)
            exact = str(val)
            approx = repr(float(val))
        rows.append((exact, approx, seg.sig.positives, seg.sig.negatives))
    return rows
