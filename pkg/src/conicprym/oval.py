"""Real connected components of plane quartics that are quadratic in the
squares u^2, v^2, w^2.

Such a quartic is G(u^2, v^2, w^2) for a ternary quadratic form G, so its
real locus is the 4:1 unfolding of the arc of the conic V(G) where a
representative has all coordinates >= 0.  The components are counted exactly:

  * the conic's coordinate sections cut its real circle into arcs,
  * each arc is tested for an all-same-sign pattern at an exact interior
    sample,
  * branches [+-sqrt(x) : +-sqrt(y) : +-sqrt(z)] over each maximal good chain
    are glued at every cut point whose vanishing coordinate folds them.

All points involved are rational or quadratic irrationals, so every sign and
ordering decision is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .quadext import QuadExt, scalar_is_zero, scalar_sign
from .quadform import SymQuadraticForm, Signature, diagonalize, signature
from .realroots import RealAlgebraic, rational_between_points
from .ternary import TernaryForm


class OvalDomainError(ValueError):
    pass


@dataclass(frozen=True)
class ConicCutPoint:
    coords: tuple          # three entries, Fraction or QuadExt, exact
    vanishing: tuple       # indices with coordinate exactly zero


@dataclass(frozen=True)
class OvalArc:
    left: ConicCutPoint
    right: ConicCutPoint
    sample: tuple
    pattern: tuple         # signs of (x, y, z) at the sample
    good: bool


@dataclass(frozen=True)
class OvalReport:
    components: int
    conic_signature: tuple
    cut_points: tuple
    arcs: tuple
    chains: tuple          # tuples of arc indices forming maximal good chains
    note: str = ""


def squares_quadratic_form(quartic: TernaryForm) -> SymQuadraticForm:
    """The quadratic form G with quartic = G(u^2, v^2, w^2)."""
    if quartic.degree != 4:
        raise OvalDomainError("need a quartic")
    table = {
        (4, 0, 0): (0, 0), (0, 4, 0): (1, 1), (0, 0, 4): (2, 2),
        (2, 2, 0): (0, 1), (2, 0, 2): (0, 2), (0, 2, 2): (1, 2),
    }
    rows = [[Fraction(0)] * 3 for _ in range(3)]
    for mono, c in quartic.coeffs.items():
        if mono not in table:
            raise OvalDomainError(f"monomial {mono} has an odd exponent")
        i, j = table[mono]
        if i == j:
            rows[i][i] = Fraction(c)
        else:
            rows[i][j] = Fraction(c) / 2
            rows[j][i] = Fraction(c) / 2
    return SymQuadraticForm(rows)


def diagonal_quartic_oval_report(quartic: TernaryForm) -> OvalReport:
    g = squares_quadratic_form(quartic)
    sig = signature(g)
    if sig.pair() in ((3, 0), (0, 3)):
        return OvalReport(0, sig.pair(), (), (), (), note="definite in the squares")
    if sig.rank < 3:
        raise OvalDomainError(f"degenerate conic (rank {sig.rank}) is out of scope")

    interior = _interior_point(g, sig)
    cuts = _cut_points(g)
    if not cuts:
        sample = _any_conic_point(g, interior)
        pattern = tuple(_coord_sign(c) for c in sample)
        good = len({s for s in pattern}) == 1
        arc = OvalArc(None, None, sample, pattern, good)
        return OvalReport(4 if good else 0, sig.pair(), (), (arc,), ((0,),) if good else (),
                          note="no coordinate sections; constant sign pattern")

    ordered = _order_on_circle(g, interior, cuts)
    arcs = []
    n = len(ordered)
    for i in range(n):
        left = ordered[i]
        right = ordered[(i + 1) % n]
        sample = _sample_between(g, interior, i, ordered)
        pattern = tuple(_coord_sign(c) for c in sample)
        if 0 in pattern:
            raise OvalDomainError("arc sample hit a coordinate section; degenerate configuration")
        good = len(set(pattern)) == 1
        arcs.append(OvalArc(left, right, sample, pattern, good))

    components, chains = _count_components(arcs, ordered)
    return OvalReport(components, sig.pair(), tuple(ordered), tuple(arcs), tuple(chains))


# -- conic plumbing -------------------------------------------------------------


def _interior_point(g: SymQuadraticForm, sig: Signature):
    """Rational point with every line through it meeting the conic twice:
    the diagonalizing basis vector of the minority eigenvalue sign."""
    diag, trans = diagonalize(g)
    want = -1 if sig.pair() == (2, 1) else 1
    for j, d in enumerate(diag):
        if scalar_sign(d) == want:
            col = [trans[i][j] for i in range(3)]
            den = 1
            for c in col:
                den = den * c.denominator // gcd(den, c.denominator)
            return tuple(c * den for c in col)
    raise OvalDomainError("no interior direction found")


def _polar_form(g: SymQuadraticForm, o):
    """Coefficients of the polar linear form x -> B(o, x)."""
    return tuple(sum((g.rows[i][j] * o[i] for i in range(3)), Fraction(0)) for j in range(3))


def _lin(coeffs, pt):
    total = None
    for c, x in zip(coeffs, pt):
        term = c * x
        total = term if total is None else total + term
    return total


def _vanishing_forms(o):
    """Two independent rational linear forms vanishing at o."""
    cands = [(o[1], -o[0], Fraction(0)), (o[2], Fraction(0), -o[0]), (Fraction(0), o[2], -o[1])]
    out = []
    for m in cands:
        if all(scalar_is_zero(c) for c in m):
            continue
        if not out:
            out.append(m)
            continue
        a = out[0]
        indep = any(a[i] * m[j] - a[j] * m[i] != 0 for i in range(3) for j in range(3))
        if indep:
            out.append(m)
            break
    if len(out) < 2:
        raise OvalDomainError("could not build chart forms")
    return out[0], out[1]


def _cut_points(g: SymQuadraticForm):
    """All real conic points with a zero coordinate, exact, deduplicated."""
    pts = []
    for var in range(3):
        others = [i for i in range(3) if i != var]
        j, k = others
        a = g.rows[j][j]
        b = g.rows[j][k] * 2
        c = g.rows[k][k]
        for (xj, xk) in _binary_quadratic_roots(a, b, c):
            coords = [None, None, None]
            coords[var] = _zero_like(xj)
            coords[j] = xj
            coords[k] = xk
            pts.append(tuple(coords))
    out = []
    for p in pts:
        if not any(_proj_eq(p, q) for q in out):
            out.append(p)
    return [ConicCutPoint(p, tuple(i for i in range(3) if _is_exact_zero(p[i]))) for p in out]


def _zero_like(x):
    return QuadExt(0, 0, x.d) if isinstance(x, QuadExt) else Fraction(0)


def _is_exact_zero(x):
    return x.is_zero() if isinstance(x, QuadExt) else x == 0


def _coord_sign(x):
    if isinstance(x, QuadExt):
        return x.sign()
    return (x > 0) - (x < 0)


def _binary_quadratic_roots(a, b, c):
    """Real projective roots (xj : xk) of a xj^2 + b xj xk + c xk^2, exact."""
    from .bundle import _sqrt_as_quadext

    if scalar_is_zero(a) and scalar_is_zero(b) and scalar_is_zero(c):
        raise OvalDomainError("conic contains a coordinate line")
    if scalar_is_zero(a):
        roots = [(Fraction(1), Fraction(0))]
        if not scalar_is_zero(b):
            # b xj xk + c xk^2: second root xj = -c/b
            roots.append((Fraction(-c) / Fraction(b), Fraction(1)))
        return roots
    disc = Fraction(b) * b - 4 * Fraction(a) * c
    if disc < 0:
        return []
    if disc == 0:
        return [(-Fraction(b) / (2 * Fraction(a)), Fraction(1))]
    root = _sqrt_as_quadext(disc)
    if root is None:
        raise OvalDomainError("coordinate-section discriminant has an unmanageable square part")
    if root.b == 0:
        r = root.a
        return [((-b + r) / (2 * a), Fraction(1)), ((-b - r) / (2 * a), Fraction(1))]
    return [((QuadExt.of(Fraction(-b), root.d) + root) / (2 * a), QuadExt.of(1, root.d)),
            ((QuadExt.of(Fraction(-b), root.d) - root) / (2 * a), QuadExt.of(1, root.d))]


def _proj_eq(p, q) -> bool:
    """Projective equality for triples whose entries may live in different
    quadratic fields; only rational-vs-anything collisions can occur away
    from the coordinate vertices."""
    p_rat = all(not isinstance(c, QuadExt) or c.b == 0 for c in p)
    q_rat = all(not isinstance(c, QuadExt) or c.b == 0 for c in q)
    if not (p_rat or q_rat):
        pd = {c.d for c in p if isinstance(c, QuadExt) and c.b != 0}
        qd = {c.d for c in q if isinstance(c, QuadExt) and c.b != 0}
        if pd != qd:
            return False
    try:
        for i in range(3):
            for j in range(3):
                lhs = p[i] * q[j]
                rhs = p[j] * q[i]
                if not scalar_is_zero(lhs - rhs):
                    return False
        return True
    except TypeError:
        return False  # mixed extensions: genuinely different points


def _any_conic_point(g: SymQuadraticForm, interior):
    """Some real conic point, exact: shoot rational lines through the
    interior point until one square root suffices."""
    for direction in ((Fraction(1), Fraction(0), Fraction(0)),
                      (Fraction(0), Fraction(1), Fraction(0)),
                      (Fraction(0), Fraction(0), Fraction(1)),
                      (Fraction(1), Fraction(1), Fraction(0))):
        pts = _line_conic_points(g, interior, direction)
        if pts:
            return pts[0]
    raise OvalDomainError("failed to find a real conic point")


def _line_conic_points(g: SymQuadraticForm, o, v):
    """Conic points on the line o + tau*v, exact in one square root."""
    from .bundle import _sqrt_as_quadext

    a = g.eval(v)
    b = 2 * _bilinear(g, o, v)
    c = g.eval(o)
    if scalar_is_zero(a):
        if scalar_is_zero(b):
            return []
        tau = -Fraction(c) / Fraction(b)
        return [tuple(oo + tau * vv for oo, vv in zip(o, v))]
    disc = b * b - 4 * a * c
    if disc < 0:
        return []
    root = _sqrt_as_quadext(Fraction(disc))
    if root is None:
        return []
    out = []
    if root.b == 0:
        taus = [(-b + root.a) / (2 * a), (-b - root.a) / (2 * a)]
    else:
        taus = [(QuadExt.of(Fraction(-b), root.d) + root) / (2 * a),
                (QuadExt.of(Fraction(-b), root.d) - root) / (2 * a)]
    for tau in taus:
        out.append(tuple(tau * vv + oo for oo, vv in zip(o, v)))
    return out


def _bilinear(g: SymQuadraticForm, x, y):
    total = Fraction(0)
    for i in range(3):
        for j in range(3):
            total = total + x[i] * g.rows[i][j] * y[j]
    return total


# -- circular order and sampling ---------------------------------------------------


def _chart(g, interior, pt):
    """(side bucket value, slope RealAlgebraic or None) of a conic point in the
    pencil chart through the interior point."""
    l0 = _polar_form(g, interior)
    m1, m2 = _vanishing_forms(interior)
    den = _lin(l0, pt)
    x = _lin(m1, pt)
    y = _lin(m2, pt)
    sden = _coord_sign(den) if not isinstance(den, QuadExt) else den.sign()
    sx = (_coord_sign(x) if not isinstance(x, QuadExt) else x.sign()) * sden
    sy = (_coord_sign(y) if not isinstance(y, QuadExt) else y.sign()) * sden
    if sx == 0:
        return (1, None) if sy > 0 else (3, None)
    slope = y / x if isinstance(x, QuadExt) or isinstance(y, QuadExt) else Fraction(y) / Fraction(x)
    bucket = 0 if sx > 0 else 2
    return (bucket, RealAlgebraic.wrap(slope))


def _order_on_circle(g, interior, cuts):
    keyed = []
    for c in cuts:
        bucket, slope = _chart(g, interior, c.coords)
        keyed.append((bucket, slope, c))
    def sort_key(item):
        return item[0]
    keyed.sort(key=lambda it: it[0])
    # sort inside slope buckets by exact comparison
    out = []
    for bucket in (0, 1, 2, 3):
        group = [it for it in keyed if it[0] == bucket]
        if bucket in (0, 2):
            group.sort(key=_SlopeKey)
        out.extend(group)
    return [it[2] for it in out]


class _SlopeKey:
    def __init__(self, item):
        self.slope = item[1]

    def __lt__(self, other):
        return self.slope.cmp(other.slope) < 0


def _sample_between(g, interior, idx, ordered):
    """Exact conic point strictly inside the arc from ordered[idx] to
    ordered[idx+1] (circularly)."""
    n = len(ordered)
    a = ordered[idx]
    b = ordered[(idx + 1) % n]
    ka = _chart(g, interior, a.coords)
    kb = _chart(g, interior, b.coords)
    side, slope = _direction_between(ka, kb)
    m1, m2 = _vanishing_forms(interior)
    l0 = _polar_form(g, interior)
    v = _solve_direction(l0, m1, m2, side, slope)
    pts = _line_conic_points(g, interior, v)
    for p in pts:
        kp = _chart(g, interior, p)
        if _circ_between(ka, kp, kb):
            return p
    raise OvalDomainError("no conic sample found inside arc")


def _circ_between(ka, kp, kb) -> bool:
    """Is kp strictly between ka and kb going circularly forward?"""
    def less(k1, k2):
        if k1[0] != k2[0]:
            return k1[0] < k2[0]
        if k1[1] is None or k2[1] is None:
            return False
        return k1[1].cmp(k2[1]) < 0
    def eq(k1, k2):
        if k1[0] != k2[0]:
            return False
        if k1[1] is None and k2[1] is None:
            return True
        if k1[1] is None or k2[1] is None:
            return False
        return k1[1].cmp(k2[1]) == 0
    if eq(ka, kb):
        return not eq(kp, ka)
    if less(ka, kb):
        return less(ka, kp) and less(kp, kb)
    return less(ka, kp) or less(kp, kb)


def _direction_between(ka, kb):
    """(side sign, rational slope) for a pencil line pointing strictly between
    the two circular keys."""
    ba, sa = ka
    bb, sb = kb
    if ba == bb and sa is not None and sb is not None and sa.cmp(sb) < 0:
        s = rational_between_points(sa, sb)
        return (1 if ba == 0 else -1), s
    # otherwise the arc crosses bucket boundaries: step just past ka
    if sa is not None:
        lo, hi = sa.enclosure(Fraction(1, 4))
        return (1 if ba == 0 else -1), hi + 1
    # ka is a vertical point: enter the next slope bucket from its -infinity end
    nb = (ba + 1) % 4
    if sb is not None and bb == nb:
        lo, _ = sb.enclosure(Fraction(1, 4))
        return (1 if nb == 0 else -1), lo - 1
    return (1 if nb == 0 else -1), Fraction(0)


def _solve_direction(l0, m1, m2, side, slope):
    """Rational vector v with l0(v) = 0, m1(v) = side, m2(v) = side*slope."""
    if slope is None:
        # vertical direction: m1(v) = 0, m2(v) = side
        target = (Fraction(0), Fraction(0), Fraction(side))
    else:
        target = (Fraction(0), Fraction(side), Fraction(side) * slope)
    rows = [list(l0), list(m1), list(m2)]
    return _solve3(rows, target)


def _solve3(rows, rhs):
    from .linalg import rank_and_det

    a = [list(r) + [v] for r, v in zip(rows, rhs)]
    n = 3
    for col in range(n):
        piv = next((i for i in range(col, n) if not scalar_is_zero(a[i][col])), None)
        if piv is None:
            raise OvalDomainError("singular chart system")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for i in range(n):
            if i != col and not scalar_is_zero(a[i][col]):
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(a[i][3] for i in range(n))


# -- component counting -------------------------------------------------------------


_CLASSES = ((1, 1), (1, -1), (-1, 1), (-1, -1))  # (sign_y, sign_z) with sign_x = +


def _flip_edges(vanishing):
    """Gluing pairs on the four sign classes for a cut point."""
    edges = []
    for var in vanishing:
        for cls in _CLASSES:
            edges.append((cls, _apply_flip(cls, var)))
    return edges


def _apply_flip(cls, var):
    ey, ez = cls
    if var == 0:
        # global renormalization: (-,ey,ez) ~ (+,-ey,-ez)
        return (-ey, -ez)
    if var == 1:
        return (-ey, ez)
    return (ey, -ez)


def _count_components(arcs, ordered):
    n = len(arcs)
    flags = [a.good for a in arcs]
    if not any(flags):
        return 0, ()
    if all(flags):
        chains = (tuple(range(n)),)
        events = [c.vanishing for c in ordered]
        return _graph_components(events), chains
    total = 0
    chains = []
    starts = [i for i in range(n) if flags[i] and not flags[(i - 1) % n]]
    for s0 in starts:
        run = [s0]
        j = s0
        while flags[(j + 1) % n]:
            j = (j + 1) % n
            run.append(j)
        chains.append(tuple(run))
        # events: boundary cut points of the chain plus interior ones
        cut_idxs = {run[0]} | {(i + 1) % n for i in run}
        events = [ordered[i].vanishing for i in sorted(cut_idxs)]
        total += _graph_components(events)
    return total, tuple(chains)


def _graph_components(events):
    parent = {c: c for c in _CLASSES}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for vanishing in events:
        for a, b in _flip_edges(vanishing):
            union(a, b)
    return len({find(c) for c in _CLASSES})
