"""Local solvability of the genus-2 curve y^2 = f(t) over R and over Q_p.

The p-adic search walks the residue tree over both charts (t and 1/t),
pruning each branch by valuation parity and the quadratic-residue class of
the unit part.  A branch at depth k with v_p(f(a)) < k is decided outright;
one with v_p(f(a)) > 2 v_p(f'(a)) has a Hensel root nearby (a Weierstrass
point over Q_p).  Surviving branches resolve by depth v_p(disc f) + 2: at
that depth the nearest p-adic root is unique and Hensel applies, so 'unknown'
can only mean the caller budget was below that bound.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bundle import Genus2Curve
from .realroots import isolated_roots, sign_at
from .unipoly import UniPoly, discriminant, to_int_coeffs


@dataclass(frozen=True)
class LocalVerdict:
    place: str                     # "R" or the prime as a string
    verdict: str                   # solvable | insolvable | unknown
    witness: Optional[dict] = None
    depth_used: int = 0
    required_depth: int = 0
    detail: str = ""

    def solvable(self):
        return self.verdict == "solvable"


def _int_model(f: UniPoly):
    """Integer coefficients of lambda^2 * f for the smallest clearing lambda;
    scaling by a square keeps the square class of every value."""
    ints, den = to_int_coeffs(f)
    # to_int_coeffs multiplies by den; multiply once more to make it den^2
    return [c * den for c in ints]


def real_points_exist(curve: Genus2Curve) -> LocalVerdict:
    """Solvable over R iff f takes a nonnegative value: odd degree, positive
    leading coefficient, or a real Weierstrass root."""
    f = curve.f
    if f.degree() % 2 == 1:
        t = _witness_positive(f, want_any=True)
        return LocalVerdict("R", "solvable", witness={"t": str(t), "reason": "odd degree"})
    from .quadext import scalar_sign
    if scalar_sign(f.lc()) > 0:
        t = _witness_positive(f, want_any=False)
        return LocalVerdict("R", "solvable",
                            witness={"t": str(t), "reason": "positive leading coefficient"})
    roots = isolated_roots(f)
    if roots:
        return LocalVerdict("R", "solvable",
                            witness={"weierstrass_t": _point_repr(roots[0]),
                                     "reason": "real Weierstrass point"})
    return LocalVerdict("R", "insolvable", detail="f is negative on all of R")


def _witness_positive(f: UniPoly, want_any: bool) -> Fraction:
    t = Fraction(1)
    for _ in range(4000):
        if sign_at(f, t) > 0:
            return t
        if want_any and sign_at(f, -t) > 0:
            return -t
        t *= 2
    raise RuntimeError("no positive value found; inconsistent sign analysis")


def _point_repr(r):
    from .quadext import format_quadext
    if r.kind == "rat":
        return str(r.value)
    if r.kind == "quad":
        return format_quadext(r.value)
    return {"witness": [str(c) for c in r.witness.coeffs], "lo": str(r.lo), "hi": str(r.hi)}


def weierstrass_real(curve: Genus2Curve):
    """All real roots of f, exact (quadratic form when the sextic allows it)."""
    return isolated_roots(curve.f)


def _vp(n: int, p: int) -> int:
    if n == 0:
        return 10 ** 9
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _is_qr(u: int, p: int) -> bool:
    return pow(u % p, (p - 1) // 2, p) == 1


def _poly_disc_valuation(cs, p: int) -> int:
    f = UniPoly.from_ints(cs)
    d = discriminant(f)
    num = d.numerator
    return _vp(abs(num), p) - _vp(d.denominator, p)


def qp_points_exist(curve: Genus2Curve, p: int, depth_budget: int = 0) -> LocalVerdict:
    """Decide whether y^2 = f(t) has a Q_p point (including infinity)."""
    if p == 2 or p < 2:
        raise ValueError("only odd primes are supported")
    from .unipoly import is_squarefree_poly
    if not is_squarefree_poly(curve.f):
        raise ValueError("qp_points_exist needs a squarefree model")
    f_ints = _int_model(curve.f)
    n = 6
    charts = []
    # chart 1: t in Z_p
    charts.append(("t", list(f_ints) + [0] * (n + 1 - len(f_ints))))
    # chart 2: s = 1/t, y' = y / t^3: y'^2 = s^6 f(1/s)
    rev = list(reversed(list(f_ints) + [0] * (n + 1 - len(f_ints))))
    charts.append(("1/t", rev))

    overall_depth = 0
    required = 0
    tree_notes = []
    for name, cs in charts:
        while cs and cs[-1] == 0:
            cs.pop()
        need = max(1, _poly_disc_valuation(cs, p) + 2)
        required = max(required, need)
        limit = depth_budget if depth_budget > 0 else need
        res = _search_chart(cs, p, limit)
        overall_depth = max(overall_depth, res["depth"])
        if res["verdict"] == "solvable":
            witness = dict(res["witness"])
            witness["chart"] = name
            return LocalVerdict(str(p), "solvable", witness=witness,
                                depth_used=res["depth"], required_depth=need)
        if res["verdict"] == "unknown":
            return LocalVerdict(str(p), "unknown", depth_used=res["depth"],
                                required_depth=need,
                                detail=f"depth budget {limit} below required bound {need}")
        tree_notes.append({"chart": name, "pruned_branches": res["pruned"]})
    return LocalVerdict(str(p), "insolvable", depth_used=overall_depth,
                        required_depth=required,
                        detail=f"residue tree exhausted: {tree_notes}")


def _search_chart(cs, p: int, depth_limit: int):
    """Residue-tree search for t in Z_p with f(t) a nonzero square or zero."""
    deriv = [i * c for i, c in enumerate(cs)][1:]
    pruned = 0
    max_depth = 0
    stack = [(0, 1, 0)]  # (residue a, modulus p^k, depth k)
    unknown = False
    while stack:
        a, mod, k = stack.pop()
        max_depth = max(max_depth, k)
        val = _eval_int(cs, a)
        if val == 0:
            return {"verdict": "solvable", "depth": k,
                    "witness": {"t": str(a), "modulus": f"{p}^{k}", "y": "0",
                                "kind": "rational Weierstrass point"},
                    "pruned": pruned}
        m = _vp(abs(val), p)
        if m < k:
            # the valuation is constant on this branch
            if m % 2 == 0 and _is_qr(val // p ** m, p):
                return {"verdict": "solvable", "depth": k,
                        "witness": {"t": str(a), "modulus": f"{p}^{k}",
                                    "valuation": m,
                                    "unit_residue": (val // p ** m) % p,
                                    "kind": "unit-square value"},
                        "pruned": pruned}
            pruned += 1
            continue
        dval = _eval_int(deriv, a)
        e = _vp(abs(dval), p) if dval != 0 else 10 ** 9
        if m > 2 * e:
            return {"verdict": "solvable", "depth": k,
                    "witness": {"t": str(a), "modulus": f"{p}^{k}",
                                "kind": "Hensel root of f (p-adic Weierstrass point)",
                                "f_valuation": m, "fprime_valuation": e},
                    "pruned": pruned}
        if k >= depth_limit:
            unknown = True
            continue
        for j in range(p):
            stack.append((a + j * mod, mod * p, k + 1))
    if unknown:
        return {"verdict": "unknown", "depth": max_depth, "pruned": pruned}
    return {"verdict": "insolvable", "depth": max_depth, "pruned": pruned}


def _eval_int(cs, a: int) -> int:
    acc = 0
    for c in reversed(cs):
        acc = acc * a + c
    return acc


def verify_local_witness(curve: Genus2Curve, verdict: LocalVerdict) -> bool:
    """Re-verify a solvable verdict from its witness data."""
    if verdict.verdict != "solvable":
        return False
    w = verdict.witness or {}
    if verdict.place == "R":
        if "t" in w:
            return sign_at(curve.f, Fraction(w["t"])) > 0
        return "weierstrass_t" in w
    p = int(verdict.place)
    f_ints = _int_model(curve.f)
    n = 6
    padded = list(f_ints) + [0] * (n + 1 - len(f_ints))
    cs = padded if w.get("chart") == "t" else list(reversed(padded))
    while cs and cs[-1] == 0:
        cs.pop()
    a = int(w["t"])
    val = _eval_int(cs, a)
    kind = w.get("kind", "")
    if kind == "rational Weierstrass point":
        return val == 0
    if kind.startswith("Hensel"):
        deriv = [i * c for i, c in enumerate(cs)][1:]
        dval = _eval_int(deriv, a)
        m = _vp(abs(val), p) if val else 10 ** 9
        e = _vp(abs(dval), p) if dval else 10 ** 9
        return val == 0 or m > 2 * e
    if val == 0:
        return True
    m = _vp(abs(val), p)
    return m % 2 == 0 and _is_qr(val // p ** m, p)
