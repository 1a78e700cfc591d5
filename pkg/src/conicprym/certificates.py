"""Divisor certificates on the double cover: on-curve verification over
Q(sqrt d), Galois stability, pushforward matching against a line section of
the quartic, span rank, and the parity comparison of two certificates.

Certificate points keep the projective representatives they were given;
normalization happens only inside equality tests, so determinant evidence is
reproducible from the stated coordinates.
"""

from dataclasses import dataclass
from fractions import Fraction

from .bundle import CoverPresentation
from .linalg import rank_and_det
from .quadext import QuadExt, parse_quadext, scalar_is_zero
from .ternary import TernaryForm


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class QuadFieldPoint:
    coords: tuple  # five QuadExt sharing one d
    d: int

    def __post_init__(self):
        if len(self.coords) != 5:
            raise CertificateError("points live in P^4: five coordinates")
        if all(c.is_zero() for c in self.coords):
            raise CertificateError("zero vector is not a projective point")
        if any(c.d != self.d for c in self.coords):
            raise CertificateError("inconsistent field markers in one point")

    @classmethod
    def parse(cls, strings, d: int) -> "QuadFieldPoint":
        return cls(tuple(parse_quadext(s, d) for s in strings), d)

    def involution(self) -> "QuadFieldPoint":
        u, v, w, r, s = self.coords
        return QuadFieldPoint((u, v, w, -r, -s), self.d)

    def conjugate(self) -> "QuadFieldPoint":
        return QuadFieldPoint(tuple(c.conjugate() for c in self.coords), self.d)

    def image_in_plane(self):
        return self.coords[:3]

    def normalized(self):
        for c in self.coords:
            if not c.is_zero():
                return tuple(x / c for x in self.coords)
        raise CertificateError("zero point")

    def proj_eq(self, other: "QuadFieldPoint") -> bool:
        return self.normalized() == other.normalized()


def apply_involution(p: QuadFieldPoint) -> QuadFieldPoint:
    """Deck transformation of the cover: negate the square-root coordinates."""
    return p.involution()


@dataclass(frozen=True)
class DivisorCertificate:
    points: tuple          # four QuadFieldPoint
    d: int
    line: TernaryForm      # linear form cutting the claimed pushforward

    def __post_init__(self):
        if len(self.points) != 4:
            raise CertificateError("a certificate carries exactly four points")
        if any(p.d != self.d for p in self.points):
            raise CertificateError("certificate points must share the field")
        if self.line.degree != 1 or self.line.is_zero():
            raise CertificateError("claimed line must be a nonzero linear form")

    @classmethod
    def from_json_dict(cls, doc) -> "DivisorCertificate":
        d = int(doc["d"])
        pts = tuple(QuadFieldPoint.parse(p, d) for p in doc["points"])
        line_doc = doc["line"]
        line = TernaryForm(1, {
            (1, 0, 0): _parse_line_coeff(line_doc.get("u", "0")),
            (0, 1, 0): _parse_line_coeff(line_doc.get("v", "0")),
            (0, 0, 1): _parse_line_coeff(line_doc.get("w", "0")),
        })
        return cls(pts, d, line)


def _parse_line_coeff(s):
    from .quadext import parse_rational
    return parse_rational(str(s))


def verify_on_cover(cert: DivisorCertificate, pres: CoverPresentation):
    """(all_zero, residues): evaluates the three cover quadrics at every point."""
    residues = []
    ok = True
    for p in cert.points:
        res = pres.residues_at(p.coords)
        residues.append(res)
        if any(not scalar_is_zero(x) for x in res):
            ok = False
    return ok, residues


def verify_galois_stable(cert: DivisorCertificate) -> bool:
    """Conjugation a + b sqrt(d) -> a - b sqrt(d) must permute the multiset."""
    remaining = list(cert.points)
    for p in cert.points:
        q = p.conjugate()
        for i, r in enumerate(remaining):
            if q.proj_eq(r):
                remaining.pop(i)
                break
        else:
            return False
    return not remaining


def line_parametrization(line: TernaryForm):
    """Two independent rational points spanning V(line)."""
    a = line.coeff((1, 0, 0))
    b = line.coeff((0, 1, 0))
    c = line.coeff((0, 0, 1))
    if not scalar_is_zero(c):
        return (c, Fraction(0), -a), (Fraction(0), c, -b)
    if not scalar_is_zero(b):
        return (b, -a, Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))
    return (Fraction(0), Fraction(1), Fraction(0)), (Fraction(0), Fraction(0), Fraction(1))


def pushforward_line_match(cert: DivisorCertificate, quartic: TernaryForm) -> bool:
    """The images [u:v:w] of the four points must equal, with multiplicity,
    the intersection divisor of the quartic with the claimed line."""
    p, q = line_parametrization(cert.line)
    g = quartic.restrict_to_parametrized_line(p, q)  # sum g_i s^(4-i) t^i
    if all(scalar_is_zero(c) for c in g):
        raise CertificateError("claimed line lies inside the quartic")
    groups = []  # (representative point, count)
    for pt in cert.points:
        img = pt.image_in_plane()
        if not scalar_is_zero(cert.line.eval(img)):
            return False
        for rec in groups:
            if _proj3_eq(rec[0], img):
                rec[1] += 1
                break
        else:
            groups.append([img, 1])
    total = 0
    for img, count in groups:
        mult = _root_multiplicity(g, _line_parameter(p, q, img, cert.d))
        if mult != count:
            return False
        total += count
    return total == 4


def _proj3_eq(a, b) -> bool:
    for i in range(3):
        for j in range(3):
            if not scalar_is_zero(a[i] * b[j] - a[j] * b[i]):
                return False
    return True


def _line_parameter(p, q, img, d):
    """(sigma : tau) with sigma*p + tau*q proportional to img."""
    for i in range(3):
        for j in range(i + 1, 3):
            det = p[i] * q[j] - p[j] * q[i]
            if not scalar_is_zero(det):
                sigma = img[i] * q[j] - img[j] * q[i]
                tau = p[i] * img[j] - p[j] * img[i]
                cand = tuple(sigma * pc + tau * qc for pc, qc in zip(p, q))
                if not _proj3_eq(cand, img):
                    raise CertificateError("certificate image does not lie on the claimed line")
                return (QuadExt.of(sigma, d), QuadExt.of(tau, d))
    raise CertificateError("degenerate line parametrization")


def _root_multiplicity(g, param) -> int:
    """Multiplicity of the projective parameter in the binary form
    sum g_i s^(n-i) t^i."""
    sigma, tau = param
    n = len(g) - 1
    if tau.is_zero():
        # parameter (1:0): multiplicity = index of first nonzero from the t^0 side
        coeffs = list(g)
        mult = 0
        for c in coeffs:
            if scalar_is_zero(c):
                mult += 1
            else:
                break
        return mult
    t0 = sigma / tau
    # dehomogenize at s = t0: h(x) = sum g_i x^(n-i) evaluated around x = t0
    from .unipoly import UniPoly
    h = UniPoly(list(reversed([QuadExt.of(c, t0.d) for c in g])))
    mult = 0
    while not h.is_zero() and scalar_is_zero(h.eval(t0)):
        mult += 1
        h = h.derivative()
    return mult


@dataclass(frozen=True)
class ComponentVerdict:
    label: str             # "S1" (spans a 2-plane) or "S1-tilde" (spans a 3-plane)
    rank: int
    minors: dict           # dropped-column index -> 4x4 determinant


def span_rank_verdict(cert: DivisorCertificate) -> ComponentVerdict:
    """Rank of the 4x5 coordinate matrix: rank 3 means the four points are cut
    by a 2-plane (even-section component), rank 4 means they span a 3-plane."""
    rows = [list(p.coords) for p in cert.points]
    rank, _ = rank_and_det(rows)
    if rank <= 2:
        raise CertificateError("collinear certificate: span rank below 3")
    minors = {}
    for drop in range(5):
        sub = [[r[c] for c in range(5) if c != drop] for r in rows]
        _, det = rank_and_det(sub)
        minors[drop] = det
    label = "S1" if rank == 3 else "S1-tilde"
    return ComponentVerdict(label, rank, minors)


def parity_compare(cert_a: DivisorCertificate, cert_b: DivisorCertificate) -> str:
    """same-component iff the number of shared points has the parity of the
    divisor degree (four here)."""
    if not _multiset_proj3_eq([p.image_in_plane() for p in cert_a.points],
                              [p.image_in_plane() for p in cert_b.points]):
        raise CertificateError("parity comparison needs equal pushforward multisets")
    remaining = list(cert_b.points)
    shared = 0
    for p in cert_a.points:
        for i, r in enumerate(remaining):
            if p.proj_eq(r):
                shared += 1
                remaining.pop(i)
                break
    return "same-component" if (4 - shared) % 2 == 0 else "different-component"


def _multiset_proj3_eq(xs, ys) -> bool:
    if len(xs) != len(ys):
        return False
    remaining = list(ys)
    for x in xs:
        for i, y in enumerate(remaining):
            if _proj3_eq(x, y):
                remaining.pop(i)
                break
        else:
            return False
    return True
