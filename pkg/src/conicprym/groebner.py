"""Multivariate polynomials over F_p and a Buchberger engine.

Monomials are exponent tuples under graded reverse lexicographic order.
Pair selection is first-fit on the normal (minimal lcm degree) queue, with
the coprimality and chain criteria; no F4/F5.  Every ideal this package
feeds in has few variables and generators of degree <= 4, so plain
Buchberger with content-free F_p coefficients is the right size.
"""

from itertools import combinations


class ResourceError(RuntimeError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def grevlex_key(mono):
    return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class FpPoly:
    """Sparse polynomial over F_p: dict mono -> nonzero int in [1, p)."""

    __slots__ = ("p", "nvars", "terms", "_lm")

    def __init__(self, p, nvars, terms):
        self.p = p
        self.nvars = nvars
        self.terms = {m: c % p for m, c in terms.items() if c % p}
        self._lm = max(self.terms, key=grevlex_key) if self.terms else None

    def is_zero(self):
        return not self.terms

    def lm(self):
        return self._lm

    def lc(self):
        return self.terms[self._lm]

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def sub_scaled(self, other, coeff, mono):
        """self - coeff * x^mono * other."""
        p = self.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            key = mono_mul(m, mono)
            val = (out.get(key, 0) - coeff * c) % p
            if val:
                out[key] = val
            else:
                out.pop(key, None)
        return FpPoly(p, self.nvars, out)

    def monic(self):
        if self.is_zero():
            return self
        inv = pow(self.lc(), self.p - 2, self.p)
        return FpPoly(self.p, self.nvars, {m: c * inv for m, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, FpPoly) and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            parts.append(f"{self.terms[m]}*x^{m}")
        return " + ".join(parts)


def reduce_full(f: FpPoly, basis) -> FpPoly:
    """Full normal form of f modulo basis (list of monic FpPoly)."""
    p = f.p
    work = dict(f.terms)
    out = {}
    lead = [(g.lm(), g) for g in basis if not g.is_zero()]
    while work:
        m = max(work, key=grevlex_key)
        c = work.pop(m)
        for lm, g in lead:
            if mono_divides(lm, m):
                shift = mono_div(m, lm)
                for gm, gc in g.terms.items():
                    key = mono_mul(gm, shift)
                    if key == m:
                        continue
                    val = (work.get(key, 0) - c * gc) % p
                    if val:
                        work[key] = val
                    else:
                        work.pop(key, None)
                break
        else:
            out[m] = c
    return FpPoly(p, f.nvars, out)


def s_poly(f: FpPoly, g: FpPoly) -> FpPoly:
    p = f.p
    lcm = mono_lcm(f.lm(), g.lm())
    mf = mono_div(lcm, f.lm())
    mg = mono_div(lcm, g.lm())
    inv_f = pow(f.lc(), p - 2, p)
    inv_g = pow(g.lc(), p - 2, p)
    terms = {}
    for m, c in f.terms.items():
        key = mono_mul(m, mf)
        terms[key] = (terms.get(key, 0) + c * inv_f) % p
    for m, c in g.terms.items():
        key = mono_mul(m, mg)
        terms[key] = (terms.get(key, 0) - c * inv_g) % p
    return FpPoly(p, f.nvars, terms)


def buchberger(gens, step_budget=200000):
    """Reduced Groebner basis under grevlex for nonzero generators over F_p."""
    import heapq

    basis = [g.monic() for g in gens if not g.is_zero()]
    if not basis:
        return []
    # inter-reduce the input first; keeps the pair queue small
    basis = _interreduce(basis)
    heap = []
    for i, j in combinations(range(len(basis)), 2):
        lcm = mono_lcm(basis[i].lm(), basis[j].lm())
        heapq.heappush(heap, (sum(lcm), i, j))
    done = set()
    steps = 0
    while heap:
        _, i, j = heapq.heappop(heap)
        done.add((i, j))
        fi, fj = basis[i], basis[j]
        lcm = mono_lcm(fi.lm(), fj.lm())
        if lcm == mono_mul(fi.lm(), fj.lm()):
            continue  # coprime leading monomials
        if _chain_criterion(basis, i, j, lcm, done):
            continue
        steps += 1
        if steps > step_budget:
            raise ResourceError("Buchberger step budget exceeded")
        r = reduce_full(s_poly(fi, fj), basis)
        if r.is_zero():
            continue
        r = r.monic()
        k = len(basis)
        basis.append(r)
        for idx in range(k):
            lcm = mono_lcm(basis[idx].lm(), r.lm())
            heapq.heappush(heap, (sum(lcm), idx, k))
    return _interreduce(basis)


def _chain_criterion(basis, i, j, lcm, done):
    for k in range(len(basis)):
        if k in (i, j):
            continue
        if mono_divides(basis[k].lm(), lcm):
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                return True
    return False


def _interreduce(basis):
    basis = [g for g in basis if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        keep = []
        for idx, g in enumerate(basis):
            others = keep + basis[idx + 1:]
            r = reduce_full(g, others) if others else g
            if r.is_zero():
                changed = True
                continue
            r = r.monic()
            if r != g:
                changed = True
            keep.append(r)
        basis = keep
    return sorted(basis, key=lambda g: grevlex_key(g.lm()))


class PrimeFieldIdeal:
    """Ideal in F_p[x_0..x_{n-1}] with an optional cached reduced basis."""

    def __init__(self, p: int, nvars: int, generators, projective: bool = False):
        if p < 3 or p % 2 == 0 or not _is_prime(p):
            raise ValueError("p must be an odd prime")
        self.p = p
        self.nvars = nvars
        self.generators = [g for g in generators if not g.is_zero()]
        self.projective = projective
        if projective and any(not g.is_homogeneous() for g in self.generators):
            raise ValueError("projective ideal requires homogeneous generators")
        self.basis = None

    def with_basis(self, step_budget=200000) -> "PrimeFieldIdeal":
        if self.basis is not None:
            return self
        out = PrimeFieldIdeal(self.p, self.nvars, self.generators, self.projective)
        out.basis = buchberger(self.generators, step_budget=step_budget)
        return out


def groebner_basis(ideal: PrimeFieldIdeal, step_budget=200000) -> PrimeFieldIdeal:
    return ideal.with_basis(step_budget=step_budget)


def projective_empty(ideal: PrimeFieldIdeal, step_budget=200000) -> bool:
    """True iff the projective vanishing set over the algebraic closure is empty:
    the reduced basis leading terms must contain a pure power of every variable."""
    if any(not g.is_homogeneous() for g in ideal.generators):
        raise ValueError("projective emptiness requires homogeneous generators")
    gb = ideal.with_basis(step_budget=step_budget)
    seen = [False] * ideal.nvars
    for g in gb.basis:
        lm = g.lm()
        nz = [i for i, e in enumerate(lm) if e]
        if len(nz) == 1:
            seen[nz[0]] = True
    return all(seen)


def fp_poly_from_terms(p: int, nvars: int, terms) -> FpPoly:
    return FpPoly(p, nvars, dict(terms))
