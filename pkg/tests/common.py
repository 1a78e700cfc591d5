"""Shared fixtures: the three bundled example triples and their frozen data."""

from fractions import Fraction

from conicprym.bundle import FormTriple
from conicprym.ternary import TernaryForm


def form2(named):
    return TernaryForm.from_named(2, {k: Fraction(v) for k, v in named.items()})


def form4(named):
    return TernaryForm.from_named(4, {k: Fraction(v) for k, v in named.items()})


# double cover with disconnected real locus; carries the Q(i) divisor certificate
TRIPLE_DISCONNECTED = FormTriple(
    form2({"u^2": -31, "u*v": 12, "v^2": -6, "u*w": 9, "v*w": 531, "w^2": 25}),
    form2({"u^2": -25, "u*v": 120, "v^2": 30, "u*w": -31, "v*w": 37}),
    form2({"u^2": -8047, "u*v": 1092, "v^2": -1446, "u*w": -423, "v*w": -375, "w^2": -25}),
    name="disconnected-real-locus")

# double cover whose real locus is a 3-sphere over a wrap-around interval
TRIPLE_SPHERE = FormTriple(
    form2({"u^2": -31, "u*v": 12, "v^2": -6, "u*w": 4, "v*w": 8, "w^2": 25}),
    form2({"u^2": -25, "u*v": 120, "v^2": 30, "u*w": 9, "v*w": -1}),
    form2({"u^2": -8047, "u*v": 1092, "v^2": -1446, "u*w": 4, "v*w": 7, "w^2": -25}),
    name="three-sphere-no-section")

# diagonal triple with negative definite Q1: empty real cover, sqrt(2) endpoints
TRIPLE_NEGDEF = FormTriple(
    form2({"u^2": -1, "v^2": -1, "w^2": -3}),
    form2({"u^2": 3, "v^2": 5}),
    form2({"u^2": -7, "v^2": -23, "w^2": -12}),
    name="negative-definite-cover")

# expected rank-drop loci (descending coefficients; defined up to a scalar)
SEXTIC_DISCONNECTED = [8813625, 16982610, 2262441955, 464971196,
                       -2293725941, -291034182, 429774609]
SEXTIC_SPHERE = [17464, -288576, 7502108, -53765156, 1128363667,
                 54275974, -1133336585]
# exact pencil determinant of the negative-definite triple:
# 3(t^2-6t+7)(t^2-10t+23)(t^2+4)
SEXTIC_NEGDEF = [3, -48, 282, -816, 1563, -2496, 1932]

# quartic of the negative-definite triple
QUARTIC_NEGDEF = form4({"u^4": 2, "v^4": 2, "u^2*w^2": -33, "v^2*w^2": -81, "w^4": -36})

CERT_DOC = {
    "d": -1,
    "line": {"u": "0", "v": "0", "w": "1"},
    "points": [
        ["-1*sqrt(-1)", "2", "0", "4-3*sqrt(-1)", "52-21*sqrt(-1)"],
        ["1*sqrt(-1)", "2", "0", "4+3*sqrt(-1)", "52+21*sqrt(-1)"],
        ["1-1*sqrt(-1)", "4", "0", "1+7*sqrt(-1)", "-41-143*sqrt(-1)"],
        ["1+1*sqrt(-1)", "4", "0", "1-7*sqrt(-1)", "-41+143*sqrt(-1)"],
    ],
}

WITNESS_PRIMES = [3, 5, 7, 11, 13]
