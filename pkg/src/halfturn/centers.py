"""Barycentric formulas for the few named triangle centers used here.

The coordinate formulas are written with plain ring arithmetic so the same
functions accept integers, Fractions, or symbolic polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegenerateTriangle, UnknownName
from .kernel import BaryPoint
from .maps import complement


@dataclass(frozen=True)
class SideLengths:
    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        a, b, c = (Fraction(v) for v in (self.a, self.b, self.c))
        if min(a, b, c) <= 0 or not (a < b + c and b < c + a and c < a + b):
            raise DegenerateTriangle(f"({a}, {b}, {c}) violates the triangle inequality")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    @classmethod
    def parse(cls, text: str) -> "SideLengths":
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 3:
            raise ValueError(f"expected 'a,b,c', got {text!r}")
        return cls(*(Fraction(p) for p in parts))


def g(a, b, c):
    return a**2 * (b + c - a) * (a**2 + b**2 + c**2 - 2 * a * b - 2 * a * c)


def h_numerator(a, b, c):
    return b + c - a


def h_denominator(a, b, c):
    return a**2 + b**2 + c**2 - 2 * a * b - 2 * a * c


def nagel_coords(a, b, c):
    return b + c - a, c + a - b, a + b - c


def gergonne_coords(a, b, c):
    sa, sb, sc = nagel_coords(a, b, c)
    return sb * sc, sa * sc, sa * sb


def x6600_coords(a, b, c):
    return g(a, b, c), g(b, c, a), g(c, a, b)


def x6601_coords(a, b, c):
    # h(a,b,c) with the three denominators cleared
    d1, d2, d3 = h_denominator(a, b, c), h_denominator(b, c, a), h_denominator(c, a, b)
    return (h_numerator(a, b, c) * d2 * d3,
            h_numerator(b, c, a) * d1 * d3,
            h_numerator(c, a, b) * d1 * d2)


def _centroid(a, b, c):
    return 1, 1, 1


def _incenter(a, b, c):
    return a, b, c


def _spieker(a, b, c):
    return tuple(complement(BaryPoint(a, b, c)))


_FORMULAS = {
    "centroid": _centroid,
    "incenter": _incenter,
    "gergonne": gergonne_coords,
    "nagel": nagel_coords,
    "spieker": _spieker,
    "x6600": x6600_coords,
    "x6601": x6601_coords,
}
CENTER_NAMES = tuple(_FORMULAS)


def center(name: str, s: SideLengths) -> BaryPoint:
    try:
        formula = _FORMULAS[name.lower()]
    except KeyError:
        raise UnknownName(f"unknown center {name!r}; choose from {', '.join(CENTER_NAMES)}") from None
    return BaryPoint(*formula(s.a, s.b, s.c))
