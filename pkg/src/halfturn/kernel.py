"""Exact projective primitives over homogeneous barycentric coordinates.

Points and lines are integer triples in a canonical normal form (gcd 1, first
nonzero entry positive), so projective equality is plain ``==``.  A point is
infinite when its coordinate sum is zero; the line at infinity is ``[1:1:1]``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import (
    CoincidesWithBasePoint,
    IdenticalLines,
    IdenticalPoints,
    InfiniteCenter,
    InfinitePoint,
    NotCollinear,
    NotOnLine,
    UndefinedCrossRatio,
    ZeroImage,
)

_RAT = r"-?\d+(?:/\d+)?"
_TRIPLE_RE = re.compile(rf"^\s*({_RAT})\s*:\s*({_RAT})\s*:\s*({_RAT})\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``int`` or ``int/posint``."""
    text = text.strip()
    if not re.fullmatch(_RAT, text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(text)


def _normalize(values: Sequence[Rational]) -> tuple[int, int, int]:
    if len(values) != 3:
        raise ValueError(f"expected a triple, got {len(values)} values")
    fracs = [Fraction(v) for v in values]
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*ints)
    if g == 0:
        raise ZeroImage("the zero triple is not a projective object")
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v)
    if lead < 0:
        ints = [-v for v in ints]
    return ints[0], ints[1], ints[2]


class _Triple:
    __slots__ = ("coords",)

    def __init__(self, x: Rational, y: Rational, z: Rational):
        object.__setattr__(self, "coords", _normalize((x, y, z)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def of(cls, values: Iterable[Rational]):
        x, y, z = values
        return cls(x, y, z)

    @classmethod
    def parse(cls, text: str):
        m = _TRIPLE_RE.match(text)
        if not m:
            raise ValueError(f"expected 'p:q:r' with rational entries, got {text!r}")
        return cls(*(parse_rational(g) for g in m.groups()))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash((type(self).__name__, self.coords))

    def __str__(self):
        return ":".join(str(c) for c in self.coords)

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(str(c) for c in self.coords)})"

    def __reduce__(self):
        return (type(self), self.coords)


class BaryPoint(_Triple):
    """A point ``(x:y:z)``; infinite iff ``x + y + z == 0``."""

    __slots__ = ()

    @property
    def weight(self) -> int:
        return sum(self.coords)

    @property
    def is_infinite(self) -> bool:
        return self.weight == 0


class BaryLine(_Triple):
    """A line ``[u:v:w]`` = the locus ``ux + vy + wz = 0``."""

    __slots__ = ()


A = BaryPoint(1, 0, 0)
B = BaryPoint(0, 1, 0)
C = BaryPoint(0, 0, 1)
CENTROID = BaryPoint(1, 1, 1)
LINE_AT_INFINITY = BaryLine(1, 1, 1)


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u, v, w):
    return _dot(u, _cross(v, w))


def is_infinite(p: BaryPoint) -> bool:
    return p.is_infinite


def join(p: BaryPoint, q: BaryPoint) -> BaryLine:
    w = _cross(p, q)
    if w == (0, 0, 0):
        raise IdenticalPoints(f"cannot join {p} with itself")
    return BaryLine(*w)


def meet(l: BaryLine, m: BaryLine) -> BaryPoint:
    w = _cross(l, m)
    if w == (0, 0, 0):
        raise IdenticalLines(f"cannot meet {l} with itself")
    return BaryPoint(*w)


def incident(p: BaryPoint, l: BaryLine) -> bool:
    return _dot(p, l) == 0


def collinear(p: BaryPoint, q: BaryPoint, r: BaryPoint) -> bool:
    return det3(p, q, r) == 0


def concurrent(l: BaryLine, m: BaryLine, n: BaryLine) -> bool:
    return det3(l, m, n) == 0


def all_collinear(points: Sequence[BaryPoint]) -> bool:
    """True when every point lies on one line (repeats allowed)."""
    distinct = list(dict.fromkeys(points))
    if len(distinct) <= 2:
        return True
    line = join(distinct[0], distinct[1])
    return all(incident(p, line) for p in distinct[2:])


def parallel(l: BaryLine, m: BaryLine) -> bool:
    # identical lines count as parallel
    if l == m:
        return True
    return meet(l, m).is_infinite


def midpoint(p: BaryPoint, q: BaryPoint) -> BaryPoint:
    sp, sq = p.weight, q.weight
    if sp == 0 or sq == 0:
        raise InfinitePoint(f"midpoint needs ordinary points, got {p} and {q}")
    return BaryPoint(*(sq * a + sp * b for a, b in zip(p, q)))


def half_turn(n: BaryPoint, p: BaryPoint) -> BaryPoint:
    """Point reflection of ``p`` through the ordinary center ``n``.

    Infinite points are fixed, since a half-turn preserves every direction.
    """
    sn = n.weight
    if sn == 0:
        raise InfiniteCenter(f"half-turn center {n} is at infinity")
    sp = p.weight
    return BaryPoint(*(2 * sp * a - sn * b for a, b in zip(n, p)))


def _line_params(a: BaryPoint, b: BaryPoint, c: BaryPoint) -> tuple[int, int]:
    # c ~ alpha*a + beta*b; returns (alpha, beta) up to a common factor
    w = _cross(a, b)
    if w == (0, 0, 0):
        raise IdenticalPoints(f"base points {a} and {b} coincide")
    if _dot(c, w) != 0:
        raise NotOnLine(f"{c} is not on the line through {a} and {b}")
    k = next(i for i in range(3) if w[i])
    return _cross(c, b)[k], _cross(a, c)[k]


def harmonic_conjugate(a: BaryPoint, b: BaryPoint, c: BaryPoint) -> BaryPoint:
    alpha, beta = _line_params(a, b, c)
    if alpha == 0 or beta == 0:
        raise CoincidesWithBasePoint(f"{c} coincides with a base point")
    return BaryPoint(*(alpha * u - beta * v for u, v in zip(a, b)))


def cross_ratio(a: BaryPoint, b: BaryPoint, c: BaryPoint, d: BaryPoint):
    """``(a, b; c, d)`` as an exact Fraction, or ``math.inf``.

    Uses the convention ``(c-a)(d-b) / ((c-b)(d-a))`` in any affine parameter
    along the line, so a harmonic range gives -1 and ``(a, b; c, c) = 1``.
    """
    try:
        ac, bc = _line_params(a, b, c)
        ad, bd = _line_params(a, b, d)
    except NotOnLine as exc:
        raise NotCollinear(str(exc)) from exc
    num = bc * ad
    den = ac * bd
    if den == 0:
        if num == 0:
            raise UndefinedCrossRatio(f"({a}, {b}; {c}, {d}) is 0/0")
        return math.inf
    return Fraction(num, den)
