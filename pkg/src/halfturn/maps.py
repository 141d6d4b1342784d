"""3x3 exact maps acting projectively on barycentric triples.

An affine map is just a matrix whose column sums agree and are nonzero (it
then fixes the line at infinity).  There is no separate affine type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Sequence

from .errors import CollinearSources, DegenerateP, InfinitePoint, OnSideLine, Singular, ZeroImage
from .kernel import A, B, C, BaryPoint, det3


@dataclass(frozen=True)
class Map3:
    rows: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(v) for v in row) for row in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Map3 needs a 3x3 matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Rational]]) -> "Map3":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[Rational]]) -> "Map3":
        return cls(tuple(tuple(cols[j][i] for j in range(3)) for i in range(3)))

    @cached_property
    def det(self) -> Fraction:
        return det3(*self.rows)

    @property
    def is_invertible(self) -> bool:
        return self.det != 0

    @property
    def column_sums(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(sum(self.rows[i][j] for i in range(3)) for j in range(3))

    @property
    def is_affine(self) -> bool:
        s = self.column_sums
        return s[0] != 0 and s[0] == s[1] == s[2]

    def entries(self) -> tuple[Fraction, ...]:
        return tuple(v for row in self.rows for v in row)

    def scaled(self, k: Rational) -> "Map3":
        return Map3(tuple(tuple(k * v for v in row) for row in self.rows))

    def proportional_to(self, other: "Map3") -> bool:
        u, v = self.entries(), other.entries()
        k = next((i for i in range(9) if u[i]), None)
        if k is None:
            return all(x == 0 for x in v)
        return all(u[k] * v[j] == v[k] * u[j] for j in range(9)) and v[k] != 0

    def to_json(self) -> list[str]:
        """Nine rational strings, row-major."""
        return [str(v) for v in self.entries()]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "Map3":
        vals = [Fraction(s) for s in data]
        return cls.from_rows([vals[0:3], vals[3:6], vals[6:9]])

    def __matmul__(self, other: "Map3") -> "Map3":
        return compose(self, other)

    def __call__(self, p: BaryPoint) -> BaryPoint:
        return apply(self, p)


def apply(m: Map3, p: BaryPoint) -> BaryPoint:
    image = [sum(r[j] * p[j] for j in range(3)) for r in m.rows]
    if not any(image):
        raise ZeroImage(f"{p} lies in the kernel of the map")
    return BaryPoint(*image)


def compose(m1: Map3, m2: Map3) -> Map3:
    """``m1 @ m2``: apply ``m2`` first."""
    a, b = m1.rows, m2.rows
    return Map3(tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    ))


def invert(m: Map3) -> Map3:
    d = m.det
    if d == 0:
        raise Singular("matrix is singular")
    r = m.rows
    adj = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            i1, i2 = [k for k in range(3) if k != j]
            j1, j2 = [k for k in range(3) if k != i]
            adj[i][j] = (-1) ** (i + j) * (r[i1][j1] * r[i2][j2] - r[i1][j2] * r[i2][j1])
    return Map3.from_rows([[v / d for v in row] for row in adj])


IDENTITY = Map3.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
# complement: homothety about the centroid, ratio -1/2
K = Map3.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
K_INV = invert(K)


def complement(p: BaryPoint) -> BaryPoint:
    x, y, z = p
    return BaryPoint(y + z, z + x, x + y)


def anticomplement(p: BaryPoint) -> BaryPoint:
    x, y, z = p
    image = (y + z - x, z + x - y, x + y - z)
    if not any(image):
        raise ZeroImage(f"anticomplement of {p} vanishes")
    return BaryPoint(*image)


def isotomic(p: BaryPoint) -> BaryPoint:
    x, y, z = p
    if x * y * z == 0:
        raise OnSideLine(f"{p} lies on a side line of ABC")
    return BaryPoint(y * z, z * x, x * y)


def _normalized_columns(points: Sequence[BaryPoint]) -> Map3:
    cols = []
    for p in points:
        w = p.weight
        if w == 0:
            raise InfinitePoint(f"{p} is at infinity")
        cols.append([Fraction(c, w) for c in p])
    return Map3.from_columns(cols)


def map_from_correspondence(src: Sequence[BaryPoint], dst: Sequence[BaryPoint]) -> Map3:
    """The unique affine map with ``src[i] -> dst[i]`` for ordinary points."""
    n_src = _normalized_columns(src)
    if n_src.det == 0:
        raise CollinearSources(f"source points {', '.join(map(str, src))} are collinear")
    n_dst = _normalized_columns(dst)
    return compose(n_dst, invert(n_src))


def cevian_traces(p: BaryPoint) -> tuple[BaryPoint, BaryPoint, BaryPoint]:
    x, y, z = p
    return BaryPoint(0, y, z), BaryPoint(x, 0, z), BaryPoint(x, y, 0)


def cevian_map(p: BaryPoint) -> Map3:
    """The affine map taking ABC onto the cevian triangle of ``p``."""
    return map_from_correspondence((A, B, C), cevian_traces(p))


def tp_prime_inverse(p: BaryPoint) -> Map3:
    """Closed form of the inverse of the cevian map of the isotomic conjugate.

    Rows are ``(-x x', y x', z x')`` etc. with ``(x', y', z')`` the
    isotomcomplement; every column sums to ``2xyz``.
    """
    x, y, z = p
    if x * y * z * (x + y) * (y + z) * (z + x) == 0:
        raise DegenerateP(f"{p} lies on a side of ABC or of its anticomplementary triangle")
    q = (x * (y + z), y * (x + z), z * (x + y))
    return Map3.from_rows([[(-v if i == j else v) * q[i] for j, v in enumerate((x, y, z))]
                           for i in range(3)])
