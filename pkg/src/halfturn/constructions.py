"""The named configuration attached to a cevian point P of triangle ABC.

Notation follows the usual conventions for this configuration: ``P'`` is the
isotomic conjugate, ``Q = K(P')`` the isotomcomplement, ``Q' = K(P)``, DEF and
D3E3F3 the cevian triangles of P and P', D0E0F0 the medial triangle.  Primes
are spelled with a trailing apostrophe in the dictionary form.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, fields
from typing import Optional

from .errors import OnSideOfABC, OnSideOfAnticomplementary, RouteMismatch, ZeroImage
from .kernel import (
    A,
    B,
    C,
    BaryPoint,
    half_turn,
    join,
    meet,
    midpoint,
    LINE_AT_INFINITY,
)
from .maps import (
    anticomplement,
    apply,
    cevian_map,
    cevian_traces,
    complement,
    invert,
    isotomic,
    map_from_correspondence,
    tp_prime_inverse,
)

log = logging.getLogger(__name__)

ANTICOMPLEMENTARY = (BaryPoint(-1, 1, 1), BaryPoint(1, -1, 1), BaryPoint(1, 1, -1))
D0, E0, F0 = BaryPoint(0, 1, 1), BaryPoint(1, 0, 1), BaryPoint(1, 1, 0)
SIDES = (join(B, C), join(C, A), join(A, B))


def validate_p(p: BaryPoint) -> None:
    x, y, z = p
    if x * y * z == 0:
        raise OnSideOfABC(f"P={p} lies on a side line of ABC")
    if (x + y) * (y + z) * (z + x) == 0:
        raise OnSideOfAnticomplementary(
            f"P={p} lies on a side line of the anticomplementary triangle")


def isotomcomplement(p: BaryPoint) -> BaryPoint:
    validate_p(p)
    x, y, z = p
    return BaryPoint(x * (y + z), y * (x + z), z * (x + y))


def _closed_form_o(p: BaryPoint) -> tuple[int, int, int]:
    x, y, z = p
    s = x * y + x * z + y * z
    return (x * (y + z) ** 2 * (s - x * x),
            y * (x + z) ** 2 * (s - y * y),
            z * (x + y) ** 2 * (s - z * z))


def _closed_form_h(p: BaryPoint) -> tuple[int, int, int]:
    x, y, z = p
    s = x * y + x * z + y * z
    xx, yy, zz = s - x * x, s - y * y, s - z * z
    return x * yy * zz, y * xx * zz, z * xx * yy


def _point_or_zero_image(triple, what, p) -> BaryPoint:
    if not any(triple):
        log.warning("%s vanishes identically at P=%s", what, p)
        raise ZeroImage(f"{what} vanishes at P={p}")
    return BaryPoint(*triple)


def generalized_circumcenter(p: BaryPoint) -> BaryPoint:
    """O by the matrix route, cross-checked against the closed form."""
    validate_p(p)
    q = isotomcomplement(p)
    by_matrix = apply(tp_prime_inverse(p), complement(q))
    closed = _point_or_zero_image(_closed_form_o(p), "generalized circumcenter", p)
    if by_matrix != closed:
        raise RouteMismatch(f"O at P={p}: matrix {by_matrix} vs closed form {closed}")
    return closed


def generalized_orthocenter(p: BaryPoint) -> BaryPoint:
    validate_p(p)
    via_o = anticomplement(generalized_circumcenter(p))
    closed = _point_or_zero_image(_closed_form_h(p), "generalized orthocenter", p)
    if via_o != closed:
        raise RouteMismatch(f"H at P={p}: K^-1(O) {via_o} vs closed form {closed}")
    return closed


def _trace_through(vertex: BaryPoint, point: BaryPoint, side, direction_from) -> BaryPoint:
    # when the point sits on the vertex, fall back to the line through the
    # vertex parallel to the given direction line (defining property of H)
    if point == vertex:
        direction = meet(direction_from, LINE_AT_INFINITY)
        return meet(join(vertex, direction), side)
    return meet(join(vertex, point), side)


def trace_map_for_anticomplementary(l: BaryPoint):
    a2, b2, c2 = ANTICOMPLEMENTARY
    traces = (
        meet(join(a2, l), join(b2, c2)),
        meet(join(b2, l), join(c2, a2)),
        meet(join(c2, l), join(a2, b2)),
    )
    return map_from_correspondence(ANTICOMPLEMENTARY, traces)


def remark_check_tl(p: BaryPoint) -> bool:
    """Whether ``T_L^{-1}(Q) = H`` for ``L = K^{-1}(P')``.

    ``T_L`` is the cevian map of L built on the anticomplementary triangle,
    with traces taken on its side lines exactly as for ABC.
    """
    validate_p(p)
    pp = isotomic(p)
    if pp.is_infinite:
        raise ValueError(f"P'={pp} is infinite; T_L is undefined")
    tl = trace_map_for_anticomplementary(anticomplement(pp))
    return apply(invert(tl), isotomcomplement(p)) == generalized_orthocenter(p)


@dataclass(frozen=True)
class Configuration:
    P: BaryPoint
    P_prime: BaryPoint
    Q: BaryPoint
    Q_prime: BaryPoint
    D: BaryPoint
    E: BaryPoint
    F: BaryPoint
    D3: BaryPoint
    E3: BaryPoint
    F3: BaryPoint
    D0: BaryPoint
    E0: BaryPoint
    F0: BaryPoint
    Md: BaryPoint
    Me: BaryPoint
    Mf: BaryPoint
    Md_prime: BaryPoint
    N1: BaryPoint
    A0: BaryPoint
    B0: BaryPoint
    C0: BaryPoint
    A0_prime: BaryPoint
    B0_prime: BaryPoint
    C0_prime: BaryPoint
    A3_prime: BaryPoint
    B3_prime: BaryPoint
    C3_prime: BaryPoint
    O: BaryPoint
    H: BaryPoint
    D2: BaryPoint
    E2: BaryPoint
    F2: BaryPoint
    Ha: BaryPoint
    Hb: BaryPoint
    Hc: BaryPoint
    R: Optional[BaryPoint]
    R_prime: Optional[BaryPoint]
    M: Optional[BaryPoint]
    M_prime: Optional[BaryPoint]
    p_infinite: bool
    p_prime_infinite: bool

    @property
    def lambda_vertices(self) -> tuple[BaryPoint, ...]:
        """Vertices A, R, Md, Q, A0, D0 (R -> Q' when P is infinite)."""
        r = self.R if self.R is not None else self.Q_prime
        return (A, r, self.Md, self.Q, self.A0, self.D0)

    @property
    def lambda_prime_vertices(self) -> tuple[BaryPoint, ...]:
        """Vertices D0, Q', Md', R', A0', A (R' -> Q when P' is infinite)."""
        r = self.R_prime if self.R_prime is not None else self.Q
        return (self.D0, self.Q_prime, self.Md_prime, r, self.A0_prime, A)

    def named_points(self) -> dict[str, BaryPoint]:
        """Present points keyed by display name (``A0_prime`` -> ``A0'``)."""
        out = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if isinstance(value, BaryPoint):
                out[f.name.replace("_prime", "'")] = value
        return out

    def to_dict(self) -> dict[str, str]:
        return {k: str(v) for k, v in self.named_points().items()}


def build_configuration(p: BaryPoint) -> Configuration:
    validate_p(p)
    pp = isotomic(p)
    q = isotomcomplement(p)
    qp = complement(p)
    d, e, f = cevian_traces(p)
    d3, e3, f3 = half_turn(D0, d), half_turn(E0, e), half_turn(F0, f)
    tp = cevian_map(p)
    tpp = map_from_correspondence((A, B, C), (d3, e3, f3))
    o = generalized_circumcenter(p)
    h = generalized_orthocenter(p)
    qd, qe, qf = join(q, d), join(q, e), join(q, f)
    return Configuration(
        P=p, P_prime=pp, Q=q, Q_prime=qp,
        D=d, E=e, F=f, D3=d3, E3=e3, F3=f3,
        D0=D0, E0=E0, F0=F0,
        Md=midpoint(A, d), Me=midpoint(B, e), Mf=midpoint(C, f),
        Md_prime=midpoint(A, d3),
        N1=midpoint(A, D0),
        A0=apply(tp, D0), B0=apply(tp, E0), C0=apply(tp, F0),
        A0_prime=apply(tpp, D0), B0_prime=apply(tpp, E0), C0_prime=apply(tpp, F0),
        A3_prime=apply(tpp, d), B3_prime=apply(tpp, e), C3_prime=apply(tpp, f),
        O=o, H=h,
        D2=meet(join(A, q), SIDES[0]),
        E2=meet(join(B, q), SIDES[1]),
        F2=meet(join(C, q), SIDES[2]),
        Ha=_trace_through(A, h, SIDES[0], qd),
        Hb=_trace_through(B, h, SIDES[1], qe),
        Hc=_trace_through(C, h, SIDES[2], qf),
        R=None if p.is_infinite else midpoint(A, p),
        R_prime=None if pp.is_infinite else midpoint(A, pp),
        M=None if p.is_infinite else complement(qp),
        M_prime=None if pp.is_infinite else complement(q),
        p_infinite=p.is_infinite,
        p_prime_infinite=pp.is_infinite,
    )
