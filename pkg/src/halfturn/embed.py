"""Cartesian realization of the barycentric picture.

Metric checks stay exact by working with squared distances and dot
products.  A triangle may carry a rational ``y_scale``: stored y values are
then multiples of ``sqrt(y_scale)``, which lets triangles with arbitrary
rational side lengths embed without radicals (see ``from_side_lengths``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DegenerateTriangle, InfinitePoint, Singular
from .kernel import A as VA, B as VB, C as VC, BaryPoint

Point2 = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class CartesianTriangle:
    A: Point2
    B: Point2
    C: Point2
    y_scale: Fraction = Fraction(1)

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, tuple(Fraction(v) for v in getattr(self, name)))
        object.__setattr__(self, "y_scale", Fraction(self.y_scale))
        if self.y_scale <= 0:
            raise ValueError("y_scale must be positive")
        (ax, ay), (bx, by), (cx, cy) = self.A, self.B, self.C
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0:
            raise DegenerateTriangle("vertices are collinear")

    @classmethod
    def from_side_lengths(cls, a, b, c) -> "CartesianTriangle":
        """B=(0,0), C=(a,0), A above BC; ``y_scale`` is the squared height of A."""
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        u = (a * a + c * c - b * b) / (2 * a)
        height_sq = c * c - u * u
        if height_sq <= 0:
            raise DegenerateTriangle(f"({a}, {b}, {c}) is not a proper triangle")
        return cls((u, Fraction(1)), (Fraction(0), Fraction(0)), (a, Fraction(0)), height_sq)

    def to_cartesian(self, p: BaryPoint) -> Point2:
        return to_cartesian(self, p)

    def dist2(self, u: Point2, v: Point2) -> Fraction:
        return squared_distance(u, v, self.y_scale)

    def dot(self, u: Point2, v: Point2, w: Point2) -> Fraction:
        return dot(u, v, w, self.y_scale)

    def to_float(self, u: Point2) -> tuple[float, float]:
        return float(u[0]), float(u[1]) * math.sqrt(self.y_scale)


DEFAULT_TRIANGLE = CartesianTriangle((0, 3), (0, 0), (4, 0))


def to_cartesian(t: CartesianTriangle, p: BaryPoint) -> Point2:
    s = p.weight
    if s == 0:
        raise InfinitePoint(f"{p} has no Cartesian position")
    return tuple(sum(Fraction(w) * v[i] for w, v in zip(p, (t.A, t.B, t.C))) / s for i in range(2))


def squared_distance(u: Point2, v: Point2, y_scale: Fraction = Fraction(1)) -> Fraction:
    dx, dy = u[0] - v[0], u[1] - v[1]
    return dx * dx + y_scale * dy * dy


def dot(u: Point2, v: Point2, w: Point2, y_scale: Fraction = Fraction(1)) -> Fraction:
    """``(u - w) . (v - w)``."""
    return (u[0] - w[0]) * (v[0] - w[0]) + y_scale * (u[1] - w[1]) * (v[1] - w[1])


def congruent_quads(t: CartesianTriangle, q1: Sequence[BaryPoint], q2: Sequence[BaryPoint]) -> bool:
    """Equal squared distances for all six vertex pairs, in corresponding order."""
    c1 = [to_cartesian(t, p) for p in q1]
    c2 = [to_cartesian(t, p) for p in q2]
    return all(t.dist2(c1[i], c1[j]) == t.dist2(c2[i], c2[j])
               for i in range(4) for j in range(i + 1, 4))


def _solve2(m, rhs) -> Point2:
    (a, b), (c, d) = m
    det = a * d - b * c
    if det == 0:
        raise Singular("degenerate 2x2 system")
    return (rhs[0] * d - b * rhs[1]) / det, (a * rhs[1] - c * rhs[0]) / det


def circumcenter_oracle(t: CartesianTriangle) -> Point2:
    """Intersect two perpendicular bisectors directly in the plane."""
    s = t.y_scale
    A, B, C = t.A, t.B, t.C

    def norm2(p):
        return p[0] * p[0] + s * p[1] * p[1]

    rows = [(2 * (B[0] - A[0]), 2 * s * (B[1] - A[1])), (2 * (C[0] - A[0]), 2 * s * (C[1] - A[1]))]
    return _solve2(rows, (norm2(B) - norm2(A), norm2(C) - norm2(A)))


def orthocenter_oracle(t: CartesianTriangle) -> Point2:
    """Intersect the altitudes from A and B."""
    s = t.y_scale
    A, B, C = t.A, t.B, t.C
    u = (C[0] - B[0], s * (C[1] - B[1]))
    v = (C[0] - A[0], s * (C[1] - A[1]))
    return _solve2([u, v], (u[0] * A[0] + u[1] * A[1], v[0] * B[0] + v[1] * B[1]))


# ---------------------------------------------------------------------------
# SVG


@dataclass(frozen=True)
class SvgOptions:
    width: int = 800
    stroke_width: float = 1.2
    font_size: float = 13.0
    labels: bool = True


def _fmt(v: float) -> str:
    return f"{v + 0.0:.9g}"  # + 0.0 turns -0.0 into 0.0


def _quad_sides(cfg):
    A = VA
    r = cfg.R if cfg.R is not None else cfg.Q_prime
    rp = cfg.R_prime if cfg.R_prime is not None else cfg.Q
    lam = {
        "AP": (A, r, cfg.Md, cfg.P), "AQ": (A, cfg.Q, cfg.A0), "D0Q": (cfg.D0, cfg.Md, cfg.Q),
        "D0A0": (cfg.D0, r, cfg.A0),
    }
    lam_p = {
        "D0Q'": (cfg.D0, cfg.Q_prime, cfg.Md_prime), "D0A0'": (cfg.D0, rp, cfg.A0_prime),
        "AP'": (A, cfg.Md_prime, rp, cfg.P_prime), "AQ'": (A, cfg.Q_prime, cfg.A0_prime),
    }
    return lam, lam_p


def render_svg(cfg, t: CartesianTriangle = DEFAULT_TRIANGLE, opts: Optional[SvgOptions] = None) -> str:
    """SVG drawing of the triangle, both quadrilaterals and the labeled points.

    Each quadrilateral side is drawn as the segment spanning the ordinary
    vertices it carries; infinite points are drawn as labeled arrows from N1.
    """
    opts = opts or SvgOptions()
    named = {"A": VA, "B": VB, "C": VC}
    named.update(cfg.named_points())
    ordinary = {k: t.to_float(to_cartesian(t, p)) for k, p in named.items() if not p.is_infinite}
    infinite = {k: p for k, p in named.items() if p.is_infinite}

    xs = [v[0] for v in ordinary.values()]
    ys = [-v[1] for v in ordinary.values()]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    margin = 0.1 * span
    x0, y0 = x0 - margin, y0 - margin
    w, h = x1 - x0 + margin, y1 - y0 + margin
    scale = opts.width / w
    stroke = _fmt(opts.stroke_width / scale)
    font = _fmt(opts.font_size / scale)
    radius = _fmt(2.5 / scale)

    def xy(p):
        return _fmt(p[0]), _fmt(-p[1])

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width}" '
        f'height="{_fmt(h * scale)}" viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(w)} {_fmt(h)}">',
        "<title>Quadrilateral half-turn configuration</title>",
        '<defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" '
        'markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z" fill="#555"/></marker></defs>',
    ]
    tri = " ".join(",".join(xy(ordinary[k])) for k in "ABC")
    out.append(f'<polygon points="{tri}" fill="none" stroke="#000" stroke-width="{stroke}"/>')

    lam, lam_p = _quad_sides(cfg)
    for group, sides, colour in (("lambda", lam, "#c0392b"), ("lambda-prime", lam_p, "#2471a3")):
        out.append(f'<g id="{group}" stroke="{colour}" stroke-width="{stroke}" fill="none">')
        for name, pts in sides.items():
            coords = [t.to_float(to_cartesian(t, p)) for p in pts if not p.is_infinite]
            coords = sorted(set(coords))
            if len(coords) < 2:
                continue
            (ax, ay), (bx, by) = coords[0], coords[-1]
            out.append(f'<line data-side="{name}" x1="{_fmt(ax)}" y1="{_fmt(-ay)}" '
                       f'x2="{_fmt(bx)}" y2="{_fmt(-by)}"/>')
        out.append("</g>")

    n1 = ordinary["N1"]
    for name, p in infinite.items():
        # direction of an infinite point (u:v:w), u+v+w=0, is u*A + v*B + w*C
        dx = sum(float(c) * float(vx) for c, (vx, _) in zip(p, (t.A, t.B, t.C)))
        dy = sum(float(c) * float(vy) for c, (_, vy) in zip(p, (t.A, t.B, t.C))) * math.sqrt(t.y_scale)
        norm = math.hypot(dx, dy) or 1.0
        ex, ey = n1[0] + 0.25 * span * dx / norm, n1[1] + 0.25 * span * dy / norm
        out.append(f'<line class="direction" x1="{_fmt(n1[0])}" y1="{_fmt(-n1[1])}" x2="{_fmt(ex)}" '
                   f'y2="{_fmt(-ey)}" stroke="#555" stroke-width="{stroke}" marker-end="url(#arrow)"/>')
        if opts.labels:
            out.append(f'<text x="{_fmt(ex)}" y="{_fmt(-ey)}" font-size="{font}">{name} (inf)</text>')

    for name, p in ordinary.items():
        fill = "#e67e22" if name == "N1" else "#000"
        r = _fmt(5 / scale) if name == "N1" else radius
        px, py = xy(p)
        out.append(f'<circle cx="{px}" cy="{py}" r="{r}" fill="{fill}"/>')
        if opts.labels:
            out.append(f'<text x="{_fmt(p[0] + 4 / scale)}" y="{_fmt(-p[1] - 4 / scale)}" '
                       f'font-size="{font}" font-family="sans-serif">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
