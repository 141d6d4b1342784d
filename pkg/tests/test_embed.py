import re
from fractions import Fraction

import pytest
from hypothesis import assume, given

from halfturn.centers import SideLengths, center
from halfturn.constructions import build_configuration, generalized_circumcenter, generalized_orthocenter
from halfturn.errors import DegenerateTriangle, InfinitePoint
from halfturn.kernel import A, BaryPoint, half_turn, join, midpoint, parallel
from halfturn.embed import (
    DEFAULT_TRIANGLE as T,
    CartesianTriangle,
    circumcenter_oracle,
    congruent_quads,
    orthocenter_oracle,
    render_svg,
    squared_distance,
    to_cartesian,
)

from .strategies import ordinary_points, valid_p


def test_to_cartesian_examples():
    assert to_cartesian(T, A) == (0, 3)
    assert to_cartesian(T, BaryPoint(0, 1, 1)) == (2, 0)
    assert to_cartesian(T, BaryPoint(1, 1, 1)) == (Fraction(4, 3), 1)
    with pytest.raises(InfinitePoint):
        to_cartesian(T, BaryPoint(1, -1, 0))


def test_squared_distance():
    assert squared_distance((0, 0), (3, 4)) == 25


def test_degenerate_triangle():
    with pytest.raises(DegenerateTriangle):
        CartesianTriangle((0, 0), (1, 1), (2, 2))
    with pytest.raises(DegenerateTriangle):
        CartesianTriangle.from_side_lengths(1, 1, 3)


def test_from_side_lengths():
    t = CartesianTriangle.from_side_lengths(6, 9, 13)
    assert t.dist2(t.B, t.C) == 36
    assert t.dist2(t.C, t.A) == 81
    assert t.dist2(t.A, t.B) == 169


def test_oracles_on_right_triangle():
    # right angle at B: circumcenter is the hypotenuse midpoint, orthocenter is B
    assert circumcenter_oracle(T) == (2, Fraction(3, 2))
    assert orthocenter_oracle(T) == (0, 0)


def _perp(t, p, q, r, s):
    # (p - q) . (r - s) == 0 with the triangle's y scaling
    return (p[0] - q[0]) * (r[0] - s[0]) + t.y_scale * (p[1] - q[1]) * (r[1] - s[1]) == 0


def test_gergonne_gives_classical_centers():
    s = SideLengths(6, 9, 13)
    t = CartesianTriangle.from_side_lengths(6, 9, 13)
    ge = center("gergonne", s)
    o = to_cartesian(t, generalized_circumcenter(ge))
    h = to_cartesian(t, generalized_orthocenter(ge))
    assert t.dist2(o, t.A) == t.dist2(o, t.B) == t.dist2(o, t.C)
    assert o == circumcenter_oracle(t)
    assert _perp(t, h, t.A, t.C, t.B) and _perp(t, h, t.B, t.C, t.A)
    assert h == orthocenter_oracle(t)


def _quads(cfg):
    return ((cfg.R, cfg.A0, cfg.Q, cfg.Md),
            (cfg.Q_prime, cfg.A0_prime, cfg.R_prime, cfg.Md_prime))


def test_congruent_quads_examples():
    cfg = build_configuration(BaryPoint(1, 2, 3))
    q1, q2 = _quads(cfg)
    assert congruent_quads(T, q1, q1)
    n = BaryPoint(3, 5, 7)
    assert congruent_quads(T, q1, [half_turn(n, p) for p in q1])
    assert congruent_quads(T, q1, q2)
    assert not congruent_quads(T, q1, (cfg.Q_prime, cfg.A0_prime, cfg.Md_prime, cfg.R_prime))


@given(ordinary_points, ordinary_points)
def test_embedding_is_affine(p, q):
    cp, cq = to_cartesian(T, p), to_cartesian(T, q)
    assert to_cartesian(T, midpoint(p, q)) == tuple((u + v) / 2 for u, v in zip(cp, cq))
    assert to_cartesian(T, half_turn(p, q)) == tuple(2 * u - v for u, v in zip(cp, cq))


@given(ordinary_points, ordinary_points, ordinary_points, ordinary_points)
def test_parallel_lines_embed_parallel(p, q, r, s):
    assume(p != q and r != s)
    d1 = [u - v for u, v in zip(to_cartesian(T, p), to_cartesian(T, q))]
    d2 = [u - v for u, v in zip(to_cartesian(T, r), to_cartesian(T, s))]
    assert parallel(join(p, q), join(r, s)) == (d1[0] * d2[1] - d1[1] * d2[0] == 0)


@given(valid_p)
def test_quadrilaterals_congruent(p):
    cfg = build_configuration(p)
    assume(not (cfg.p_infinite or cfg.p_prime_infinite))
    assert congruent_quads(T, *_quads(cfg))


def _labels(svg):
    return set(re.findall(r">([^<>]+)</text>", svg))


def test_svg_centroid_labels():
    svg = render_svg(build_configuration(BaryPoint(1, 1, 1)))
    assert {"A", "B", "C", "Q", "N1"} <= _labels(svg)
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")


def test_svg_deterministic():
    cfg = build_configuration(BaryPoint(1, 2, 3))
    assert render_svg(cfg) == render_svg(build_configuration(BaryPoint(1, 2, 3)))


def test_svg_collinear_points():
    svg = render_svg(build_configuration(BaryPoint(1, 2, 3)))
    pos = {}
    for cx, cy, name in re.findall(r'<circle cx="([^"]+)" cy="([^"]+)"[^>]*/>\n<text[^>]*>([^<]+)<', svg):
        pos[name] = (float(cx), float(cy))
    (x1, y1), (x2, y2), (x3, y3) = pos["D0"], pos["R"], pos["A0"]
    assert abs((x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)) < 1e-6


def test_svg_infinite_points_drawn_as_arrows():
    svg = render_svg(build_configuration(BaryPoint(2, 2, -1)))
    assert 'class="direction"' in svg
    assert "P' (inf)" in svg
