"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""

import json
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from halfturn.centers import SideLengths, center
from halfturn.constructions import build_configuration, generalized_circumcenter, generalized_orthocenter
from halfturn.embed import (
    DEFAULT_TRIANGLE,
    CartesianTriangle,
    circumcenter_oracle,
    congruent_quads,
    orthocenter_oracle,
    to_cartesian,
)
from halfturn.kernel import BaryPoint, cross_ratio
from halfturn.symbolic import THEOREMS, prove_all, prove_theorem
from halfturn.verify import INFINITE_P_PROBES, STEINER_PROBES, run_suite, sample_valid_p, suite_points

from . import cartesian as cart

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def report(capsys):
    def emit(criterion: str, ok: bool, detail: str = ""):
        with capsys.disabled():
            print(f"\n[acceptance] {criterion}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
        assert ok, f"{criterion} {detail}"
    return emit


def test_criterion_1_random_suite(report):
    start = time.perf_counter()
    reports = run_suite(suite_points(7, 200, 50))
    elapsed = time.perf_counter() - start
    ids = {c.id.split(".")[0] for r in reports for c in r.claims}
    needed = {"thm11", "thm21", "thm23", "cor22", "cor24b", "def31", "thm32", "thm34"}
    claims = [c for r in reports for c in r.claims]
    remark = [c for c in claims if c.id == "thm32.remark.H=T_L^-1(Q)"]
    harmonic = [c for c in claims if c.id.startswith("thm34.")]
    ok = (all(r.passed for r in reports) and needed <= ids and elapsed < 10
          and len(remark) >= 200 and len(harmonic) == 3 * len(reports))
    report("1 random exact suite", ok,
           f"({len(reports)} points, {len(claims)} claims, {elapsed:.2f}s)")


def test_criterion_2_infinite_branch(report):
    steiner = run_suite([BaryPoint(2, 2, -1)])[0]
    cfg = build_configuration(BaryPoint(2, 2, -1))
    q = BaryPoint(1, 1, -2)
    sub = {c.id: c.passed for c in steiner.claims}
    ok = (cfg.O == cfg.H == cfg.Q == q and steiner.passed
          and sub["thm11.halfturn.Q->R'=Q"] and sub["thm11.lambda'.vertex.R'=Q"]
          and sub["cor24c.Q,Md,D0,A0',K(A0)_collinear"])
    probes = run_suite(INFINITE_P_PROBES + STEINER_PROBES[1:])
    lam = all(any(c.id == "thm11.halfturn.R=Q'->Q'" and c.passed for c in r.claims)
              for r in probes[:len(INFINITE_P_PROBES)])
    ok = ok and lam and all(r.passed for r in probes)
    report("2 infinite branch", ok, f"(O=H=Q={cfg.O}, {len(probes)} extra probes)")


def test_criterion_3_symbolic_proofs(report):
    reports = prove_all()
    names = [r.theorem for r in reports]
    required = ["halfturn", "parallels", "thm21", "thm23", "cor22", "o_formula", "h_formula", "thm34"]
    n = sum(len(r.identities) for r in reports)
    halfturn = prove_theorem("halfturn")
    bisections = [i for i in halfturn.identities if i.label.startswith("half-turn about N1")]
    ok = (all(r.status == "proved" for r in reports) and all(k in names for k in required)
          and len(bisections) == 6 and len(prove_theorem("parallels").identities) == 4
          and all(i.vanishes for r in reports for i in r.identities))
    report("3 symbolic proofs", ok, f"({len(reports)} theorems, {n} identities)")


def _g(a, b, c):
    return a * a * (b + c - a) * (a * a + b * b + c * c - 2 * a * b - 2 * a * c)


def test_criterion_4_named_centers(report):
    sym = prove_theorem("nagel_centers")
    s = SideLengths(6, 9, 13)
    na = center("nagel", s)
    g_triple = BaryPoint(_g(6, 9, 13), _g(9, 13, 6), _g(13, 6, 9))
    ok = (sym.status == "proved" and na == BaryPoint(8, 5, 1)
          and generalized_circumcenter(na) == g_triple == center("x6600", s)
          and generalized_orthocenter(na) == center("x6601", s))
    report("4 named-center identities", ok, f"(O(Na)={g_triple}, H(Na)={generalized_orthocenter(na)})")


def test_criterion_5_classical_centers(report):
    t = CartesianTriangle.from_side_lengths(6, 9, 13)
    ge = center("gergonne", SideLengths(6, 9, 13))
    o = to_cartesian(t, generalized_circumcenter(ge))
    h = to_cartesian(t, generalized_orthocenter(ge))

    def perp(p, q, r, s):
        return (p[0] - q[0]) * (r[0] - s[0]) + t.y_scale * (p[1] - q[1]) * (r[1] - s[1]) == 0

    ok = (t.dist2(o, t.A) == t.dist2(o, t.B) == t.dist2(o, t.C)
          and perp(h, t.A, t.C, t.B) and perp(h, t.B, t.C, t.A)
          and o == circumcenter_oracle(t) and h == orthocenter_oracle(t))
    report("5 circumcenter/orthocenter at Gergonne", ok)


def test_criterion_6_spot_values(report):
    cfg = build_configuration(BaryPoint(1, 2, 3))
    xy = cart.bary_to_xy
    a, d0, e0 = cart.TRI["A"], xy((0, 1, 1)), xy((1, 0, 1))
    b, c = cart.TRI["B"], cart.TRI["C"]
    p = xy((1, 2, 3))
    d, e = xy((0, 2, 3)), xy((1, 0, 3))
    centroid = xy((1, 1, 1))

    # Q: concurrency of D0Md and E0Me
    q = cart.intersect(d0, cart.sub(cart.midpoint(a, d), d0), e0, cart.sub(cart.midpoint(b, e), e0))
    # Q' = K(isotomic(P')) = K(P): homothety at the centroid with ratio -1/2
    qp = cart.add(centroid, cart.scale(Fraction(-1, 2), cart.sub(p, centroid)))
    n1 = cart.midpoint(a, d0)
    r = cart.midpoint(a, p)
    # O: parallels through D0 and E0 to QD and QE
    o = cart.intersect(d0, cart.sub(d, q), e0, cart.sub(e, q))
    # H: anticomplement of O, ratio -2 at the centroid
    h = cart.add(centroid, cart.scale(-2, cart.sub(o, centroid)))
    bc = cart.sub(c, b)
    d2 = cart.intersect(a, cart.sub(q, a), b, bc)
    ha = cart.intersect(a, cart.sub(h, a), b, bc)
    oracle = {"Q": q, "Q_prime": qp, "N1": n1, "R": r, "O": o, "H": h, "D2": d2, "Ha": ha}
    expected = {"Q": (5, 8, 9), "Q_prime": (5, 4, 3), "N1": (2, 1, 1), "R": (7, 2, 3),
                "O": (125, 112, 27), "H": (7, 20, 105), "D2": (0, 8, 9), "Ha": (0, 4, 21)}
    ok = all(getattr(cfg, k) == BaryPoint(*v) and oracle[k] == xy(v) for k, v in expected.items())
    # Ha is the harmonic conjugate of D2 with respect to D, D3
    ok = ok and cross_ratio(cfg.D, cfg.D3, cfg.D2, cfg.Ha) == -1
    report("6 spot values at P=(1:2:3)", ok)


def test_criterion_7_metric_congruence(report):
    samples = sample_valid_p(2024, 20, 50)
    results = []
    for p in samples:
        cfg = build_configuration(p)
        q1 = (cfg.R, cfg.A0, cfg.Q, cfg.Md)
        q2 = (cfg.Q_prime, cfg.A0_prime, cfg.R_prime, cfg.Md_prime)
        results.append(congruent_quads(DEFAULT_TRIANGLE, q1, q2))
    report("7 metric congruence", len(results) == 20 and all(results), f"({sum(results)}/20)")


def _cli(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "halfturn", *args], capture_output=True, cwd=cwd)


def test_criterion_8_goldens(report, tmp_path):
    runs = [_cli("config", "--p", "1:2:3", "--json").stdout for _ in range(2)]
    figs = []
    for i in range(2):
        dest = tmp_path / f"fig{i}.svg"
        _cli("figure", "--p", "1:2:3", "-o", str(dest))
        figs.append(dest.read_bytes())
    ok = (runs[0] == runs[1] == (GOLDEN / "config_1_2_3.json").read_bytes()
          and figs[0] == figs[1] == (GOLDEN / "figure_1_2_3.svg").read_bytes()
          and json.loads(runs[0])["O"] == "125:112:27")
    report("8 determinism and goldens", ok)


def test_theorem_registry_complete():
    assert list(THEOREMS) == ["halfturn", "parallels", "thm21", "thm23", "cor22", "cor24b",
                              "o_formula", "h_formula", "thm34", "nagel_centers"]
