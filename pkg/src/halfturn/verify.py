"""Exact claim-by-claim checking of the configuration theorems at sample points.

Every check is an integer determinant or an equality of normal forms, so a
claim either holds or it doesn't.  Degenerate coincidences (identical lines,
a point landing on a base point of a range) are reported as passing with a
``witness`` that says which convention applied.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .constructions import (
    D0,
    E0,
    F0,
    Configuration,
    build_configuration,
    remark_check_tl,
    validate_p,
)
from .embed import DEFAULT_TRIANGLE, congruent_quads
from .errors import DegenerateP, GeometryError
from .kernel import (
    A,
    B,
    C,
    BaryPoint,
    all_collinear,
    collinear,
    cross_ratio,
    half_turn,
    harmonic_conjugate,
    join,
    midpoint,
    parallel,
)
from .maps import (
    anticomplement,
    apply,
    cevian_map,
    complement,
    compose,
    invert,
    map_from_correspondence,
    tp_prime_inverse,
)

# fixed probes for the infinite branches
STEINER_PROBES = (BaryPoint(2, 2, -1), BaryPoint(3, 6, -2), BaryPoint(-2, 3, 6))
INFINITE_P_PROBES = (BaryPoint(1, 1, -2), BaryPoint(1, -2, 1), BaryPoint(-2, 1, 1),
                     BaryPoint(1, 2, -3), BaryPoint(3, -1, -2))


@dataclass
class Claim:
    id: str
    passed: bool
    witness: Optional[str] = None

    def to_dict(self) -> dict:
        out = {"id": self.id, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    p: BaryPoint
    claims: list[Claim] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def failures(self) -> list[Claim]:
        return [c for c in self.claims if not c.passed]

    def add(self, claim_id: str, passed: bool, witness: Optional[str] = None):
        self.claims.append(Claim(claim_id, bool(passed), witness))

    def check(self, claim_id: str, fn: Callable[[], object]):
        """Record ``fn()``; a GeometryError counts as a failure with its message."""
        try:
            result = fn()
        except GeometryError as exc:
            self.add(claim_id, False, f"{type(exc).__name__}: {exc}")
            return
        if isinstance(result, tuple):
            self.add(claim_id, *result)
        else:
            self.add(claim_id, result)

    def merge(self, other: "Report") -> "Report":
        return Report(self.p, self.claims + other.claims)

    def to_dict(self) -> dict:
        return {"p": str(self.p), "claims": [c.to_dict() for c in self.claims],
                "pass": self.passed}


def sample_valid_p(seed: int, count: int, bound: int) -> list[BaryPoint]:
    """Deterministic random valid cevian points with entries in [-bound, bound]."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    rng = random.Random(seed)
    out: list[BaryPoint] = []
    while len(out) < count:
        triple = [rng.randint(-bound, bound) for _ in range(3)]
        if not any(triple):
            continue
        p = BaryPoint(*triple)
        try:
            validate_p(p)
        except DegenerateP:
            continue
        out.append(p)
    return out


def _parallel_claim(l1, l2):
    return parallel(join(*l1), join(*l2))


def verify_halfturn(p: BaryPoint, cfg: Configuration | None = None) -> Report:
    cfg = cfg or build_configuration(p)
    rep = Report(p)
    lam, lam_p = cfg.lambda_vertices, cfg.lambda_prime_vertices
    names = ("A", "R", "Md", "Q", "A0", "D0")
    names_p = ("D0", "Q'", "Md'", "R'", "A0'", "A")
    if cfg.p_infinite:
        names = ("A", "R=Q'", "Md", "Q", "A0", "D0")
    if cfg.p_prime_infinite:
        names_p = ("D0", "Q'", "Md'", "R'=Q", "A0'", "A")
    for s, t, v, w in zip(names, names_p, lam, lam_p):
        image = half_turn(cfg.N1, v)
        rep.add(f"thm11.halfturn.{s}->{t}", image == w, None if image == w else f"got {image}, want {w}")

    a0, a0p, q, qp = cfg.A0, cfg.A0_prime, cfg.Q, cfg.Q_prime
    lines = {
        "AP": (A, cfg.P), "AQ": (A, q), "D0Q": (D0, q), "D0A0": (D0, a0),
        "D0Q'": (D0, qp), "D0A0'": (D0, a0p), "AP'": (A, cfg.P_prime), "AQ'": (A, qp),
    }
    incidences = {
        0: (("AP", "AQ"), ("D0A0'", "D0Q'")), 1: (("AP", "D0A0"), ("D0Q'", "AQ'")),
        2: (("AP", "D0Q"), ("D0Q'", "AP'")), 3: (("AQ", "D0Q"), ("AP'", "D0A0'")),
        4: (("AQ", "D0A0"), ("D0A0'", "AQ'")), 5: (("D0Q", "D0A0"), ("AP'", "AQ'")),
    }
    for i, (sides, sides_p) in incidences.items():
        for quad, verts, vname, pair in (("lambda", lam, names[i], sides),
                                         ("lambda'", lam_p, names_p[i], sides_p)):
            v = verts[i]
            ok = all(collinear(v, *lines[s]) for s in pair)
            rep.add(f"thm11.{quad}.vertex.{vname}", ok, f"{pair[0]} . {pair[1]}")

    for l1, l2 in (("AP", "D0Q'"), ("AQ", "D0A0'"), ("D0Q", "AP'"), ("D0A0", "AQ'")):
        same = join(*lines[l1]) == join(*lines[l2])
        rep.check(f"thm11.parallel.{l1}||{l2}",
                  lambda l1=l1, l2=l2: (_parallel_claim(lines[l1], lines[l2]),
                                        "identical lines" if same else None))
    rep.add("thm11.N1=mid(E0F0)=mid(AD0)", cfg.N1 == midpoint(E0, F0) == midpoint(A, D0))
    return rep


_SIDES = (("A", A, "D0", D0, "D", "D3", "Md", "E", "F"),
          ("B", B, "E0", E0, "E", "E3", "Me", "D", "F"),
          ("C", C, "F0", F0, "F", "F3", "Mf", "D", "E"))


def verify_section2(p: BaryPoint, cfg: Configuration | None = None) -> Report:
    cfg = cfg or build_configuration(p)
    rep = Report(p)

    def P(name):
        return getattr(cfg, name)

    q = cfg.Q
    for vname, v, mname, m0, t, t3, mk, s1, s2 in _SIDES:
        rep.add(f"thm21.Q_on_{mname}{mk}", collinear(m0, P(mk), q))
        rep.add(f"cor22.K({t3})={mk}", complement(P(t3)) == P(mk))
        rep.check(f"cor22.{mname}Q||{vname}P'",
                  lambda m0=m0, v=v: parallel(join(m0, q), join(v, cfg.P_prime)))
        rep.add(f"isotomic.{t3}_on_{vname}P'", collinear(v, P(t3), cfg.P_prime))
    for (vname, v, *_), a0, (s, t) in zip(_SIDES, ("A0", "B0", "C0"),
                                          (("E", "F"), ("D", "F"), ("D", "E"))):
        rep.add(f"thm23.{a0}=mid({s}{t})", P(a0) == midpoint(P(s), P(t)))
        rep.add(f"thm23.Q_on_{vname}{a0}", collinear(v, P(a0), q))

    if not cfg.p_infinite:
        r, m = cfg.R, cfg.M
        rep.add("cor24b.D0,R,A0,M_collinear", all_collinear([D0, r, cfg.A0, m]))
        rep.add("cor24b.M=K(Q')", m == complement(cfg.Q_prime))
        rep.add("cor24b.M=mid(D0R)", half_turn(m, D0) == r)
    else:
        # mirror of the P'-infinite statement: Q', Md', D0, A0', K(A0') collinear
        rep.add("cor24c'.Q',Md',D0,A0,K(A0')_collinear",
                all_collinear([cfg.Q_prime, cfg.Md_prime, D0, cfg.A0, complement(cfg.A0_prime)]))
    if not cfg.p_prime_infinite:
        rep.add("cor24b'.D0,R',A0',M'_collinear", all_collinear([D0, cfg.R_prime, cfg.A0_prime, cfg.M_prime]))
        rep.add("cor24b'.M'=mid(D0R')", half_turn(cfg.M_prime, D0) == cfg.R_prime)
    else:
        rep.add("cor24c.Q,Md,D0,A0',K(A0)_collinear",
                all_collinear([q, cfg.Md, D0, cfg.A0_prime, complement(cfg.A0)]))
    if not (cfg.p_infinite or cfg.p_prime_infinite):
        rep.check("cor24a.congruent_quads", lambda: congruent_quads(
            DEFAULT_TRIANGLE, (cfg.R, cfg.A0, q, cfg.Md),
            (cfg.Q_prime, cfg.A0_prime, cfg.R_prime, cfg.Md_prime)))
    return rep


def _harmonic_claim(d, d3, d2, ha):
    if d == d3:
        return d2 == ha == d, "degenerate: D = D3, all four points coincide"
    if d2 in (d, d3):
        return ha == d2, "degenerate: D2 is a base point"
    cr = cross_ratio(d, d3, d2, ha)
    return cr == -1 and harmonic_conjugate(d, d3, d2) == ha, f"cross ratio {cr}"


def verify_section3(p: BaryPoint, cfg: Configuration | None = None) -> Report:
    cfg = cfg or build_configuration(p)
    rep = Report(p)
    q, o, h = cfg.Q, cfg.O, cfg.H
    for (vname, v, mname, m0, t, *_), ht in zip(_SIDES, (cfg.Ha, cfg.Hb, cfg.Hc)):
        tr = getattr(cfg, t)
        if o == m0:
            rep.add(f"def31.O{mname}||Q{t}", True, f"degenerate: O = {mname}")
        else:
            rep.check(f"def31.O{mname}||Q{t}", lambda m0=m0, tr=tr: parallel(join(o, m0), join(q, tr)))
        if h == v:
            rep.add(f"def31.H{vname}||Q{t}", True, f"degenerate: H = {vname}")
        else:
            rep.check(f"def31.H{vname}||Q{t}", lambda v=v, tr=tr: parallel(join(h, v), join(q, tr)))

    x, y, z = p
    s = x * y + x * z + y * z
    closed_o = BaryPoint(x * (y + z) ** 2 * (s - x * x), y * (x + z) ** 2 * (s - y * y),
                         z * (x + y) ** 2 * (s - z * z))
    tpp = map_from_correspondence((A, B, C), (cfg.D3, cfg.E3, cfg.F3))
    rep.add("thm32.O_matrix_route=closed_form", apply(tp_prime_inverse(p), complement(q)) == closed_o == o)
    rep.add("thm32.O_via_inverse_cevian_map", apply(invert(tpp), complement(q)) == o)
    rep.add("thm32.closed_inverse~inverse_cevian_map", tp_prime_inverse(p).proportional_to(invert(tpp)))
    rep.add("thm32.H=K^-1(O)", h == anticomplement(o))
    if cfg.p_prime_infinite:
        rep.add("thm32.infinite.O=H=Q", o == h == q)
    else:
        rep.check("thm32.remark.H=T_L^-1(Q)", lambda: remark_check_tl(p))

    tp = cevian_map(p)
    pp = cfg.P_prime
    rep.add("fixed.T_P(Q)=Q", apply(tp, q) == q)
    rep.add("fixed.T_P'(Q)=P'", apply(tpp, q) == pp)
    rep.add("fixed.T_P'(K(P'))=P'", apply(tpp, complement(pp)) == pp)
    rep.check("fixed.AQ||A3'P'", lambda: parallel(join(A, q), join(cfg.A3_prime, pp)))
    s_prime = compose(tpp, tp)
    rep.add("fixed.S'_fixes_directions",
            all(apply(s_prime, d) == d for d in (BaryPoint(1, -1, 0), BaryPoint(0, 1, -1))))

    for (vname, v, mname, m0, t, t3, *_), t2, ht in zip(
            _SIDES, ("D2", "E2", "F2"), ("Ha", "Hb", "Hc")):
        rep.check(f"thm34.H({t}{t3},{t2}{ht})", lambda t=t, t3=t3, t2=t2, ht=ht: _harmonic_claim(
            getattr(cfg, t), getattr(cfg, t3), getattr(cfg, t2), getattr(cfg, ht)))
    return rep


def verify_all(p: BaryPoint) -> Report:
    cfg = build_configuration(p)
    return verify_halfturn(p, cfg).merge(verify_section2(p, cfg)).merge(verify_section3(p, cfg))


def suite_points(seed: int, count: int, bound: int) -> list[BaryPoint]:
    """Random samples plus the fixed infinite-branch probes."""
    return list(STEINER_PROBES) + list(INFINITE_P_PROBES) + sample_valid_p(seed, count, bound)


def run_suite(points: Iterable[BaryPoint]) -> list[Report]:
    return [verify_all(p) for p in points]
