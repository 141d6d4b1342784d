"""Polynomial-identity proofs of the configuration theorems for generic P.

Every construction is carried out on homogeneous triples of polynomials in
``x, y, z`` (and ``a, b, c`` for the side-length identities).  Midpoints and
half-turns use weight-scaled forms so nothing ever leaves the polynomial
ring.  Projective equality is proportionality: all 2x2 minors vanish.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .centers import gergonne_coords, nagel_coords, x6600_coords, x6601_coords
from .errors import ProofFailed, UnknownName
from .poly import MultiPoly, a, b, c, x, y, z

ZERO = MultiPoly()
ONE = MultiPoly.const(1)


@dataclass(frozen=True)
class SymPoint:
    coords: tuple[MultiPoly, MultiPoly, MultiPoly]

    def __post_init__(self):
        coords = tuple(MultiPoly._lift(v) for v in self.coords)
        if len(coords) != 3:
            raise ValueError("SymPoint needs three coordinates")
        if all(v.is_zero() for v in coords):
            raise ValueError("SymPoint is identically (0, 0, 0)")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, *coords) -> "SymPoint":
        return cls(tuple(coords))

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    @property
    def weight(self) -> MultiPoly:
        return self.coords[0] + self.coords[1] + self.coords[2]

    def degree(self) -> int:
        return max(v.degree() for v in self.coords)

    def evaluate(self, values) -> tuple:
        return tuple(v.evaluate(values) for v in self.coords)


SymMatrix = tuple[tuple[MultiPoly, ...], ...]


def cross(u, v) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def dot(u, v) -> MultiPoly:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det(u, v, w) -> MultiPoly:
    return dot(u, cross(v, w))


def join(p: SymPoint, q: SymPoint) -> SymPoint:
    return SymPoint(cross(p, q))


meet = join


def midpoint(p: SymPoint, q: SymPoint) -> SymPoint:
    sp, sq = p.weight, q.weight
    return SymPoint(tuple(sq * u + sp * v for u, v in zip(p, q)))


def half_turn(n: SymPoint, p: SymPoint) -> SymPoint:
    sn, sp = n.weight, p.weight
    return SymPoint(tuple(2 * sp * u - sn * v for u, v in zip(n, p)))


def complement(p: SymPoint) -> SymPoint:
    u, v, w = p
    return SymPoint.of(v + w, w + u, u + v)


def anticomplement(p: SymPoint) -> SymPoint:
    u, v, w = p
    return SymPoint.of(v + w - u, w + u - v, u + v - w)


def isotomic(p: SymPoint) -> SymPoint:
    u, v, w = p
    return SymPoint.of(v * w, w * u, u * v)


def apply(m: SymMatrix, p: SymPoint) -> SymPoint:
    return SymPoint(tuple(dot(row, p) for row in m))


def matmul(m1: SymMatrix, m2: SymMatrix) -> SymMatrix:
    return tuple(tuple(sum((m1[i][k] * m2[k][j] for k in range(3)), ZERO) for j in range(3))
                 for i in range(3))


def adjugate(m: SymMatrix) -> SymMatrix:
    """Inverse up to the scalar factor det(m)."""
    out = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r1, r2 = [k for k in range(3) if k != j]
            c1, c2 = [k for k in range(3) if k != i]
            minor = m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]
            out[i][j] = minor if (i + j) % 2 == 0 else -minor
    return tuple(tuple(row) for row in out)


def _lift_matrix(rows) -> SymMatrix:
    return tuple(tuple(MultiPoly._lift(v) for v in row) for row in rows)


def map_from_correspondence(src: Sequence[SymPoint], dst: Sequence[SymPoint]) -> SymMatrix:
    """Affine map src[i] -> dst[i], up to a global polynomial factor.

    Each column is scaled by the product of the *other* weights, which is the
    same global factor as dividing every column by its own weight.
    """
    def scaled_columns(points):
        ws = [p.weight for p in points]
        cols = [[v * ws[(i + 1) % 3] * ws[(i + 2) % 3] for v in p] for i, p in enumerate(points)]
        return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))

    return matmul(scaled_columns(dst), adjugate(scaled_columns(src)))


K = _lift_matrix([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
A = SymPoint.of(ONE, ZERO, ZERO)
B = SymPoint.of(ZERO, ONE, ZERO)
C = SymPoint.of(ZERO, ZERO, ONE)
LINE_AT_INFINITY = SymPoint.of(ONE, ONE, ONE)
D0 = SymPoint.of(0, 1, 1)
E0 = SymPoint.of(1, 0, 1)
F0 = SymPoint.of(1, 1, 0)
ANTICOMPLEMENTARY = (SymPoint.of(-1, 1, 1), SymPoint.of(1, -1, 1), SymPoint.of(1, 1, -1))
P_GENERIC = SymPoint.of(x, y, z)


def cevian_traces(p: SymPoint):
    u, v, w = p
    return SymPoint.of(0, v, w), SymPoint.of(u, 0, w), SymPoint.of(u, v, 0)


def q_closed_form(p: SymPoint = P_GENERIC) -> SymPoint:
    u, v, w = p
    return SymPoint.of(u * (v + w), v * (u + w), w * (u + v))


def _double_primes(p: SymPoint):
    u, v, w = p
    s = u * v + u * w + v * w
    return s - u * u, s - v * v, s - w * w


def o_closed_form(p: SymPoint = P_GENERIC) -> SymPoint:
    u, v, w = p
    xx, yy, zz = _double_primes(p)
    return SymPoint.of(u * (v + w) ** 2 * xx, v * (u + w) ** 2 * yy, w * (u + v) ** 2 * zz)


def h_closed_form(p: SymPoint = P_GENERIC) -> SymPoint:
    u, v, w = p
    xx, yy, zz = _double_primes(p)
    return SymPoint.of(u * yy * zz, v * xx * zz, w * xx * yy)


def tp_prime_inverse_closed_form(p: SymPoint = P_GENERIC) -> SymMatrix:
    q = q_closed_form(p)
    return tuple(tuple((-p[j] if i == j else p[j]) * q[i] for j in range(3)) for i in range(3))


def sym_configuration() -> dict[str, SymPoint]:
    """Every named point for P = (x:y:z), keyed like the numeric configuration."""
    p = P_GENERIC
    pp = isotomic(p)
    q = complement(pp)
    qp = complement(p)
    d, e, f = cevian_traces(p)
    d3, e3, f3 = half_turn(D0, d), half_turn(E0, e), half_turn(F0, f)
    tp = map_from_correspondence((A, B, C), (d, e, f))
    tpp = map_from_correspondence((A, B, C), (d3, e3, f3))
    o = o_closed_form(p)
    h = h_closed_form(p)
    bc, ca, ab = join(B, C), join(C, A), join(A, B)
    return {
        "P": p, "P'": pp, "Q": q, "Q'": qp,
        "D": d, "E": e, "F": f, "D3": d3, "E3": e3, "F3": f3,
        "D0": D0, "E0": E0, "F0": F0,
        "Md": midpoint(A, d), "Me": midpoint(B, e), "Mf": midpoint(C, f),
        "Md'": midpoint(A, d3),
        "N1": midpoint(A, D0),
        "A0": apply(tp, D0), "B0": apply(tp, E0), "C0": apply(tp, F0),
        "A0'": apply(tpp, D0), "B0'": apply(tpp, E0), "C0'": apply(tpp, F0),
        "A3'": apply(tpp, d), "B3'": apply(tpp, e), "C3'": apply(tpp, f),
        "O": o, "H": h,
        "D2": meet(join(A, q), bc), "E2": meet(join(B, q), ca), "F2": meet(join(C, q), ab),
        "Ha": meet(join(A, h), bc), "Hb": meet(join(B, h), ca), "Hc": meet(join(C, h), ab),
        "R": midpoint(A, p), "R'": midpoint(A, pp),
        "M": complement(qp), "M'": complement(q),
    }


# ---------------------------------------------------------------------------
# proof reports


@dataclass
class Identity:
    label: str
    polys: tuple[MultiPoly, ...]
    degree: int

    @property
    def vanishes(self) -> bool:
        return all(p.is_zero() for p in self.polys)

    def first_nonzero(self):
        return next((p for p in self.polys if not p.is_zero()), None)


@dataclass
class ProofReport:
    theorem: str
    identities: list[Identity] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "proved" if all(i.vanishes for i in self.identities) else "failed"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "identities": [{"label": i.label, "degree": i.degree, "vanishes": i.vanishes}
                           for i in self.identities],
            "status": self.status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _proportional(label: str, u, v) -> Identity:
    du = max(p.degree() for p in u)
    dv = max(p.degree() for p in v)
    return Identity(label, cross(u, v), du + dv)


def _vanishing(label: str, poly: MultiPoly, degree: int) -> Identity:
    return Identity(label, (poly,), degree)


def _collinear(label: str, p: SymPoint, q: SymPoint, r: SymPoint) -> Identity:
    return _vanishing(label, det(p, q, r), p.degree() + q.degree() + r.degree())


def _parallel(label: str, l: SymPoint, m: SymPoint) -> Identity:
    # lines are parallel when they meet on x + y + z = 0
    return _vanishing(label, meet(l, m).weight, l.degree() + m.degree())


def _matrix_proportional(label: str, m1: SymMatrix, m2: SymMatrix) -> Identity:
    u = [v for row in m1 for v in row]
    w = [v for row in m2 for v in row]
    k = next(i for i in range(9) if not u[i].is_zero())
    polys = tuple(u[k] * w[j] - w[k] * u[j] for j in range(9))
    deg = max(v.degree() for v in u) + max(v.degree() for v in w)
    return Identity(label, polys, deg)


def prove_proportional(u: SymPoint, v: SymPoint, label: str = "proportional") -> ProofReport:
    polys = cross(u, v)
    deg = u.degree() + v.degree()
    return ProofReport(label, [Identity(f"cross[{i}]", (p,), deg) for i, p in enumerate(polys)])


def _halfturn(cfg):
    p, q, qp, pp = cfg["P"], cfg["Q"], cfg["Q'"], cfg["P'"]
    names = ("A", "R", "Md", "Q", "A0", "D0")
    names_p = ("D0", "Q'", "Md'", "R'", "A0'", "A")
    pts = dict(cfg, A=A, D0=D0)
    n1 = cfg["N1"]
    out = [_proportional(f"half-turn about N1 maps {s} to {t}", half_turn(n1, pts[s]), pts[t])
           for s, t in zip(names, names_p)]
    # each vertex of a quadrilateral lies on the two sides that define it
    lines = {
        "AP": (A, p), "AQ": (A, q), "D0Q": (D0, q), "D0A0": (D0, cfg["A0"]),
        "D0Q'": (D0, qp), "D0A0'": (D0, cfg["A0'"]), "AP'": (A, pp), "AQ'": (A, qp),
    }
    incidences = (
        ("R", "AP"), ("R", "D0A0"), ("Md", "AP"), ("Md", "D0Q"),
        ("Q", "AQ"), ("Q", "D0Q"), ("A0", "AQ"), ("A0", "D0A0"),
        ("Q'", "D0Q'"), ("Q'", "AQ'"), ("Md'", "D0Q'"), ("Md'", "AP'"),
        ("R'", "AP'"), ("R'", "D0A0'"), ("A0'", "D0A0'"), ("A0'", "AQ'"),
    )
    for vertex, line in incidences:
        out.append(_collinear(f"{vertex} lies on {line}", pts[vertex], *lines[line]))
    return out


def _parallels(cfg):
    p, q, qp, pp = cfg["P"], cfg["Q"], cfg["Q'"], cfg["P'"]
    return [
        _parallel("AP || D0Q'", join(A, p), join(D0, qp)),
        _parallel("AQ || D0A0'", join(A, q), join(D0, cfg["A0'"])),
        _parallel("D0Q || AP'", join(D0, q), join(A, pp)),
        _parallel("D0A0 || AQ'", join(D0, cfg["A0"]), join(A, qp)),
    ]


_VERTS = (("A", A, "D0", "Md", "D", "D3"), ("B", B, "E0", "Me", "E", "E3"),
          ("C", C, "F0", "Mf", "F", "F3"))


def _thm21(cfg):
    q = cfg["Q"]
    return [_collinear(f"Q lies on {m0}{mk}", cfg[m0], cfg[mk], q) for _, _, m0, mk, _, _ in _VERTS]


def _thm23(cfg):
    q = cfg["Q"]
    out = []
    for (vname, v, _, _, _, _), a0, (s, t) in zip(_VERTS, ("A0", "B0", "C0"),
                                                  (("E", "F"), ("D", "F"), ("D", "E"))):
        out.append(_proportional(f"{a0} is the midpoint of {s}{t}", cfg[a0], midpoint(cfg[s], cfg[t])))
        out.append(_collinear(f"Q lies on {vname}{a0}", v, cfg[a0], q))
    return out


def _cor22(cfg):
    out = []
    for vname, v, m0, mk, _, t3 in _VERTS:
        out.append(_proportional(f"K({t3}) = {mk}", complement(cfg[t3]), cfg[mk]))
        out.append(_parallel(f"{m0}Q || {vname}P'", join(cfg[m0], cfg["Q"]), join(v, cfg["P'"])))
    return out


def _cor24b(cfg):
    return [
        _collinear("D0, R, A0 collinear", D0, cfg["R"], cfg["A0"]),
        _collinear("D0, R, M collinear", D0, cfg["R"], cfg["M"]),
        _proportional("M is the midpoint of D0R", half_turn(cfg["M"], D0), cfg["R"]),
        _collinear("D0, R', A0' collinear", D0, cfg["R'"], cfg["A0'"]),
        _collinear("D0, R', M' collinear", D0, cfg["R'"], cfg["M'"]),
        _proportional("M' is the midpoint of D0R'", half_turn(cfg["M'"], D0), cfg["R'"]),
    ]


def _o_formula(cfg):
    p, q, pp = cfg["P"], cfg["Q"], cfg["P'"]
    tp = map_from_correspondence((A, B, C), cevian_traces(p))
    tpp = map_from_correspondence((A, B, C), (cfg["D3"], cfg["E3"], cfg["F3"]))
    closed_inv = tp_prime_inverse_closed_form(p)
    o_matrix = apply(closed_inv, apply(K, q))
    o = cfg["O"]
    out = [
        _proportional("matrix route O = closed form O", o_matrix, o),
        _matrix_proportional("closed-form inverse = adjugate of cevian map of P'", closed_inv, adjugate(tpp)),
        _proportional("O = inverse cevian map of P' applied to K(Q)", apply(adjugate(tpp), apply(K, q)), o),
    ]
    for vname, _, m0, _, t, _ in _VERTS:
        out.append(_parallel(f"O{m0} || Q{t}", join(o, cfg[m0]), join(q, cfg[t])))
    out.append(_proportional("cevian map of P fixes Q", apply(tp, q), q))
    out.append(_proportional("cevian map of P' sends Q to P'", apply(tpp, q), pp))
    out.append(_proportional("cevian map of P' sends K(P') to P'", apply(tpp, complement(pp)), pp))
    out.append(_parallel("AQ || A3'P'", join(A, q), join(cfg["A3'"], pp)))
    s_prime = matmul(tpp, tp)
    for d in (SymPoint.of(1, -1, 0), SymPoint.of(0, 1, -1)):
        out.append(_proportional(f"S' fixes direction {':'.join(map(str, d))}", apply(s_prime, d), d))
    return out


def _h_formula(cfg):
    q, h = cfg["Q"], cfg["H"]
    out = [_proportional("K^-1(O) = closed form H", anticomplement(cfg["O"]), h)]
    for vname, v, _, _, t, _ in _VERTS:
        out.append(_parallel(f"H{vname} || Q{t}", join(h, v), join(q, cfg[t])))
    l = anticomplement(cfg["P'"])
    a2, b2, c2 = ANTICOMPLEMENTARY
    traces = (meet(join(a2, l), join(b2, c2)), meet(join(b2, l), join(c2, a2)),
              meet(join(c2, l), join(a2, b2)))
    tl = map_from_correspondence(ANTICOMPLEMENTARY, traces)
    out.append(_proportional("H = T_L^-1(Q) with L = K^-1(P')", apply(adjugate(tl), q), h))
    return out


def _harmonic(label, pa, pb, pc, pd) -> Identity:
    # pc ~ ac*pa + bc*pb, pd ~ ad*pa + bd*pb; harmonic iff bc*ad + ac*bd = 0
    w = cross(pa, pb)
    k = next(i for i in range(3) if not w[i].is_zero())
    ac, bc = cross(pc, pb)[k], cross(pa, pc)[k]
    ad, bd = cross(pd, pb)[k], cross(pa, pd)[k]
    deg = max(v.degree() for v in (ac, bc)) + max(v.degree() for v in (ad, bd))
    on_line = (dot(pc, w), dot(pd, w))
    return Identity(label, (bc * ad + ac * bd,) + on_line, deg)


def _thm34(cfg):
    return [
        _harmonic("H(DD3, D2Ha)", cfg["D"], cfg["D3"], cfg["D2"], cfg["Ha"]),
        _harmonic("H(EE3, E2Hb)", cfg["E"], cfg["E3"], cfg["E2"], cfg["Hb"]),
        _harmonic("H(FF3, F2Hc)", cfg["F"], cfg["F3"], cfg["F2"], cfg["Hc"]),
    ]


def _nagel_centers(_cfg):
    na = SymPoint(nagel_coords(a, b, c))
    ge = SymPoint(gergonne_coords(a, b, c))
    incenter = SymPoint.of(a, b, c)

    def at(point: SymPoint, p: SymPoint) -> SymPoint:
        env = {"x": p[0], "y": p[1], "z": p[2]}
        return SymPoint(tuple(v.subs(env) for v in point))

    return [
        _proportional("O(Nagel) = X(6600)", at(o_closed_form(), na), SymPoint(x6600_coords(a, b, c))),
        _proportional("H(Nagel) = X(6601)", at(h_closed_form(), na), SymPoint(x6601_coords(a, b, c))),
        _proportional("isotomic(Gergonne) = Nagel", isotomic(ge), na),
        _proportional("isotomcomplement(Gergonne) = incenter", at(q_closed_form(), ge), incenter),
        _proportional("O(Gergonne) matrix route = closed form",
                      apply(tp_prime_inverse_closed_form(ge), apply(K, at(q_closed_form(), ge))),
                      at(o_closed_form(), ge)),
    ]


THEOREMS: dict[str, Callable] = {
    "halfturn": _halfturn,
    "parallels": _parallels,
    "thm21": _thm21,
    "thm23": _thm23,
    "cor22": _cor22,
    "cor24b": _cor24b,
    "o_formula": _o_formula,
    "h_formula": _h_formula,
    "thm34": _thm34,
    "nagel_centers": _nagel_centers,
}


def prove_theorem(name: str, cfg: dict[str, SymPoint] | None = None) -> ProofReport:
    try:
        builder = THEOREMS[name]
    except KeyError:
        raise UnknownName(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}") from None
    if cfg is None:
        cfg = sym_configuration()
    report = ProofReport(name, builder(cfg))
    for ident in report.identities:
        if not ident.vanishes:
            raise ProofFailed(report, ident.label, ident.first_nonzero())
    return report


def prove_all() -> list[ProofReport]:
    cfg = sym_configuration()
    return [prove_theorem(name, cfg) for name in THEOREMS]
