import json
import random
from pathlib import Path

import pytest

from halfturn.constructions import build_configuration
from halfturn.errors import ProofFailed, UnknownName
from halfturn.kernel import BaryPoint
from halfturn.poly import MultiPoly, x, y, z
from halfturn.symbolic import (
    THEOREMS,
    Identity,
    ProofReport,
    SymPoint,
    anticomplement,
    complement,
    h_closed_form,
    isotomic,
    o_closed_form,
    prove_all,
    prove_proportional,
    prove_theorem,
    q_closed_form,
    sym_configuration,
)
from halfturn.verify import sample_valid_p

GOLDEN = Path(__file__).parent / "golden"
P = SymPoint.of(x, y, z)


@pytest.fixture(scope="module")
def cfg():
    return sym_configuration()


def test_named_forms(cfg):
    assert cfg["Q"].coords == (x * (y + z), y * (x + z), z * (x + y))
    assert cfg["D0"].coords == (0, 1, 1)
    assert cfg["N1"].coords == (2, 1, 1)
    xpp = x * y + x * z + y * z - x * x
    assert prove_proportional(cfg["O"], SymPoint.of(x * (y + z) ** 2 * xpp, 0 * x, 0 * x)).status == "failed"
    assert o_closed_form()[0] == x * (y + z) ** 2 * xpp


def test_prove_proportional_examples():
    assert prove_proportional(P, P).status == "proved"
    scaled = SymPoint(tuple(v * x * y * z for v in complement(isotomic(P))))
    assert prove_proportional(q_closed_form(), scaled).status == "proved"
    assert prove_proportional(anticomplement(o_closed_form()), h_closed_form()).status == "proved"
    assert prove_proportional(P, SymPoint.of(y, x, z)).status == "failed"


def test_symbolic_point_rejects_zero():
    with pytest.raises(ValueError):
        SymPoint.of(0, 0, 0)


@pytest.mark.parametrize("name", list(THEOREMS))
def test_every_theorem_proves(name, cfg):
    report = prove_theorem(name, cfg)
    assert report.status == "proved"
    assert report.identities
    assert all(i.degree >= 0 for i in report.identities)


def test_unknown_theorem():
    with pytest.raises(UnknownName):
        prove_theorem("bogus")


def test_proof_failed_carries_polynomial(monkeypatch):
    bogus = Identity("x = y", (x - y,), 1)
    monkeypatch.setitem(THEOREMS, "bogus", lambda _cfg: [bogus])
    with pytest.raises(ProofFailed) as info:
        prove_theorem("bogus")
    assert info.value.label == "x = y"
    assert info.value.polynomial == x - y
    assert info.value.report.status == "failed"


def test_report_json_shape():
    r = ProofReport("t", [Identity("one", (MultiPoly(),), 2)])
    assert json.loads(r.to_json()) == {"theorem": "t", "identities": [
        {"label": "one", "degree": 2, "vanishes": True}], "status": "proved"}


def test_reports_are_deterministic():
    first = [r.to_dict() for r in prove_all()]
    second = [r.to_dict() for r in prove_all()]
    assert first == second
    assert json.loads((GOLDEN / "prove_all.json").read_text()) == first


def _proportional_ints(u, v):
    return (u[0] * v[1] - u[1] * v[0], u[1] * v[2] - u[2] * v[1], u[0] * v[2] - u[2] * v[0]) == (0, 0, 0)


def test_evaluation_matches_numeric_pipeline(cfg):
    # each symbolic point, evaluated at a sample, lands on the numeric point
    samples = sample_valid_p(11, 12, 20)
    names = list(cfg)
    checked = {n: 0 for n in names}
    for p in samples:
        num = build_configuration(p).to_dict()
        env = {"x": p[0], "y": p[1], "z": p[2]}
        for name in names:
            if name not in num:
                continue
            val = cfg[name].evaluate(env)
            if val == (0, 0, 0):
                continue  # symbolic scale vanished at this sample
            assert _proportional_ints(val, BaryPoint.parse(num[name])), name
            checked[name] += 1
    assert all(v >= 10 for v in checked.values()), checked


def test_identities_vanish_at_random_samples(cfg):
    rng = random.Random(3)
    for name in THEOREMS:
        for ident in prove_theorem(name, cfg).identities:
            for _ in range(10):
                env = {k: rng.randint(-9, 9) for k in "xyzabc"}
                assert all(p.evaluate(env) == 0 for p in ident.polys), ident.label
