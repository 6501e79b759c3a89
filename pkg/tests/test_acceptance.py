"""Acceptance gate: one test per criterion; the terminal summary prints PASS/FAIL per criterion."""

import json
import pickle
import random
import time

import pytest

from cuboidgeom import bielliptic, eulerchar, fundgroup, variety
from cuboidgeom.cli import EXIT_BUDGET, EXIT_OK, run
from cuboidgeom.groebner import is_groebner_basis

pytestmark = pytest.mark.acceptance

PRIMES_3 = (10007, 10009, 10037)


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.t0


def _cli(argv, path):
    code = run(argv + ["--out", str(path)])
    return code, path.read_bytes()


def test_criterion_1_quadric_basis():
    rng = random.Random(2024)
    checked = 0
    with Timer() as t:
        for p in PRIMES_3:
            for _ in range(3):
                h = variety.HyperplaneSpec.random(p, rng)
                values = {"A": rng.randrange(1, p), "B": rng.randrange(1, p)}
                gens, spec = variety.lemma_system(h, p, "base", values)
                R = gens[0].ring
                order = R.make_order(spec)
                lead = {}
                for g in gens:
                    m = g.leading_monomial(order)
                    (name, e), = [(v, e) for v, e in zip(R.variables, m) if e]
                    lead[name] = (e, g.leading_coefficient(order))
                assert lead == {"C": (2, h.gamma % p), "U": (2, 1), "X": (2, 1), "Y": (2, 1), "Z": (2, 1)}
                ok, _ = is_groebner_basis(gens, order)
                assert ok
                assert variety.check_lemma_chart(h, p, "base", values).ok
                checked += 1
            assert variety.verify_lemma_2_1(h, p, trials=1, seed=checked)["all_ok"]
    assert checked >= 9
    assert t.elapsed < 10


def test_criterion_2_order_dependence():
    with Timer() as t:
        rows = {r["order"]: (r["original"], r["replaced"]) for r in variety.order_dependence_check()["rows"]}
    assert rows["lex:Z>Y>X>U"] == (False, True)
    assert rows["lex:U>X>Y>Z"][0] is True
    assert t.elapsed < 5


@pytest.fixture(scope="module")
def censuses():
    return {name: (variety.builtin(name), variety.census(variety.builtin(name), seed=0)) for name in ("upsilon", "V")}


def test_criterion_3_census(censuses):
    up, v = censuses["upsilon"][1], censuses["V"][1]
    assert (up.complex, up.real) == (48, 24)
    assert v.complex == 16
    for name, (spec, res) in censuses.items():
        pre = variety.fp_prepass(spec, variety.DEFAULT_PRIMES, seed=0)
        assert len(pre) == 5 and set(pre.values()) == {res.complex}


def test_criterion_4_odp(censuses):
    for name, (spec, res) in censuses.items():
        c = variety.classify_census(spec, res)
        assert c["points"] == res.complex
        assert c["odp"] == res.complex and not c["exceptions"]


def test_criterion_5_milnor_suite():
    with Timer() as t:
        rows = eulerchar.milnor_suite()
    assert rows and all(r["ok"] and r["standard_basis"] == r["jet"] == r["expected"] for r in rows)
    assert t.elapsed < 60


def test_criterion_6_calibration():
    with Timer() as t:
        rows = eulerchar.calibration_table()
    assert [r["topological_chi"] for r in rows] == [2, 0, 2]
    for r in rows:
        assert set(r["variants"]) == set(eulerchar.VARIANTS)
        for entry in r["variants"].values():
            assert entry["consistent"], (r["name"], entry)
            assert "matches_topology" in entry
    assert t.elapsed < 300


@pytest.mark.parametrize("target", ["H_V", "H_upsilon"])
def test_criterion_7_milnor_targets(target, tmp_path):
    state = tmp_path / "state.pkl"
    code, raw = _cli(["milnor", target, "--budget-steps", "20000", "--jet-cap", "8",
                      "--state-out", str(state)], tmp_path / "a.json")
    rep = json.loads(raw)
    claim = rep["claims"][0]
    if code == EXIT_OK:
        detail = rep["artifacts"]["milnor"]
        assert claim["status"] == "PASS" and detail["mora"] == detail["jet"] == claim["value"]
        return
    assert code == EXIT_BUDGET and claim["status"] == "BUDGET"
    saved = pickle.loads(state.read_bytes())
    before = saved["standard_basis"].steps
    code2, _ = _cli(["milnor", target, "--budget-steps", "25000", "--jet-cap", "8", "--resume", str(state),
                     "--state-out", str(state)], tmp_path / "b.json")
    assert code2 in (EXIT_OK, EXIT_BUDGET)
    assert pickle.loads(state.read_bytes())["standard_basis"].steps > before


def test_criterion_8_phi():
    with Timer() as t:
        sym = bielliptic.symbolic_phi_check()
        assert sym["all_zero"] and sym["iota_invariant_all"]
        samples = bielliptic.sample_report(bielliptic.DEFAULT_PRIMES, samples=500, seed=0)
    assert len(samples["primes"]) == 5 and not samples["skipped"]
    for row in samples["primes"]:
        assert row["samples"] == 500 and row["ok"]
        assert row["on_V"] + row["base_points"] == 500
    assert t.elapsed < 120


def test_criterion_9_groups(censuses):
    with Timer() as t:
        table = fundgroup.nk_abelianization_table(range(2, 11))
        census = {n: {"complex": r.complex, "real": r.real} for n, (_, r) in censuses.items()}
        report = fundgroup.assemble_pi1_report(census, None)
    assert [r["k"] for r in table] == list(range(2, 11)) and all(r["ok"] for r in table)
    assert [e["abelianization"]["text"] for e in report["complex"]] == ["0"] * 4
    for s in ("S1", "S2"):
        ext = report["open_surfaces"][s]
        assert ext["split"] and ext["consistent"]
        assert ext["sequence"] == "1 -> Z^2 -> G -> F_3 -> 1"
    assert fundgroup.DISCREPANCY_NOTE in report["notes"]
    assert t.elapsed < 10


@pytest.mark.parametrize("argv", [
    ["lemma21"], ["census", "upsilon"], ["phi-check", "--samples", "100"], ["milnor", "suite"],
    ["pi1-report", "--budget-steps", "500", "--jet-cap", "5"],
])
def test_criterion_10_determinism(argv, tmp_path):
    _, a = _cli(argv + ["--seed", "11"], tmp_path / "a.json")
    _, b = _cli(argv + ["--seed", "11"], tmp_path / "b.json")
    assert a == b
