import json
import subprocess
import sys

import pytest

from cuboidgeom.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, run


def invoke(argv, tmp_path, name="out.json"):
    out = tmp_path / name
    code = run(argv + ["--out", str(out)])
    return code, json.loads(out.read_text()), out.read_bytes()


def test_gb_command(tmp_path):
    code, rep, _ = invoke(["gb", "--vars", "x,y", "x^2 - y", "x*y - 1", "--order", "lex"], tmp_path)
    assert code == EXIT_OK
    assert rep["claims"][0]["status"] == "PASS"
    assert rep["command"] == "gb"


def test_gb_file(tmp_path):
    f = tmp_path / "sys.txt"
    f.write_text("x, y\nx^2 + y^2 - 1\nx - y\n")
    code, rep, _ = invoke(["gb", "--file", str(f), "--field", "10007"], tmp_path)
    assert code == EXIT_OK and len(rep["artifacts"]["basis"]) == 2


@pytest.mark.parametrize("argv", [
    ["gb", "--vars", "x", "y"],
    ["gb"],
    ["census", "W"],
    ["milnor", "no_such_file"],
    ["nonsense"],
    [],
])
def test_usage_errors(argv, capsys):
    try:
        code = run(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == EXIT_USAGE


@pytest.mark.parametrize("argv", [["lemma21"], ["census", "upsilon"], ["census", "V"], ["phi-check", "--samples", "50"]])
def test_commands_pass_and_are_deterministic(argv, tmp_path):
    c1, rep, b1 = invoke(argv + ["--seed", "5"], tmp_path, "a.json")
    c2, _, b2 = invoke(argv + ["--seed", "5"], tmp_path, "b.json")
    assert c1 == c2 == EXIT_OK
    assert b1 == b2
    assert all(c["status"] in ("PASS", "INFO") for c in rep["claims"])


def test_milnor_suite(tmp_path):
    code, rep, _ = invoke(["milnor", "suite"], tmp_path)
    assert code == EXIT_OK


def test_milnor_file(tmp_path):
    f = tmp_path / "f.txt"
    f.write_text("x, y, z\nx^2 + y^3 + z^5\n")
    code, rep, _ = invoke(["milnor", str(f)], tmp_path)
    assert code == EXIT_OK
    assert rep["claims"][0]["value"] == 8


def test_budget_state_and_resume(tmp_path):
    state = tmp_path / "hv.pkl"
    code, rep, _ = invoke(["milnor", "H_V", "--budget-steps", "300", "--jet-cap", "5",
                           "--state-out", str(state)], tmp_path, "a.json")
    assert code == EXIT_BUDGET and state.exists()
    code, rep2, _ = invoke(["milnor", "H_V", "--budget-steps", "600", "--jet-cap", "5",
                            "--resume", str(state)], tmp_path, "b.json")
    assert code == EXIT_BUDGET
    assert rep2["claims"][0]["status"] == "BUDGET"


def test_pi1_report_budget(tmp_path):
    code, rep, _ = invoke(["pi1-report", "--budget-steps", "300", "--jet-cap", "5"], tmp_path)
    assert code == EXIT_BUDGET
    ids = {c["id"]: c["status"] for c in rep["claims"]}
    assert ids["pi1.discrepancy_note"] == "PASS"
    assert all(ids[f"pi1.N{k}.H1"] == "PASS" for k in range(2, 11))


def test_face_search(tmp_path):
    code, rep, _ = invoke(["face-search", "--bound", "700"], tmp_path)
    assert code == EXIT_OK


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cuboidgeom", "lemma21", "--trials", "1"],
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["command"] == "lemma21"
