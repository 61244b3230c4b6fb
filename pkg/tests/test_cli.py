"""Exit codes, report shape and determinism of the command line tool."""

import json
import subprocess
import sys

import pytest

from natred import catalog


def run_cli(*args):
    proc = subprocess.run([sys.executable, "-m", "natred.cli"] + list(args),
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    root = tmp_path_factory.mktemp("cli")
    paths = {}
    e = catalog.build("d5b1")
    paths["form5"] = root / "form5.json"
    paths["form5"].write_text(json.dumps(e.T.to_json_dict()))
    paths["form7"] = root / "form7.json"
    paths["form7"].write_text(json.dumps(
        {"dim": 7, "terms": [{"idx": [1, 2, 3], "c": 1.0}]}))
    paths["bad"] = root / "bad.json"
    paths["bad"].write_text("{not json")
    m = catalog.build("stiefel")
    paths["model"] = root / "model.json"
    paths["model"].write_text(json.dumps(m.model.to_json_dict()))
    d = m.model.to_json_dict()
    del d["lambda"]
    paths["nolam"] = root / "nolam.json"
    paths["nolam"].write_text(json.dumps(d))
    return {k: str(v) for k, v in paths.items()}


def test_classify_report(files):
    rc, out = run_cli("classify", files["form5"])
    assert rc == 0
    rep = json.loads(out)
    assert rep["version"] and rep["seed"] == 0
    assert rep["tolerances"] == {"coeff": 1e-9, "rank": 1e-7}
    assert rep["classification"]["case_label"] == "D5_B1"
    assert len(rep["classification"]["frame"]) == 5


def test_classify_error_exits(files):
    assert run_cli("classify", files["form7"])[0] == 3
    assert run_cli("classify", files["bad"])[0] == 2
    assert run_cli("classify", "/no/such/file.json")[0] == 2


def test_verify_passes(files):
    rc, out = run_cli("verify", files["model"])
    assert rc == 0
    rep = json.loads(out)
    assert rep["all_passed"]
    names = {c["name"]: c["status"] for c in rep["checks"]}
    assert names["jacobi"] == "pass" and names["bianchi"] == "pass"


def test_verify_skips_without_connection(files):
    rc, out = run_cli("verify", files["nolam"])
    assert rc == 0
    rep = json.loads(out)
    statuses = {c["name"]: c["status"] for c in rep["checks"]}
    assert statuses["parallel_torsion"] == "skipped"
    assert statuses["jacobi"] == "pass"


def test_verify_fails_on_broken_model(files, tmp_path):
    d = json.loads(open(files["model"]).read())
    d["algebra"]["brackets"][0]["c"] += 0.1
    p = tmp_path / "broken.json"
    p.write_text(json.dumps(d))
    rc, out = run_cli("verify", str(p))
    assert rc == 1
    rep = json.loads(out)
    assert not rep["all_passed"]


def test_catalog_list():
    rc, out = run_cli("catalog", "list")
    assert rc == 0
    rep = json.loads(out)
    assert set(rep["families"]) == set(catalog.names())


def test_catalog_build_flags_and_exit_codes():
    rc, out = run_cli("catalog", "build", "stiefel", "--param", "r=1",
                      "a=1.3333333333", "b=1.3333333333")
    assert rc == 0
    assert json.loads(out)["entry"]["expected"]["einstein"] is True
    rc, out = run_cli("catalog", "build", "d2", "--param", "alpha=-1",
                      "alpha_prime=0", "beta=1")
    assert rc == 0
    assert json.loads(out)["entry"]["expected"]["nearly_kaehler"] is True
    assert run_cli("catalog", "build", "nosuch")[0] == 4
    rc, out = run_cli("catalog", "build", "d5b1", "--param", "rho=1",
                      "lambda=1")
    assert rc == 5
    assert json.loads(out)["violated_constraint"] == "rho != lambda"


def test_deterministic_output(files):
    outs = {run_cli("classify", files["form5"])[1] for _ in range(2)}
    outs |= {run_cli("catalog", "build", "s3s3")[1] for _ in range(2)}
    assert len(outs) == 2        # one distinct byte string per command


def test_text_format(files):
    rc, out = run_cli("classify", files["form5"], "--format", "text")
    assert rc == 0
    assert 'classification.case_label = "D5_B1"' in out
