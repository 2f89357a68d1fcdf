import json
import os
import subprocess

import pytest

CLI = os.environ.get("LOCC_CLI")

pytestmark = pytest.mark.skipif(not CLI, reason="LOCC_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def test_verify_paper(tmp_path):
    r = run("verify-paper")
    assert r.returncode == 0, r.stdout + r.stderr
    assert "8/8 checks passed" in r.stdout
    assert "-631663/1000000000" in r.stdout
    assert "-3/500000" in r.stdout

    doc = json.loads(run("verify-paper", "--format", "json").stdout)
    assert doc["all_passed"]


def test_verify_paper_corrupted_fixture(tmp_path):
    bad = write(tmp_path, "bad.txt", "0.493 0.284 0.158 0.035 0.030\n0.493 0.284 0.158 0.035 0.030\n")
    r = run("verify-paper", "--fixtures", bad)
    assert r.returncode == 1
    assert "FAIL" in r.stdout


def test_check_paper_pair(tmp_path):
    psi = write(tmp_path, "psi.txt", "# psi\n0.493, 0.284, 0.158, 0.035, 0.030\n")
    phi = write(tmp_path, "phi.txt", "0.598 0.145 0.129 0.125 0.003\n")
    r = run("check", psi, phi, "--k", "1,2,3", "--format", "json")
    assert r.returncode == 1
    doc = json.loads(r.stdout)
    verdicts = {v["k"]: v for v in doc["verdicts"]}
    assert not verdicts[1]["holds"]
    assert verdicts[2]["holds"]
    assert not verdicts[3]["holds"] and verdicts[3]["first_violation"] == 22

    assert run("check", psi, phi, "--k", "2").returncode == 0
    assert run("check", psi, phi, "--k", "2", "--mode", "float").returncode == 0


def test_check_identical_and_mismatch(tmp_path):
    a = write(tmp_path, "a.txt", "0.5 0.3 0.2\n")
    b = write(tmp_path, "b.txt", "0.6 0.4\n")
    assert run("check", a, a, "--k", "1,2,3").returncode == 0
    mismatch = run("check", a, b)
    assert mismatch.returncode == 2
    assert run("check", b, a, "--embed").returncode == 1
    assert run("check", a, b, "--embed").returncode == 0


def test_bad_input_is_usage_error(tmp_path):
    a = write(tmp_path, "a.txt", "0.5 abc\n")
    assert run("check", a, a).returncode == 2
    assert run("search", "--samples", "0").returncode == 2
    assert run("search", "--dim", "6", "--k-fail", "2").returncode == 2
    assert run("search", "--mode", "fancy").returncode == 2
    assert run("nonsense").returncode == 2


def test_search_json_csv_and_pairs(tmp_path):
    out = str(tmp_path / "r.json")
    pairs = str(tmp_path / "pairs.txt")
    r = run("search", "--dim", "6", "--samples", "100000", "--seed", "7", "--out", out, "--pairs-out", pairs)
    assert r.returncode == 0, r.stderr
    doc = json.load(open(out))
    csv = run("search", "--dim", "6", "--samples", "100000", "--seed", "7", "--format", "csv").stdout
    header, row = csv.strip().splitlines()
    fields = dict(zip(header.split(","), row.split(",")))
    assert int(fields["n_event_I"]) == doc["n_event_I"]
    assert int(fields["n_event_II_given_I"]) == doc["n_event_II_given_I"]
    assert float(fields["fraction_I"]) == doc["fraction_I"]
    lines = [l for l in open(pairs) if not l.startswith("#")]
    assert len(lines) == 2 * len(doc["counterexamples"])


def test_search_determinism_across_threads(tmp_path):
    docs = []
    for threads in ("1", "8"):
        r = run("search", "--dim", "6", "--samples", "100000", "--seed", "7", "--threads", threads)
        assert r.returncode == 0
        doc = json.loads(r.stdout)
        doc.pop("duration_seconds")
        docs.append(json.dumps(doc, sort_keys=True))
    assert docs[0] == docs[1]


def test_search_d3(tmp_path):
    doc = json.loads(run("search", "--dim", "3", "--samples", "100000").stdout)
    assert doc["n_event_I"] == 0
