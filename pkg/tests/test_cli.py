"""End-to-end command line tests run through subprocesses."""

import json
import os
import subprocess
import sys

import pytest

from octobohr.corpus import build_corpus, save_corpus

VOLATILE = ("timestamp", "runtime_s")


def run_cli(*args, backend="numpy"):
    env = dict(os.environ)
    if backend is not None:
        env["OCTOBOHR_BACKEND"] = backend
    else:
        env.pop("OCTOBOHR_BACKEND", None)
    return subprocess.run(
        [sys.executable, "-m", "octobohr", *args],
        capture_output=True,
        text=True,
        env=env,
        timeout=300,
    )


def canonical(report_doc):
    doc = dict(report_doc)
    for key in VOLATILE:
        doc.pop(key, None)
    return doc


def test_radius_closed_form_output(tmp_path):
    out = tmp_path / "radius.json"
    proc = run_cli(
        "radius", "--theorem", "thm14", "--m", "1.0", "--out", str(out)
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith(
        "theorem thm14: radius 0.33333333333333331 (closed-form, residual 0)"
    )
    doc = json.loads(out.read_text())
    assert doc["schema"] == 1
    assert doc["radius"]["value"] == 1.0 / 3.0
    assert doc["params"]["m"] == 1.0


def test_radius_bracketed_root_output():
    proc = run_cli("radius", "--theorem", "thm17")
    assert proc.returncode == 0
    assert proc.stdout.startswith(
        "theorem thm17: radius 0.24682982621045851 (bracketed-root"
    )


def test_verify_writes_report_and_is_deterministic(tmp_path):
    args = (
        "verify", "--theorem", "thm14", "--corpus", "12", "--grid", "16",
        "--order", "80", "--seed", "3",
    )
    out1 = tmp_path / "report1.json"
    out2 = tmp_path / "report2.json"
    proc1 = run_cli(*args, "--out", str(out1))
    proc2 = run_cli(*args, "--out", str(out2))
    assert proc1.returncode == 0
    assert proc1.stdout.startswith("theorem thm14: radius 0.333333333333,")
    assert "corpus 12, grid 16," in proc1.stdout
    assert "violations 0" in proc1.stdout

    doc1 = json.loads(out1.read_text())
    doc2 = json.loads(out2.read_text())
    assert doc1["schema"] == 1
    assert doc1["violations"] == []
    assert doc1["corpus"]["source"] == "generated"
    assert doc1["backend"] == "numpy"
    assert canonical(doc1) == canonical(doc2)
    assert doc1["timestamp"] != ""


def test_verify_inadmissible_weights_exit_code():
    proc = run_cli(
        "verify", "--theorem", "bs13", "--d", "1.0",
        "--corpus", "4", "--grid", "8", "--order", "40",
    )
    assert proc.returncode == 3
    assert "1.125" in proc.stderr


def test_sharpness_default_probe_exceeds_one(tmp_path):
    out = tmp_path / "probe.json"
    proc = run_cli(
        "sharpness", "--theorem", "thm14", "--order", "120",
        "--out", str(out),
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("probe thm14 at r=0.343333333333")
    assert proc.stdout.rstrip().endswith("> 1")
    doc = json.loads(out.read_text())
    assert doc["exceeds_bound"] is True
    assert doc["value"] > 1.0
    assert doc["radius"] == pytest.approx(1.0 / 3.0)


def test_sharpness_inside_verified_region_is_refused():
    proc = run_cli("sharpness", "--theorem", "thm14", "--r", "0.2")
    assert proc.returncode == 2
    assert "probe misuse" in proc.stderr


def test_sweep_csv_marks_the_radius(tmp_path):
    out = tmp_path / "sweep.csv"
    proc = run_cli(
        "sweep", "--theorem", "thm14", "--corpus", "8", "--grid", "24",
        "--order", "80", "--seed", "5", "--out", str(out),
    )
    assert proc.returncode == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "r,max_functional,radius_marker"
    rows = [line.split(",") for line in lines[1:]]
    assert len(rows) == 24
    markers = [int(row[2]) for row in rows]
    assert markers[0] == 1
    assert markers[-1] == 0
    assert markers == sorted(markers, reverse=True)
    values = [float(row[1]) for row in rows]
    assert all(b >= a - 1e-15 for a, b in zip(values, values[1:]))
    inside = [v for v, mark in zip(values, markers) if mark == 1]
    outside = [v for v, mark in zip(values, markers) if mark == 0]
    assert max(inside) <= 1.0 + 1e-9
    assert max(outside) > 1.0


def test_sweep_without_out_prints_csv():
    proc = run_cli(
        "sweep", "--theorem", "thmF", "--corpus", "4", "--grid", "8",
        "--order", "60",
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("r,max_functional,radius_marker\n")


def test_verify_from_corpus_file(tmp_path):
    path = tmp_path / "corpus.json"
    save_corpus(path, build_corpus("halfspace", 6, 3, order=80),
                kind="halfspace", seed=3)
    out = tmp_path / "report.json"
    proc = run_cli(
        "verify", "--theorem", "thm17", "--corpus-file", str(path),
        "--grid", "12", "--order", "80", "--out", str(out),
    )
    assert proc.returncode == 0
    doc = json.loads(out.read_text())
    assert doc["violations"] == []
    assert doc["corpus"]["source"] == str(path)
    assert doc["corpus"]["size"] == 6


def test_missing_corpus_file_is_an_io_error(tmp_path):
    proc = run_cli(
        "verify", "--theorem", "thm14",
        "--corpus-file", str(tmp_path / "absent.json"),
    )
    assert proc.returncode == 4
    assert "I/O failure" in proc.stderr


def test_malformed_corpus_file_is_an_io_error(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    proc = run_cli(
        "verify", "--theorem", "thm14", "--corpus-file", str(path)
    )
    assert proc.returncode == 4
    assert "malformed JSON" in proc.stderr


def test_invalid_parameter_exit_code():
    proc = run_cli("radius", "--theorem", "thm14", "--m", "3.0")
    assert proc.returncode == 2
    assert "m must lie in" in proc.stderr


def test_unknown_theorem_is_a_usage_error():
    proc = run_cli("radius", "--theorem", "nope")
    assert proc.returncode == 2
    assert "invalid choice" in proc.stderr


def test_default_backend_smoke_run():
    proc = run_cli(
        "verify", "--theorem", "thmF", "--corpus", "6", "--grid", "8",
        "--order", "60", backend=None,
    )
    assert proc.returncode == 0
    assert "violations 0" in proc.stdout
