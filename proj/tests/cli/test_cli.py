import json
import os
import random
import subprocess

import pytest

CLI = os.environ["PROWRAS_CLI"]


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@pytest.fixture()
def blob_csv(tmp_path):
    rng = random.Random(5)
    lines = ["f0,f1,f2,label"]
    for i in range(60):
        minority = i < 12
        x = rng.gauss(0.25 if minority else 0.75, 0.1)
        y = rng.gauss(0.75 if minority else 0.25, 0.1)
        z = rng.gauss(0.5, 0.1)
        lines.append(f"{x},{y},{z},{'pos' if minority else 'neg'}")
    path = tmp_path / "blob.csv"
    path.write_text("\n".join(lines) + "\n")
    return str(path)


def test_version():
    res = run("version")
    assert res.returncode == 0
    name, ver = res.stdout.split()
    assert name == "prowras"
    assert len(ver.split(".")) == 3
    assert "seed: 42" in res.stderr


def test_help_lists_defaults():
    res = run("oversample", "--help")
    assert res.returncode == 0
    for text in ["default 5", "default 1", "default 100", "default 0.001"]:
        assert text in res.stdout
    top = run("--help")
    assert top.returncode == 0
    for sub in ["oversample", "partition", "benchmark", "iscore", "wsrt", "version"]:
        assert sub in top.stdout


def test_oversample_roundtrip(blob_csv, tmp_path):
    out = tmp_path / "synth.csv"
    res = run("oversample", "--in", blob_csv, "--out", str(out), "--scheme", "hlv",
              "--seed", "9")
    assert res.returncode == 0, res.stderr
    assert "seed: 9" in res.stderr
    lines = out.read_text().splitlines()
    assert lines[0] == "f0,f1,f2,label"
    # majority deficit 36, plus at most levels-1 from per-cluster rounding
    assert 1 + 36 <= len(lines) <= 1 + 40
    assert all(line.endswith(",pos") for line in lines[1:])

    again = tmp_path / "synth2.csv"
    run("oversample", "--in", blob_csv, "--out", str(again), "--scheme", "hlv",
        "--seed", "9")
    assert out.read_bytes() == again.read_bytes()

    to_stdout = run("oversample", "--in", blob_csv, "--out", "-", "--scheme", "hlv",
                    "--seed", "9")
    assert to_stdout.stdout == out.read_text()  # stdout stays machine-readable


def test_oversample_auto_reports_scheme(blob_csv, tmp_path):
    res = run("oversample", "--in", blob_csv, "--out", str(tmp_path / "s.csv"),
              "--scheme", "auto")
    assert res.returncode == 0, res.stderr
    picked = [l for l in res.stderr.splitlines() if l.startswith("scheme: ")]
    assert len(picked) == 1
    assert picked[0].removeprefix("scheme: ") in {"hgv", "lgv", "hlv", "llv"}


def test_exit_codes(blob_csv, tmp_path):
    assert run("oversample", "--method", "bogus", "--in", blob_csv,
               "--out", "-").returncode == 1
    assert run("--seed", "notanumber", "version").returncode == 1
    missing = run("oversample", "--in", str(tmp_path / "nope.csv"), "--out", "-")
    assert missing.returncode == 2
    assert "data error" in missing.stderr
    assert run().returncode != 0  # subcommand required


def test_partition_json(blob_csv):
    res = run("partition", "--in", blob_csv, "--max-levels", "3",
              "--n-neighbours-max", "2")
    assert res.returncode == 0, res.stderr
    doc = json.loads(res.stdout)
    assert doc["max_levels"] == 3
    weights = [lvl["normalized_weight"] for lvl in doc["levels"]]
    assert sum(weights) == pytest.approx(1.0, abs=1e-5)  # JSON rounds to 7 sig figs
    assert weights == sorted(weights, reverse=True)
    indices = [i for lvl in doc["levels"] for i in lvl["indices"]]
    assert sorted(indices) == list(range(12))


def test_wsrt_json(tmp_path):
    scores = tmp_path / "scores.csv"
    rows = ["dataset,ours,theirs"]
    rows += [f"d{i},{i + 1}.0,{i}.0" for i in range(1, 11)]
    scores.write_text("\n".join(rows) + "\n")
    res = run("wsrt", "--in", str(scores), "--a", "ours", "--b", "theirs")
    assert res.returncode == 0, res.stderr
    doc = json.loads(res.stdout)
    assert doc["w_plus"] == 55.0
    assert doc["w_minus"] == 0.0
    assert doc["n_effective"] == 10
    assert not doc["degenerate"]
    assert 0.0 < doc["p_one_sided"] < 0.05
    bad = run("wsrt", "--in", str(scores), "--a", "ours", "--b", "absent")
    assert bad.returncode == 2


def test_benchmark_and_iscore(blob_csv, tmp_path):
    config = {
        "datasets": [{"name": "blob", "path": blob_csv, "label_column": "label"}],
        "oversamplers": [
            {"name": "baseline"},
            {"name": "smote", "k": 3},
        ],
        "classifiers": [{"name": "knn", "kind": "knn", "k": 5}],
        "repeats": 2,
        "folds": 2,
        "seed": 11,
    }
    cfg = tmp_path / "bench.json"
    cfg.write_text(json.dumps(config))
    out = tmp_path / "results.jsonl"
    res = run("benchmark", "--config", str(cfg), "--out", str(out))
    assert res.returncode == 0, res.stderr
    rows = [json.loads(line) for line in out.read_text().splitlines()]
    assert {r["oversampler"] for r in rows} == {"baseline", "smote"}
    assert all(not r["failed"] and 0.0 <= r["mean_f1"] <= 1.0 for r in rows)

    rerun = tmp_path / "results2.jsonl"
    run("benchmark", "--config", str(cfg), "--out", str(rerun))
    assert out.read_bytes() == rerun.read_bytes()

    isc = run("iscore", "--in", str(out), "--target", "smote")
    assert isc.returncode == 0, isc.stderr
    doc = json.loads(isc.stdout)
    assert set(doc) == {"smote"}
    assert 0.0 <= doc["smote"] <= 1.0


def test_bundled_dataset_loads():
    data = os.environ.get("PROWRAS_DATA", "data")
    path = os.path.join(data, "winequality-red-4.csv")
    res = run("partition", "--in", path, "--minority", "positive")
    assert res.returncode == 0, res.stderr
    doc = json.loads(res.stdout)
    total = sum(len(lvl["indices"]) for lvl in doc["levels"])
    assert total == 53  # every minority row appears exactly once
