"""Command-line surface: subcommands, file outputs, and exit codes."""

import csv
import json

import numpy as np
import pytest

from maodpp import __version__
from maodpp.bench import CSV_FIELDS, SCHEMA_VERSION
from maodpp.cli import main


def test_version_flag_reports_package_and_schema(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    out = capsys.readouterr().out
    assert __version__ in out
    assert f"csv schema {SCHEMA_VERSION}" in out


def test_missing_subcommand_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_pf_sample_writes_the_point_cloud(tmp_path):
    out = tmp_path / "front.csv"
    code = main(
        [
            "pf-sample",
            "--problem",
            "dtlz2",
            "--objectives",
            "3",
            "--n",
            "200",
            "--seed",
            "5",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "f1,f2,f3"
    assert len(lines) == 201
    pts = np.array([[float(v) for v in line.split(",")] for line in lines[1:]])
    # DTLZ2 front lies on the unit sphere.
    assert np.allclose((pts**2).sum(axis=1), 1.0, atol=1e-9)


def test_pf_sample_rejects_unknown_problems(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(
            [
                "pf-sample",
                "--problem",
                "nope",
                "--objectives",
                "3",
                "--out",
                str(tmp_path / "x.csv"),
            ]
        )
    assert exc.value.code == 2


def run_flags(tmp_path, extra, out_name="results.csv"):
    out = tmp_path / out_name
    argv = [
        "run",
        "--problem",
        "dtlz2",
        "--objectives",
        "2",
        "--pop-size",
        "12",
        "--evals",
        "120",
        "--out",
        str(out),
    ] + extra
    return main(argv), out


def test_run_writes_the_results_csv(tmp_path, capsys):
    code, out = run_flags(tmp_path, ["--seed", "0,1", "--strategy", "dpp,uniform"])
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4  # 2 strategies x 2 seeds
    assert set(r["strategy"] for r in rows) == {"dpp", "uniform"}
    assert all(r["evals"] == "120" for r in rows)
    header = out.read_text().splitlines()[0]
    assert header == ",".join(CSV_FIELDS)
    assert "wrote 4 rows" in capsys.readouterr().out


def test_run_flags_override_the_config_file(tmp_path):
    cfg = {
        "problems": ["dtlz2"],
        "objectives": [2],
        "pop_size": 12,
        "max_evals": 120,
        "seeds": [0, 1, 2],
    }
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(cfg))
    out = tmp_path / "r.csv"
    code = main(
        ["run", "--config", str(cfg_path), "--seed", "7", "--out", str(out)]
    )
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert [r["seed"] for r in rows] == ["7"]


def test_run_seed_count_shorthand(tmp_path):
    code, out = run_flags(tmp_path, ["--seed", "n:3"])
    assert code == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert [r["seed"] for r in rows] == ["0", "1", "2"]


def test_run_reports_config_errors_on_stderr(tmp_path, capsys):
    out = tmp_path / "r.csv"
    code = main(["run", "--problem", "dtlz99", "--objectives", "2", "--out", str(out)])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_run_then_compare_round_trip(tmp_path, capsys):
    code, out = run_flags(
        tmp_path, ["--seed", "n:5", "--strategy", "dpp,uniform", "--parallel", "2"]
    )
    assert code == 0
    capsys.readouterr()
    code = main(["compare", "--in", str(out), "--baseline", "dpp"])
    assert code == 0
    report = capsys.readouterr().out
    assert "| dtlz2 | 2 |" in report
    assert "uniform" in report
    assert "totals" in report


def test_compare_with_absent_baseline_fails_cleanly(tmp_path, capsys):
    code, out = run_flags(tmp_path, ["--seed", "n:5"])
    capsys.readouterr()
    code = main(["compare", "--in", str(out), "--baseline", "kdpp"])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_compare_missing_file_fails_cleanly(tmp_path, capsys):
    code = main(["compare", "--in", str(tmp_path / "absent.csv")])
    assert code == 1
    assert "error:" in capsys.readouterr().err


def test_bench_times_every_backend(capsys):
    code = main(["bench", "--sizes", "12,24", "--repeats", "1"])
    assert code == 0
    out = capsys.readouterr().out
    lines = [l for l in out.splitlines() if l and not l.startswith("size")]
    # One line per (size, backend); deltas against the first backend stay tiny.
    sizes_seen = {l.split()[0] for l in lines if l[0].isdigit()}
    assert sizes_seen == {"12", "24"}
    for line in lines:
        if line[0].isdigit():
            delta = float(line.split()[-1])
            assert delta <= 1e-7
