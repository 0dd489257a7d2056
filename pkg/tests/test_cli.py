import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from wkseq import (
    alpha_window,
    console_main,
    dumps_csv,
    full_shift_transitive_point,
    ladder_new,
    loads_csv,
    loads_json,
)


def run_cli(capsys, *argv):
    code = console_main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_round_trip(capsys):
    code, out, _ = run_cli(capsys, "gen", "--from", "30", "--len", "40")
    assert code == 0
    lad = ladder_new("default-minimal")
    assert loads_csv(out) == alpha_window(lad, 30, 40)


def test_gen_known_value(capsys):
    code, out, _ = run_cli(capsys, "gen", "--from", "41", "--len", "1")
    assert code == 0
    assert out.splitlines()[1] == "41,14,27"


def test_gen_json_format(capsys):
    code, out, _ = run_cli(capsys, "--format", "json", "gen", "--len", "5")
    assert code == 0
    w = loads_json(out)
    assert w.values == (0, 0, 1, 1, 1)


def test_gen_decimals_column(capsys):
    code, out, _ = run_cli(
        capsys, "--decimals", "3", "gen", "--from", "41", "--len", "1"
    )
    assert code == 0
    assert out.splitlines()[1] == "41,14,27,0.518"


def test_gen_len_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        console_main(["gen", "--len", "0"])
    assert exc.value.code == 2


def test_gen_out_file(capsys, tmp_path):
    target = tmp_path / "w.csv"
    code, out, _ = run_cli(capsys, "gen", "--len", "3", "--out", str(target))
    assert code == 0 and out == ""
    assert loads_csv(target.read_text()).values == (0, 0, 1)


def test_verify_returns_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "returns", "--n", "0")
    assert code == 0
    doc = json.loads(out)
    assert doc["pass"] is True and doc["schema"] == "wk-report/1"
    assert doc["left_shift"] == 162


def test_verify_rigidity_level_zero_is_parameter_error(capsys):
    code, _, err = run_cli(capsys, "verify", "rigidity", "--n", "0", "--count", "5")
    assert code == 2
    assert "error" in err


def test_verify_failed_certificate_exits_one(capsys):
    code, out, _ = run_cli(capsys, "verify", "wm", "--n", "0", "--eps", "1/8")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_verify_ones(capsys):
    code, out, _ = run_cli(capsys, "verify", "ones", "--n", "1", "--window", "2000")
    assert code == 0
    doc = json.loads(out)
    assert doc["first_run"] == [54, 111]


def test_verify_shift_defect(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "shift-defect", "--n", "1", "--m", "1", "--step", "1/2"
    )
    assert code == 0
    assert json.loads(out)["max_defect"] == "0/1"


def test_explicit_schedule_flag(capsys, tmp_path):
    sched = tmp_path / "sched.txt"
    sched.write_text("# growth factors, one per line\n10\n")
    code, out, _ = run_cli(
        capsys, "--ladder-schedule", str(sched), "gen", "--from", "41", "--len", "1"
    )
    assert code == 0
    assert out.splitlines()[1] == "41,11,30"


def test_undersized_schedule_is_rejected(capsys, tmp_path):
    sched = tmp_path / "sched.txt"
    sched.write_text("8\n")
    code, _, err = run_cli(
        capsys, "--ladder-schedule", str(sched), "gen", "--len", "5"
    )
    assert code == 2 and "error" in err


def test_config_file_settings(capsys, tmp_path):
    sched = tmp_path / "sched.txt"
    sched.write_text("10\n")
    cfg = tmp_path / "run.ini"
    cfg.write_text(
        "[run]\n"
        "ladder_policy = explicit\n"
        f"ladder_schedule = {sched}\n"
        "format = json\n"
        "parallelism = 2\n"
    )
    code, out, _ = run_cli(
        capsys, "--config", str(cfg), "gen", "--from", "41", "--len", "1"
    )
    assert code == 0
    assert loads_json(out).values == (F(11, 30),)


def test_flags_override_config(capsys, tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[run]\nformat = json\n")
    code, out, _ = run_cli(
        capsys, "--config", str(cfg), "--format", "csv", "gen", "--len", "2"
    )
    assert code == 0
    assert out.startswith("index,")


def test_config_without_run_section(capsys, tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("[other]\nx = 1\n")
    code, _, err = run_cli(capsys, "--config", str(cfg), "gen", "--len", "2")
    assert code == 2 and "run" in err


def test_classify_identical_files(capsys, tmp_path):
    path = tmp_path / "w.csv"
    path.write_text(dumps_csv(full_shift_transitive_point(400)))
    base = [
        "relations", "classify", "--a", str(path), "--b", str(path),
        "--delta", "1", "--horizon", "300", "--k", "8", "--tau", "1/100",
    ]
    code, out, _ = run_cli(capsys, *base)
    assert code == 1  # separation cannot be witnessed for identical points
    doc = json.loads(out)
    assert "proximal-witnessed" in doc["labels"]
    assert "inconclusive" in doc["labels"]
    code, _, _ = run_cli(capsys, *base, "--require", "proximal-witnessed")
    assert code == 0


def test_classify_unknown_required_label(capsys):
    code, _, err = run_cli(
        capsys, "relations", "classify", "--a", "alpha", "--b", "ones",
        "--delta", "1", "--horizon", "50", "--k", "4", "--tau", "1/4",
        "--require", "bogus-label",
    )
    assert code == 2 and "unknown labels" in err


def test_malformed_orbit_file(capsys, tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("index,value_num,value_den\n0,x,1\n")
    code, _, err = run_cli(
        capsys, "relations", "classify", "--a", str(path), "--b", "ones",
        "--delta", "1", "--horizon", "10", "--k", "4", "--tau", "1/4",
    )
    assert code == 2 and "line 2" in err


def test_thmB_command(capsys):
    code, out, _ = run_cli(
        capsys, "relations", "thmB", "--orbit", "alpha", "--fixed-point", "ones",
        "--pairs", "0:1,2:5", "--horizon", "300", "--k", "8", "--tau", "1/100",
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "pair-verdict-list"
    assert [v["pair"] for v in doc["verdicts"]] == [[0, 1], [2, 5]]


def test_thmB_bad_pairs(capsys):
    code, _, err = run_cli(
        capsys, "relations", "thmB", "--orbit", "alpha", "--fixed-point", "ones",
        "--pairs", "0-1", "--horizon", "50", "--k", "4", "--tau", "1/4",
    )
    assert code == 2 and "m:n" in err


def test_thmC_not_found_emits_error_report(capsys, tmp_path):
    path = tmp_path / "w.csv"
    path.write_text(dumps_csv(full_shift_transitive_point(400)))
    code, out, _ = run_cli(
        capsys, "relations", "thmC", "--orbit", str(path), "--q", "3",
        "--delta", "2", "--horizon", "40", "--k", "16", "--tau", "1/1024",
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["error"] == "not-found-in-horizon"


def test_parallelism_does_not_change_output(capsys, tmp_path):
    path = tmp_path / "w.csv"
    path.write_text(dumps_csv(full_shift_transitive_point(2000)))
    argv = [
        "relations", "classify", "--a", str(path), "--b", str(path),
        "--shift-b", "1", "--delta", "2", "--horizon", "1900", "--k", "12",
        "--tau", "1/512",
    ]
    _, out1, _ = run_cli(capsys, "--parallelism", "1", *argv)
    _, out8, _ = run_cli(capsys, "--parallelism", "8", *argv)
    assert out1 == out8


def test_unexpected_crash_exits_three(capsys, monkeypatch):
    import wkseq.cli as cli

    def boom(*_args, **_kwargs):
        raise RuntimeError("simulated fault")

    monkeypatch.setattr(cli, "check_wm_returns", boom)
    code, _, err = run_cli(capsys, "verify", "wm", "--n", "0")
    assert code == 3
    assert "unexpected failure" in err


def test_installed_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "wkseq", "gen", "--len", "6"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "index,value_num,value_den"
