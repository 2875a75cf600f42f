import math
import subprocess
import sys

import numpy as np

from noncolliding import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cdf_piflat_grid_example(capsys):
    code, out, _ = run_cli(capsys, "cdf", "--family", "piflat", "--beta", "1",
                           "--a", "0:2:0.5")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert lines[0] == "threshold,value,resolution,error_estimate"
    rows = [l.split(",") for l in lines[1:]]
    assert len(rows) == 5
    at_half = float(rows[1][1])
    assert abs(at_half - (1 - math.exp(-1.0))) < 1e-10
    # 12 significant digits
    assert rows[1][1] == "%.12g" % at_half


def test_cdf_loe_example(capsys):
    code, out, _ = run_cli(capsys, "cdf", "--family", "loe", "--n", "1", "--a", "1")
    assert code == 0
    val = float(out.splitlines()[-1].split(",")[1])
    assert abs(val - (1 - math.exp(-2.0))) < 1e-10


def test_missing_parameter_exits_2(capsys):
    code, _, err = run_cli(capsys, "cdf", "--family", "piflat", "--a", "1")
    assert code == 2
    assert "usage" in err


def test_unknown_family_exits_2(capsys):
    code, _, err = run_cli(capsys, "cdf", "--family", "weird", "--a", "1")
    assert code == 2


def test_simulate_deterministic_and_mean(capsys):
    args = ("simulate", "--family", "piflat", "--n", "1", "--beta", "2",
            "--samples", "20000", "--seed", "7")
    code1, out1, _ = run_cli(capsys, *args)
    code2, out2, _ = run_cli(capsys, *args)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "# seed: 7" in out1
    vals = np.array([float(l.split(",")[1]) for l in out1.splitlines()
                     if l and not l.startswith(("#", "index"))])
    assert abs(vals.mean() - 0.25) < 3 * 0.25 / math.sqrt(len(vals))


def test_simulate_zero_samples_exits_2(capsys):
    code, _, err = run_cli(capsys, "simulate", "--family", "piflat", "--n", "1",
                           "--beta", "2", "--samples", "0")
    assert code == 2


def test_simulate_ecdf_shape(capsys):
    code, out, _ = run_cli(capsys, "simulate", "--family", "loe", "--n", "1",
                           "--samples", "2000", "--ecdf", "--seed", "3")
    assert code == 0
    lines = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert lines[0] == "quantile,value"
    assert len(lines) == 1001


def test_compare_piflat_n2_passes(capsys):
    code, out, _ = run_cli(capsys, "compare", "--experiment", "piflat-n2")
    assert code == 0
    verdict = [l for l in out.splitlines() if l.startswith("verdict,")][0]
    assert verdict.split(",")[1] == "PASS"


def test_compare_burke_invariance(capsys):
    code, out, _ = run_cli(capsys, "compare", "--experiment", "burke-invariance")
    assert code == 0
    verdict = [l for l in out.splitlines() if l.startswith("verdict,")][0]
    assert float(verdict.split(",")[3]) <= 1e-10


def test_compare_unknown_experiment_lists_known(capsys):
    code, _, err = run_cli(capsys, "compare", "--experiment", "nope")
    assert code == 2
    assert "piflat-n2" in err


def test_numerical_error_exit_code(capsys, monkeypatch):
    def boom(query):
        from noncolliding.exceptions import ConvergenceError
        raise ConvergenceError("did not converge")

    monkeypatch.setattr(cli, "evaluate_cdf", boom)
    code, _, err = run_cli(capsys, "cdf", "--family", "loe", "--n", "1", "--a", "1")
    assert code == 1
    assert "numerical error" in err


def test_seed_environment_override(capsys, monkeypatch):
    monkeypatch.setenv("NONCOLLIDING_SEED", "12321")
    _, out, _ = run_cli(capsys, "simulate", "--family", "loe", "--n", "1", "--samples", "3")
    assert "# seed: 12321" in out


def test_output_file_and_metadata(tmp_path, capsys):
    target = tmp_path / "out.csv"
    code, _, _ = run_cli(capsys, "cdf", "--family", "detratio", "--beta", "1,2",
                         "--a", "0.5", "--output", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith("# noncolliding")
    assert "threshold,value,resolution,error_estimate" in text


def test_show_defaults(capsys):
    code, out, _ = run_cli(capsys, "--show-defaults")
    assert code == 0
    assert "defaults_version" in out and "nystrom_nodes_per_slot" in out


def test_console_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "noncolliding.cli", "cdf",
                           "--family", "loe", "--n", "1", "--a", "1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "threshold,value" in proc.stdout


def test_thread_count_does_not_change_results(capsys):
    args = ("cdf", "--family", "piflat", "--beta", "0.5,1.5", "--a", "0.2:2.2:0.4")
    _, out1, _ = run_cli(capsys, *args, "--threads", "1")
    _, out8, _ = run_cli(capsys, *args, "--threads", "8")
    assert out1 == out8


def test_no_command_exits_2(capsys):
    assert cli.main([]) == 2
