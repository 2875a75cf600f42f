"""Acceptance suite: one check per criterion, each printing a verdict line.

Every criterion runs at its stated tolerance and time budget; comparisons
against samplers use 95% Dvoretzky-Kiefer-Wolfowitz bands plus any stated
discretization allowance.  Run with ``pytest -s tests/test_acceptance.py``
to see the per-criterion lines.
"""

from noncolliding.experiments import run_experiment


def _report(tag, result, budget):
    line = ("ACCEPTANCE %-2s %-22s %s  disc=%.4g  allow=%.4g  %.1fs (budget %ds)"
            % (tag, result.name, "PASS" if result.passed else "FAIL",
               result.discrepancy, result.allowance, result.seconds, budget))
    print(line)
    assert result.passed, line
    assert result.seconds < budget, "over time budget: " + line


def test_c01_exponential_identity():
    _report("1", run_experiment("exponential-identity"), 1)


def test_c02_loe_chisq():
    _report("2", run_experiment("loe-chisq"), 1)


def test_c03_three_way_agreement():
    _report("3", run_experiment("three-way"), 10)


def test_c04_piflat_million_sample_mc():
    _report("4", run_experiment("piflat-n3"), 120)


def test_c05_loe_mc():
    _report("5", run_experiment("loe-mc"), 120)


def test_c06_bridge_nr_chain():
    _report("6", run_experiment("bridge-nr"), 300)


def test_c07_running_max():
    _report("7", run_experiment("bridge-runmax"), 300)


def test_c08_narrow_wedge():
    _report("8", run_experiment("narrow-wedge"), 120)


def test_c09_burke_and_conjugation():
    _report("9a", run_experiment("burke-invariance"), 60)
    _report("9b", run_experiment("conjugation-invariance"), 60)


def test_c10_engine_cross_oracle():
    _report("10", run_experiment("engine-cross"), 30)


def test_c11_geometric_exactness():
    _report("11", run_experiment("geometric-exact"), 300)


def test_c12_limit_transitions():
    _report("12", run_experiment("limit-transition"), 300)


def test_c13_arithmetic_limit_ks():
    _report("13", run_experiment("arith-ks"), 600)


def test_c14_dyson_edge():
    _report("14", run_experiment("dyson-edge"), 1800)


def test_c15_eigen_identity():
    _report("15", run_experiment("eigen-identity"), 600)
