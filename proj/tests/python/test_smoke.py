"""Smoke tests for the pygkz module and the gkz CLI."""

import cmath
import json
import math
import os
import subprocess

import pygkz

PI = math.pi


def test_lattice_basics():
    assert pygkz.kernel_basis([1, 2, 3]) == [[2, -1, 0], [-3, 0, 1]]
    assert pygkz.pochhammer(3.0 + 0j, 2) == 6.0 + 0j
    assert abs(pygkz.pochhammer(0.25 + 0j, 3) - 21.0 / 64.0) < 1e-15
    assert abs(pygkz.gamma_coefficient([0.25 + 0j, 0j], [-3, 2]) - 21.0 / 128.0) < 1e-15
    assert pygkz.negative_support([0.5 + 0j, -3 + 0j, 2 + 0j]) == {1}
    assert pygkz.has_minimal_negative_support([0.25 + 0j, 0j], [2, 3], 10)


def test_series_and_evaluation():
    s = pygkz.psi_series(2, 3, 0.5 + 0j, 0, 5)
    assert s["schema"] == "v1"
    assert len(s["terms"]) == 6
    assert not s["polynomial"]
    phi = pygkz.phi_series([1, 2, 3], 2 + 0j, 0, 8)
    assert phi["polynomial"]
    v = pygkz.evaluate_series(s, [(1.0, PI), (1e-3, PI)])
    direct = cmath.exp(1j * PI / 4) + (21 / 128) * cmath.exp(1j * PI * (0.25 - 3)) * (
        1e-3 * cmath.exp(1j * PI)
    ) ** 2
    assert abs(v - direct) < 1e-12


def test_annihilation():
    for A in ([2, 3], [1, 4, 6]):
        for j in range(2):
            residuals = pygkz.annihilation_residuals(A, 0.5 + 0j, j, 12)
            assert max(residuals) < 1e-10


def test_integration_and_residue():
    value, err = pygkz.integrate([2, 3], 0j, [(0.01, PI), (0.01, PI)], p=3)
    assert abs(value - 2j * PI) < 1e-8
    assert err < 1e-8
    circ, combinatorial, crosscheck = pygkz.circle_integral(
        [2, 3], 5 + 0j, [(0.8, 2.1), (0.6, -1.3)]
    )
    assert combinatorial and crosscheck < 1e-8
    expected = 2j * PI * 0.8 * cmath.exp(2.1j) * 0.6 * cmath.exp(-1.3j)
    assert abs(circ - expected) < 1e-8 * abs(expected)
    assert pygkz.epsilon_independence([2, 3], 0.3 + 0j, [(1, PI), (1, PI)], 1, 0.5, 1.0) < 1e-9


def test_expansion_pipeline():
    assert pygkz.sector_info(1, 2, 3) == (1,) + pygkz.sector_info(1, 2, 3)[1:]
    table = pygkz.expansion_table(2, 3, 0.3 + 0j, 1, (1.0, PI), 8)
    discrepancies = [e["discrepancy"] for e in table["entries"] if "discrepancy" in e]
    assert discrepancies and max(discrepancies) < 1e-8
    s = pygkz.gevrey_order(2, 3, 0.3 + 0j, 1, (1.0, PI))
    assert abs(s - 1.5) < 0.1
    d = pygkz.decomposition_matrix(2, 3, 0.5 + 0j)
    assert abs(d["det_direct"] - 4j) < 1e-10
    mu = pygkz.mu_recovery(2, 3, 0.3 + 0j, 1, (1.0, PI), 12)
    lam0 = pygkz.lambda_j(2, 3, 0.3 + 0j, 0)
    q0 = cmath.exp(2j * PI * (0 - 0.3) / 2)
    assert abs(mu["mu"][0] - lam0 * (q0 - 1)) < 1e-6 * abs(lam0 * (q0 - 1))


def test_restriction():
    assert pygkz.p_of_j(2, 3, 2, 3) == (1, 1, 1)
    lam, zero = pygkz.lambda_quotient(2, 3, 2, 0.7 + 0j, 3)
    assert not zero and abs(lam - (-69 / 20)) < 1e-12
    _, zero_degenerate = pygkz.lambda_quotient(2, 3, 1, 1 + 0j, 1)
    assert zero_degenerate
    w = pygkz.dft_weights(2)
    assert abs(w[1][1] + 0.5) < 1e-15
    # tilde-cycle contract via the k,r cycle parameters
    got, _ = pygkz.integrate_powers_x0([4, 6], 0.7 + 0j, [(1, PI), (0.05, PI)], p=1, b=3, k=2, r=0)
    target, _ = pygkz.integrate_powers_x0([2, 3], 0.35 + 0j, [(1, PI), (0.05, PI)], p=1, b=3)
    assert abs(got - target / 2) < 1e-7 * abs(target / 2)


def test_regularized_integrals():
    closed = pygkz.j_beta_coefficient_closed(2, 3, 1, 3, (1.0, PI))
    quad = pygkz.j_beta_coefficient_quadrature(2, 3, 1, 3, (1.0, PI))
    assert abs(closed - quad) < 1e-8 * abs(closed)
    value, cutoff_dependent = pygkz.j_phi_coefficient([2, 3], 5, 1, [(1.0, PI)])
    assert cutoff_dependent and abs(value) > 0


def test_verify_criterion():
    report = pygkz.run_criterion("det-identity")
    assert report["pass"]
    assert report["details"]["max_rel"] < 1e-10


def _run_cli(*args):
    cli = os.environ["GKZ_CLI"]
    return subprocess.run([cli, *args], capture_output=True, text=True)


def test_cli_series_and_exit_codes():
    r = _run_cli("series", "--A", "2,3", "--beta", "0.5", "--j", "0", "--N", "5")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["schema"] == "v1" and len(doc["terms"]) == 6
    assert _run_cli("series", "--A", "2,3", "--beta", "0.5", "--j", "2").returncode == 2
    bad_decay = _run_cli(
        "integral", "--A", "2,3", "--beta", "0.3", "--p", "1", "--x", "1@pi", "--x", "1@0"
    )
    assert bad_decay.returncode == 3


def test_cli_determinism():
    args = ("expansion", "--A", "2,3", "--beta", "0.3", "--p", "1", "--x", "1@pi", "--N", "5")
    first = _run_cli(*args).stdout
    second = _run_cli(*args).stdout
    assert first == second


def test_cli_round_trip_and_verify():
    r = _run_cli("expansion", "--A", "2,3", "--beta", "0.3", "--p", "1", "--x", "1@pi", "--N", "4")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert doc["kind"] == "coefficient_table"
    v = _run_cli("verify", "det-identity")
    assert v.returncode == 0 and json.loads(v.stdout)["pass"]
    assert _run_cli("verify", "not-a-suite").returncode == 2
