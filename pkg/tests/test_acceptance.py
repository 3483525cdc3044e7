"""Acceptance criteria 1-8, one printed PASS/FAIL line each."""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from grasslog import grasspoly, suites
from grasslog.configspace import random_float_configuration
from grasslog.polylog import ZETA3, sv_trilog


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {k}: {'PASS' if ok else 'FAIL'} - {detail}")
    return emit


def test_criterion_1_exact_suite(report):
    t = time.perf_counter()
    cases = suites.suite_exact(42)
    dt = time.perf_counter() - t
    bad = [c.name for c in cases if not c.passed]
    ok = not bad and dt < 60
    report(1, ok, f"{len(cases)} exact checks, failing={bad}, {dt:.1f}s (limit 60s)")
    assert ok


def test_criterion_2_weight2_coincidence(report):
    rng = np.random.default_rng([42, 2])
    errs, times = [], []
    for _ in range(20):
        cfg = random_float_configuration(rng, 4, 2)
        t = time.perf_counter()
        est = grasspoly.grass_dilog(cfg, "numeric", budget=100_000)
        times.append(time.perf_counter() - t)
        assert est.samples <= 100_000 * 1.05
        errs.append(abs(est.value - grasspoly.grass_dilog(cfg, "closed")))
    ok = max(errs) <= 1e-5 and max(times) <= 10
    report(2, ok, f"max |numeric - D| = {max(errs):.2e} (tol 1e-5), slowest {max(times):.2f}s (limit 10s)")
    assert ok


def test_criterion_3_theorem_main(report):
    rng = np.random.default_rng([42, 3])
    rows = []
    ok = True
    for k in range(5):
        cfg = suites.conditioned_float_configuration(rng, 6, 3)
        t = time.perf_counter()
        rep = grasspoly.grass_trilog_numeric(cfg, budget=5_000_000, seed=100 + k)
        dt = time.perf_counter() - t
        err = abs(rep.residuals["theorem_main"])
        sig = rep.residuals["theorem_main_sigma"]
        tol = max(3 * sig, 1e-2 * abs(rep.closed) + 1e-2)
        ok &= err <= tol and dt <= 600
        rows.append(f"{err:.1e}/{tol:.1e}")
    report(3, ok, f"5 conditioned configurations, |err|/tol: {', '.join(rows)}")
    assert ok


def test_criterion_4_special_stratum(report):
    # the series-oracle targets are confirmed first
    assert abs(sv_trilog(0.5) - 7 / 8 * ZETA3) < 1e-12
    assert abs(sv_trilog(-1) + 0.75 * ZETA3) < 1e-12
    diffs = {}
    for z in suites.STRATUM_POINTS:
        diffs[z] = grasspoly.special_stratum_value(z) - sv_trilog(z)
    worst = max(abs(d) for d in diffs.values())
    ok = worst <= 1e-3
    detail = ", ".join(f"z={z}: {d:+.4f}" for z, d in diffs.items())
    report(4, ok, f"value - sv_trilog(z): {detail} (tol 1e-3)")
    assert ok


def test_criterion_5_functional_equations(report):
    t = time.perf_counter()
    drop = suites.drop_case(42)
    proj = suites.projection_case(42)
    dt = time.perf_counter() - t
    ok = drop.passed and proj.passed and dt < 300
    report(5, ok, f"drop {drop.max_residual:.1e}, projection {proj.max_residual:.1e} relative "
                  f"(tol 1e-8), {dt:.1f}s (limit 300s)")
    assert ok


def test_criterion_6_oneform_difference(report):
    t = time.perf_counter()
    case = suites.keyequ_case(42)
    dt = time.perf_counter() - t
    ok = case.passed and case.count == 20 and dt < 10
    report(6, ok, f"20 pairs, max residual/scale {case.max_residual:.1e} (tol 1e-9), {dt:.2f}s")
    assert ok


def test_criterion_7_form_identities(report):
    t = time.perf_counter()
    cases = [suites.presentation_case(42), suites.d_r_case(42), suites.weight2_case(42),
             suites.weight3_case(42)]
    dt = time.perf_counter() - t
    ok = all(c.passed for c in cases) and dt < 60
    detail = ", ".join(f"{c.name.split('.')[1]} {c.max_residual:.1e}/{c.tolerance:.0e}" for c in cases)
    report(7, ok, f"{detail}, {dt:.1f}s (limit 60s)")
    assert ok


def test_criterion_8_reproducible_verify(report, tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"run{k}.json"
        proc = subprocess.run([sys.executable, "-m", "grasslog", "verify", "--suite", "all",
                               "--seed", "42", "--out", str(path)], capture_output=True)
        outs.append((proc.returncode, path.read_bytes()))
    same = outs[0][1] == outs[1][1] and outs[0][0] == outs[1][0]
    report(8, same, f"two runs of verify --suite all --seed 42: byte-identical={same}, "
                    f"{len(outs[0][1])} bytes, exit code {outs[0][0]}")
    assert same
