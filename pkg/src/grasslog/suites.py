"""Verification suites shared by ``grasslog verify`` and the acceptance tests.

Every case is a :class:`Case` holding a pass flag, the worst residual, the
tolerance it was held to and a small JSON-friendly payload.  Nothing here
records wall-clock time, so reports are reproducible byte for byte.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import exactcheck, formeval, grasspoly, quad
from .configspace import (Configuration, minors_conditioned,
                          random_exact_configuration, random_float_configuration)
from .polylog import sv_trilog

SUITES = ("exact", "forms", "functional", "quadrature")
STRATUM_POINTS = (0.5, -1.0, 2.0, 1 + 1j)


@dataclass
class Case:
    name: str
    passed: bool
    count: int
    max_residual: float | None = None
    tolerance: float | None = None
    data: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": bool(self.passed), "count": self.count,
                "max_residual": _clean(self.max_residual), "tolerance": self.tolerance,
                "data": _clean(self.data)}


def _clean(x):
    """Make a value JSON-safe: complex -> [re, im], non-finite -> None."""
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, (np.floating, np.integer)):
        x = x.item()
    if isinstance(x, complex):
        return [_clean(x.real), _clean(x.imag)]
    if isinstance(x, float) and not math.isfinite(x):
        return None
    return x


def _worst(values):
    return max(values) if values else 0.0


# ----------------------------------------------------------------------------
# random inputs

def _cvec(rng, n):
    return rng.normal(size=n) + 1j * rng.normal(size=n)


def random_form_input(rng, m: int, n: int, k: int):
    """(FunctionSystem with ``m`` ratios in dim ``n``, chart point, ``k`` real directions)."""
    fs = formeval.FunctionSystem(tuple(tuple(_cvec(rng, n)) for _ in range(m + 1)), n)
    p = formeval.ChartPoint(tuple(_cvec(rng, n - 1)))
    ws = [rng.normal(size=2 * (n - 1)) for _ in range(k)]
    return fs, p, ws


def conditioned_float_configuration(rng, m: int, n: int, lo: float = 1e-3, hi: float = 1e3):
    while True:
        cfg = random_float_configuration(rng, m, n)
        if minors_conditioned(cfg, lo, hi):
            return cfg


# ----------------------------------------------------------------------------
# exact

def suite_exact(seed: int) -> list[Case]:
    out = []
    for r in exactcheck.run_all(seed):
        out.append(Case(f"exact.{r.name}", r.passed, r.cases, 0.0 if r.passed else None, 0.0,
                        {"detail": r.detail}))
    return out


# ----------------------------------------------------------------------------
# forms

def presentation_case(seed: int, count: int = 100) -> Case:
    rng = np.random.default_rng([seed, 1])
    worst = []
    for m in (3, 4, 5):
        for _ in range(count):
            fs, p, ws = random_form_input(rng, m, m, m - 1)
            vals = [formeval.eval_r(m, fs, p, ws, pr).value for pr in formeval.PRESENTATIONS]
            scale = max(1.0, max(abs(v) for v in vals))
            worst.append(max(abs(vals[0] - vals[1]), abs(vals[0] - vals[2])) / scale)
    res = _worst(worst)
    return Case("forms.presentation_equivalence", res <= 1e-9, len(worst), res, 1e-9)


def d_r_case(seed: int, count: int = 50) -> Case:
    rng = np.random.default_rng([seed, 2])
    worst = []
    for m in (2, 3):
        for _ in range(count):
            fs, p, ws = random_form_input(rng, m, m + 1, m)
            fd, exact = formeval.d_r_check(m, fs, p, ws)
            worst.append(abs(fd.value - exact.value) / max(1.0, abs(exact.value)))
    res = _worst(worst)
    return Case("forms.d_r_check", res <= 1e-5, len(worst), res, 1e-5)


def weight2_case(seed: int, count: int = 20) -> Case:
    rng = np.random.default_rng([seed, 3])
    worst = []
    for _ in range(count):
        cfg = random_float_configuration(rng, 3, 2)
        rep = grasspoly.check_weight2_oneform(cfg, _cvec(rng, 2), _cvec(rng, 2))
        worst.append(abs(rep.residual))
    res = _worst(worst)
    return Case("forms.weight2_oneform", res <= 1e-12, count, res, 1e-12)


def weight3_case(seed: int, count: int = 20) -> Case:
    rng = np.random.default_rng([seed, 4])
    worst = []
    for _ in range(count):
        cfg = random_float_configuration(rng, 4, 2)
        rep = grasspoly.check_weight3_twoform(cfg, _cvec(rng, 2), [_cvec(rng, 2), _cvec(rng, 2)])
        worst.append(abs(rep.residual))
    res = _worst(worst)
    return Case("forms.weight3_twoform", res <= 1e-12, count, res, 1e-12)


def keyequ_case(seed: int, count: int = 20) -> Case:
    rng = np.random.default_rng([seed, 5])
    worst = []
    for _ in range(count):
        cfg = random_float_configuration(rng, 5, 2)
        w = [tuple(_cvec(rng, 2)) for _ in range(5)]
        rep = grasspoly.check_oneform_difference(cfg, w)
        worst.append(abs(rep.residual) / rep.scale)
    res = _worst(worst)
    return Case("forms.oneform_difference", res <= 1e-9, count, res, 1e-9)


def suite_forms(seed: int) -> list[Case]:
    return [presentation_case(seed), d_r_case(seed), weight2_case(seed), weight3_case(seed),
            keyequ_case(seed)]


# ----------------------------------------------------------------------------
# functional equations

def _functional_case(name, seed, count, dim, checker, tag) -> Case:
    rng = random.Random(seed * 1009 + tag)
    worst = []
    exploratory = {"lie": [], "diff": []}
    for _ in range(count):
        pts = random_exact_configuration(rng, 7, dim, bound=5)
        worst.append(checker(pts, "closed").relative)
        for fn in exploratory:
            exploratory[fn].append(checker(pts, fn).relative)
    res = _worst(worst)
    data = {f"max_relative_{fn}": _worst(v) for fn, v in exploratory.items()}
    return Case(name, res <= 1e-8, count, res, 1e-8, data)


def drop_case(seed: int, count: int = 10) -> Case:
    return _functional_case("functional.drop_equation", seed, count, 3,
                            grasspoly.check_drop_equation, 1)


def projection_case(seed: int, count: int = 10) -> Case:
    return _functional_case("functional.projection_equation", seed, count, 4,
                            grasspoly.check_projection_equation, 2)


def invariance_case(seed: int, count: int = 5) -> Case:
    """GL_3, rescaling and transposition behaviour of the closed trilog."""
    rng = np.random.default_rng([seed, 6])
    worst = []
    for _ in range(count):
        cfg = random_float_configuration(rng, 6, 3)
        base = grasspoly.grass_trilog_closed(cfg).closed
        g = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
        lam = _cvec(rng, 6)
        moved = Configuration(tuple(tuple(complex(x) for x in lam[k] * (g @ np.array(v)))
                                    for k, v in enumerate(cfg.vectors)), 3, 1 + 0j)
        swapped = Configuration((cfg.vectors[1], cfg.vectors[0]) + cfg.vectors[2:], 3, 1 + 0j)
        scale = max(1.0, abs(base))
        worst.append(abs(grasspoly.grass_trilog_closed(moved).closed - base) / scale)
        worst.append(abs(grasspoly.grass_trilog_closed(swapped).closed + base) / scale)
    res = _worst(worst)
    return Case("functional.invariance", res <= 1e-10, count, res, 1e-10)


def stratum_case(points=STRATUM_POINTS) -> Case:
    rows = []
    worst = []
    for z in points:
        value = grasspoly.special_stratum_value(z)
        target = sv_trilog(z)
        worst.append(abs(value - target))
        rows.append({"z": complex(z), "value": value, "sv_trilog": target,
                     "difference": value - target})
    res = _worst(worst)
    return Case("functional.special_stratum", res <= 1e-3, len(rows), res, 1e-3, {"rows": rows})


def suite_functional(seed: int) -> list[Case]:
    return [drop_case(seed), projection_case(seed), invariance_case(seed), stratum_case()]


# ----------------------------------------------------------------------------
# quadrature

def dilog_case(seed: int, count: int = 20, budget: int = 100_000) -> Case:
    rng = np.random.default_rng([seed, 7])
    worst = []
    samples = []
    for _ in range(count):
        cfg = random_float_configuration(rng, 4, 2)
        est = grasspoly.grass_dilog(cfg, "numeric", budget=budget)
        worst.append(abs(est.value - grasspoly.grass_dilog(cfg, "closed")))
        samples.append(est.samples)
    res = _worst(worst)
    return Case("quadrature.weight2_coincidence", res <= 1e-5, count, res, 1e-5,
                {"budget": budget, "max_samples": max(samples)})


def theorem_main_case(seed: int, count: int = 5, budget: int = 5_000_000) -> Case:
    rng = np.random.default_rng([seed, 8])
    rows = []
    ok = True
    worst = []
    for k in range(count):
        cfg = conditioned_float_configuration(rng, 6, 3)
        rep = grasspoly.grass_trilog_numeric(cfg, budget=budget, seed=seed + k)
        err = abs(rep.residuals["theorem_main"])
        sig = rep.residuals["theorem_main_sigma"]
        tol = max(3 * sig, 1e-2 * abs(rep.closed) + 1e-2)
        ok &= err <= tol
        worst.append(err / tol)
        rows.append({"closed": rep.closed, "numeric": rep.closed + rep.residuals["theorem_main"],
                     "sigma": sig, "tolerance": tol})
    return Case("quadrature.theorem_main", ok, count, _worst(worst), 1.0,
                {"budget": budget, "rows": rows, "note": "max_residual is error / tolerance"})


def orientation_case() -> Case:
    try:
        tag = quad.orientation_calibrate()
    except RuntimeError as exc:
        return Case("quadrature.orientation", False, 1, data={"error": str(exc)})
    return Case("quadrature.orientation", tag == quad.ORIENTATION_STANDARD, 1, data={"tag": tag})


def suite_quadrature(seed: int, budget: int | None = None) -> list[Case]:
    return [orientation_case(),
            dilog_case(seed, budget=budget or 100_000),
            theorem_main_case(seed, budget=budget or 5_000_000)]


def run_suite(name: str, seed: int = 42, budget: int | None = None) -> list[Case]:
    if name == "all":
        out = []
        for s in SUITES:
            out.extend(run_suite(s, seed, budget))
        return out
    if name == "exact":
        return suite_exact(seed)
    if name == "forms":
        return suite_forms(seed)
    if name == "functional":
        return suite_functional(seed)
    if name == "quadrature":
        return suite_quadrature(seed, budget)
    raise ValueError(f"unknown suite {name!r}")


__all__ = ["Case", "SUITES", "run_suite"]
