"""Polylogarithms against mpmath and direct series oracles."""

import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grasslog.errors import CutError, DomainError
from grasslog.polylog import CATALAN, ZETA2, ZETA3, bloch_wigner, li, sv_trilog

mpmath.mp.dps = 30


def series(n, z, terms=500):
    return sum(z**k / k**n for k in range(1, terms + 1))


def mp_li(n, z):
    return complex(mpmath.polylog(n, mpmath.mpc(z.real, z.imag)))


def mp_D(z):
    z = complex(z)
    return float(mpmath.im(mpmath.polylog(2, z)) + mpmath.arg(1 - mpmath.mpc(z)) * mpmath.log(abs(z)))


def mp_L3(z):
    z = mpmath.mpc(z)
    lz = mpmath.log(abs(z))
    return float(mpmath.re(mpmath.polylog(3, z) - lz * mpmath.polylog(2, z))
                 - lz**2 * mpmath.log(abs(1 - z)) / 3)


# oracle constants first
def test_constants_match_series_oracles():
    assert abs(ZETA2 - sum(1 / k**2 for k in range(1, 200001)) - 1 / 200000) < 1e-10
    assert abs(ZETA3 - float(mpmath.zeta(3))) < 1e-15
    assert abs(CATALAN - sum((-1) ** k / (2 * k + 1) ** 2 for k in range(200000))) < 1e-10


def test_li_examples():
    assert li(2, 0) == 0
    assert abs(li(2, 1) - math.pi**2 / 6) < 1e-13
    assert abs(li(3, -1) - (-0.75 * ZETA3)) < 1e-13
    assert abs(li(3, -1) + 0.9015426774) < 1e-10


def test_li_matches_direct_series_in_small_disc():
    rng = np.random.default_rng(0)
    for _ in range(1000):
        r = 0.5 * math.sqrt(rng.uniform())
        z = r * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        for n in (1, 2, 3):
            ref = series(n, z)
            assert abs(li(n, z) - ref) <= 1e-12 * max(abs(ref), 1e-300) + 1e-300


@pytest.mark.parametrize("z", [2 + 0.1j, -3 + 0.4j, 0.9 + 0.3j, 0.5 + 0.8j, 1.2 - 0.9j, -0.7 - 0.1j,
                               10j, -50.0, 0.999 + 0.001j, 1.0 + 1e-3j, 0.6 + 0.6j])
def test_li_continuation_against_mpmath(z):
    for n in (1, 2, 3):
        ref = mp_li(n, z)
        assert abs(li(n, z) - ref) <= 1e-12 * max(1.0, abs(ref))


def test_li_domain_errors():
    with pytest.raises(DomainError):
        li(4, 0.1)
    with pytest.raises(CutError):
        li(2, 3.0)


def test_bloch_wigner_examples():
    assert bloch_wigner(0.3) == 0 or abs(bloch_wigner(0.3)) < 1e-15
    for x in (-5.0, 0.0, 1.0, 2.5, 7.0):
        assert abs(bloch_wigner(x)) < 1e-14
    assert abs(bloch_wigner(1j) - CATALAN) < 1e-13
    z = 0.3 + 0.7j
    assert abs(bloch_wigner(z.conjugate()) + bloch_wigner(z)) < 1e-14


def test_bloch_wigner_against_mpmath():
    rng = np.random.default_rng(1)
    for _ in range(200):
        z = complex(*rng.normal(size=2) * 3)
        assert abs(bloch_wigner(z) - mp_D(z)) < 1e-12


def test_bloch_wigner_symmetries():
    rng = np.random.default_rng(2)
    for _ in range(1000):
        z = complex(*rng.normal(size=2) * 2)
        d = bloch_wigner(z)
        assert abs(d + bloch_wigner(1 / z)) < 1e-11
        assert abs(d + bloch_wigner(z.conjugate())) < 1e-11
        # six-fold symmetry, checked rather than assumed
        assert abs(d + bloch_wigner(1 - z)) < 1e-11


def test_five_term_relation():
    rng = np.random.default_rng(3)
    for _ in range(200):
        x, y = (complex(*rng.normal(size=2)) for _ in range(2))
        s = (bloch_wigner(x) + bloch_wigner(y) + bloch_wigner((1 - x) / (1 - x * y))
             + bloch_wigner(1 - x * y) + bloch_wigner((1 - y) / (1 - x * y)))
        assert abs(s) < 1e-10


def test_sv_trilog_examples():
    assert sv_trilog(0) == 0
    assert abs(sv_trilog(1) - ZETA3) < 1e-14
    assert abs(sv_trilog(0.5) - 7 / 8 * ZETA3) < 1e-13
    assert abs(sv_trilog(0.5) - 1.0517997903) < 1e-9
    assert abs(sv_trilog(-1) + 0.75 * ZETA3) < 1e-13
    assert sv_trilog(complex("inf")) == 0


def test_sv_trilog_against_mpmath():
    rng = np.random.default_rng(4)
    for _ in range(200):
        z = complex(*rng.normal(size=2) * 3)
        assert abs(sv_trilog(z) - mp_L3(z)) < 1e-12


def test_sv_trilog_inversion_symmetry():
    rng = np.random.default_rng(5)
    for _ in range(500):
        z = 10 ** rng.uniform(-1, 1) * cmath.exp(1j * rng.uniform(-math.pi, math.pi))
        assert abs(sv_trilog(1 / z) - sv_trilog(z)) < 1e-10


def test_sv_trilog_three_term_relation():
    rng = np.random.default_rng(6)
    for _ in range(200):
        z = complex(*rng.normal(size=2) * 2)
        s = sv_trilog(z) + sv_trilog(1 - z) + sv_trilog(1 - 1 / z)
        assert abs(s - ZETA3) < 1e-10


def test_sv_trilog_continuity_at_one():
    for k in range(20):
        z = 1 + 1e-4 * cmath.exp(2j * math.pi * (k + 0.5) / 20)
        assert abs(sv_trilog(z) - ZETA3) < 1e-6


@pytest.mark.parametrize("invert", [False, True])
def test_sv_trilog_continuity_at_zero_and_infinity(invert):
    # near 0 the value decays like |z| log^2|z| / 3, so 1e-6 needs |z| ~ 1e-9
    for r, tol in ((1e-4, None), (1e-9, 1e-6)):
        bound = r * (1 + abs(math.log(r)) + math.log(r) ** 2 / 3) * 1.01
        for k in range(20):
            z = r * cmath.exp(2j * math.pi * (k + 0.5) / 20)
            v = sv_trilog(1 / z if invert else z)
            assert abs(v - mp_L3(1 / z if invert else z)) < 1e-12
            assert abs(v) <= (tol or bound)


def test_cut_straddling_points_agree():
    for x in (1.5, 3.0, 20.0):
        above, below = x + 1e-12j, x - 1e-12j
        assert abs(sv_trilog(above) - sv_trilog(below)) < 1e-9
        assert abs(bloch_wigner(above)) < 1e-9 and abs(bloch_wigner(below)) < 1e-9


@settings(max_examples=200, deadline=None)
@given(st.complex_numbers(min_magnitude=1e-3, max_magnitude=1e3, allow_nan=False, allow_infinity=False))
def test_sv_values_are_finite(z):
    assert math.isfinite(sv_trilog(z))
    assert math.isfinite(bloch_wigner(z))
