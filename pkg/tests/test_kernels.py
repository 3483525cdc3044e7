"""numba and numpy kernel backends agree; the env flag selects the backend."""

import math
import os
import subprocess
import sys

import numpy as np
import pytest

from grasslog import kernels

numba = pytest.importorskip("numba")


def _points(rng, n, k):
    return rng.normal(size=(k, n)) + 1j * rng.normal(size=(k, n))


def test_cp2_backends_agree():
    rng = np.random.default_rng(0)
    forms = _points(rng, 3, 6)
    V = _points(rng, 3, 5000)
    a = kernels.cp2_trilog(V, forms, "numpy")
    b = kernels.cp2_trilog(V, forms, "numba")
    assert np.allclose(a, b, rtol=1e-7, atol=1e-9 * np.max(np.abs(a)))


def test_cp1_backends_agree():
    rng = np.random.default_rng(1)
    forms = _points(rng, 2, 4)
    V = _points(rng, 2, 5000)
    a = kernels.cp1_dilog(V, forms, "numpy")
    b = kernels.cp1_dilog(V, forms, "numba")
    assert np.allclose(a, b, rtol=1e-10, atol=1e-12)


def test_kernels_are_projective():
    rng = np.random.default_rng(2)
    forms = _points(rng, 3, 6)
    V = _points(rng, 3, 100)
    lam = _points(rng, 1, 100)
    a = kernels.cp2_trilog(V, forms, "numpy")
    b = kernels.cp2_trilog(V * lam, forms, "numpy")
    assert np.allclose(a, b, rtol=1e-8)


def test_cp1_kernel_matches_formula():
    forms = np.array([[1, 0], [0, 1], [1, 1], [1, -1j]], dtype=complex)
    t = 0.3 + 0.4j
    V = np.array([[1, t]])
    f = [forms[j, 0] + forms[j, 1] * t for j in range(4)]
    g = [forms[j, 1] / f[j] - forms[0, 1] / f[0] for j in range(4)]
    dens = math.log(abs(f[1] / f[0])) * (g[2] * np.conj(g[3])).imag
    ref = dens * math.pi * (1 + abs(t) ** 2) ** 2
    assert abs(kernels.cp1_dilog(V, forms, "numpy")[0] - ref) < 1e-14


@pytest.mark.parametrize("flag,expected", [("1", "numpy"), ("0", "numba")])
def test_env_flag_selects_backend(flag, expected):
    env = dict(os.environ, GRASSLOG_NO_NUMBA=flag)
    out = subprocess.run([sys.executable, "-c", "from grasslog import kernels; print(kernels.active_backend())"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == expected
