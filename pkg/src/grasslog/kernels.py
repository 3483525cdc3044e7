"""Vectorized integrand kernels for the CP^1 and CP^2 quadratures.

Two interchangeable backends compute the same densities:

* ``numpy``: array expressions over the whole batch;
* ``numba``: ``@njit`` loops, used when numba imports and the environment
  variable ``GRASSLOG_NO_NUMBA`` is unset (or ``0``).

Both take homogeneous points in ``C^n`` and covectors ordered
``(l_den, l_1, ..., l_m)`` so that ``f_j = l_j / l_den``.
"""

from __future__ import annotations

import math
import os

import numpy as np

HALF_PI2 = 0.5 * math.pi**2

try:  # pragma: no cover - exercised implicitly
    import numba
    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    _HAVE_NUMBA = False


def numba_requested() -> bool:
    return os.environ.get("GRASSLOG_NO_NUMBA", "0") in ("", "0")


def active_backend() -> str:
    return "numba" if (_HAVE_NUMBA and numba_requested()) else "numpy"


# ----------------------------------------------------------------------------
# numpy backend

def _chart_coords_np(V):
    """Chart where |v_a| is largest; returns normalized V, other indices, |t|^2."""
    a = np.argmax(np.abs(V), axis=1)
    Vn = V / V[np.arange(len(V)), a][:, None]
    n = V.shape[1]
    others = np.array([[k for k in range(n) if k != j] for j in range(n)])[a]
    t2 = np.sum(np.abs(Vn) ** 2, axis=1) - 1.0
    return Vn, others, t2


def cp1_dilog_np(V, forms):
    """``log|f_1| dlog|f_2| ^ dlog|f_3|`` per Fubini-Study probability measure.

    ``V`` is (N, 2) complex, ``forms`` (4, 2) complex.  The density in the
    affine coordinate is ``log|f_1| Im(g_2 conj(g_3))``, with ``g = dlog f/dt``.
    """
    Vn, others, t2 = _chart_coords_np(V)
    vals = Vn @ forms.T                                   # (N, 4)
    dcol = forms[:, others[:, 0]].T                       # (N, 4) derivative along t
    g = dcol / vals
    g = g[:, 1:] - g[:, :1]
    L1 = np.log(np.abs(vals[:, 1])) - np.log(np.abs(vals[:, 0]))
    dens = L1 * np.imag(g[:, 1] * np.conj(g[:, 2]))
    return dens * math.pi * (1.0 + t2) ** 2


def cp2_trilog_np(V, forms):
    """``log|f_1| dlog|f_2| ^ .. ^ dlog|f_5|`` per Fubini-Study probability measure.

    ``V`` is (N, 3) complex, ``forms`` (6, 3).  Chart density is
    ``log|f_1| det[Re g_j1, -Im g_j1, Re g_j2, -Im g_j2]_{j=2..5}``.
    """
    Vn, others, t2 = _chart_coords_np(V)
    vals = Vn @ forms.T                                   # (N, 6)
    d1 = forms[:, others[:, 0]].T / vals
    d2 = forms[:, others[:, 1]].T / vals
    g1 = d1[:, 2:] - d1[:, :1]                            # (N, 4)
    g2 = d2[:, 2:] - d2[:, :1]
    M = np.stack([g1.real, -g1.imag, g2.real, -g2.imag], axis=2)   # (N, 4, 4)
    det = np.linalg.det(M)
    L1 = np.log(np.abs(vals[:, 1])) - np.log(np.abs(vals[:, 0]))
    return L1 * det * HALF_PI2 * (1.0 + t2) ** 3


def general_chart_data_np(V, forms):
    """``(log|f_j|, g_{j,k})`` for all ratio functions in the max-modulus chart.

    Returns logabs (N, m), g (N, m, n-1) and the FS factor ``|t|^2``.
    """
    Vn, others, t2 = _chart_coords_np(V)
    vals = Vn @ forms.T
    n = V.shape[1]
    gs = []
    for k in range(n - 1):
        d = forms[:, others[:, k]].T / vals
        gs.append(d[:, 1:] - d[:, :1])
    g = np.stack(gs, axis=2)
    logabs = np.log(np.abs(vals[:, 1:])) - np.log(np.abs(vals[:, :1]))
    return logabs, g, t2


# ----------------------------------------------------------------------------
# numba backend

if _HAVE_NUMBA:
    @numba.njit(cache=True)
    def _det4(m):
        a = m[0, 0] * (m[1, 1] * (m[2, 2] * m[3, 3] - m[2, 3] * m[3, 2])
                       - m[1, 2] * (m[2, 1] * m[3, 3] - m[2, 3] * m[3, 1])
                       + m[1, 3] * (m[2, 1] * m[3, 2] - m[2, 2] * m[3, 1]))
        b = m[0, 1] * (m[1, 0] * (m[2, 2] * m[3, 3] - m[2, 3] * m[3, 2])
                       - m[1, 2] * (m[2, 0] * m[3, 3] - m[2, 3] * m[3, 0])
                       + m[1, 3] * (m[2, 0] * m[3, 2] - m[2, 2] * m[3, 0]))
        c = m[0, 2] * (m[1, 0] * (m[2, 1] * m[3, 3] - m[2, 3] * m[3, 1])
                       - m[1, 1] * (m[2, 0] * m[3, 3] - m[2, 3] * m[3, 0])
                       + m[1, 3] * (m[2, 0] * m[3, 1] - m[2, 1] * m[3, 0]))
        d = m[0, 3] * (m[1, 0] * (m[2, 1] * m[3, 2] - m[2, 2] * m[3, 1])
                       - m[1, 1] * (m[2, 0] * m[3, 2] - m[2, 2] * m[3, 0])
                       + m[1, 2] * (m[2, 0] * m[3, 1] - m[2, 1] * m[3, 0]))
        return a - b + c - d

    @numba.njit(cache=True)
    def cp2_trilog_nb(V, forms):
        N = V.shape[0]
        out = np.empty(N)
        vals = np.empty(6, dtype=np.complex128)
        M = np.empty((4, 4))
        Vn = np.empty(3, dtype=np.complex128)
        for i in range(N):
            a = 0
            best = abs(V[i, 0])
            for k in range(1, 3):
                if abs(V[i, k]) > best:
                    best = abs(V[i, k])
                    a = k
            piv = V[i, a]
            t2 = 0.0
            for k in range(3):
                Vn[k] = V[i, k] / piv
                if k != a:
                    t2 += Vn[k].real ** 2 + Vn[k].imag ** 2
            b = 1 if a == 0 else 0
            c = 1 if a == 2 else 2
            for j in range(6):
                vals[j] = forms[j, 0] * Vn[0] + forms[j, 1] * Vn[1] + forms[j, 2] * Vn[2]
            e1 = forms[0, b] / vals[0]
            e2 = forms[0, c] / vals[0]
            for r in range(4):
                j = r + 2
                g1 = forms[j, b] / vals[j] - e1
                g2 = forms[j, c] / vals[j] - e2
                M[r, 0] = g1.real
                M[r, 1] = -g1.imag
                M[r, 2] = g2.real
                M[r, 3] = -g2.imag
            L1 = math.log(abs(vals[1])) - math.log(abs(vals[0]))
            f = 1.0 + t2
            out[i] = L1 * _det4(M) * HALF_PI2 * f * f * f
        return out

    @numba.njit(cache=True)
    def cp1_dilog_nb(V, forms):
        N = V.shape[0]
        out = np.empty(N)
        vals = np.empty(4, dtype=np.complex128)
        for i in range(N):
            a = 0 if abs(V[i, 0]) >= abs(V[i, 1]) else 1
            b = 1 - a
            t = V[i, b] / V[i, a]
            for j in range(4):
                if a == 0:
                    vals[j] = forms[j, 0] + forms[j, 1] * t
                else:
                    vals[j] = forms[j, 0] * t + forms[j, 1]
            e = forms[0, b] / vals[0]
            g2 = forms[2, b] / vals[2] - e
            g3 = forms[3, b] / vals[3] - e
            L1 = math.log(abs(vals[1])) - math.log(abs(vals[0]))
            f = 1.0 + t.real ** 2 + t.imag ** 2
            out[i] = L1 * (g2 * np.conj(g3)).imag * math.pi * f * f
        return out
else:  # pragma: no cover
    cp2_trilog_nb = None
    cp1_dilog_nb = None


def cp2_trilog(V, forms, backend: str | None = None):
    backend = backend or active_backend()
    V = np.ascontiguousarray(V, dtype=np.complex128)
    forms = np.ascontiguousarray(forms, dtype=np.complex128)
    if backend == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        return cp2_trilog_nb(V, forms)
    return cp2_trilog_np(V, forms)


def cp1_dilog(V, forms, backend: str | None = None):
    backend = backend or active_backend()
    V = np.ascontiguousarray(V, dtype=np.complex128)
    forms = np.ascontiguousarray(forms, dtype=np.complex128)
    if backend == "numba":
        if not _HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is not installed")
        return cp1_dilog_nb(V, forms)
    return cp1_dilog_np(V, forms)
