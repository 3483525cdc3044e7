"""Integration of log-singular top forms over CP^1 and CP^2.

CP^1 (deterministic).  The sphere is covered by the charts ``|t| <= 1`` and
``|s| <= 1`` with ``s = 1/t``.  Around each zero of a linear form sits a
smooth bump ``chi_k``; ``chi_k K`` is integrated in polar coordinates about the
zero with geometrically graded Gauss-Legendre nodes in the radius (the
``log r`` and ``log r / r`` singularities are integrable after the ``r dr``
Jacobian) and the trapezoid rule in the angle.  The smooth remainder
``(1 - sum chi_k) K`` is integrated by globally adaptive tensor Gauss rules
on polar cells of both charts.

CP^2 (statistical).  Randomized Sobol points are pushed to CP^2 through a
deterministic mixture of seven densities: the Fubini-Study measure and, for
each of the six singular lines ``l_j = 0``, a density proportional to
``1 / sin(rho_j)`` relative to it, ``rho_j`` being the Fubini-Study distance
to the line.  Weighting by the full mixture (balance heuristic) keeps the
estimator's variance finite despite the ``log(rho) / rho`` blow-up of the
integrand along the lines.  Sixteen independent scrambles give sigma.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.stats import qmc

from . import kernels
from .errors import NonGenericError
from .formeval import FunctionSystem

ORIENTATION_STANDARD = "+1:standard-complex"
CONVENTION = "chart-density=form(dx1,dy1,dx2,dy2)"
NONGENERIC_EPS = 1e-8
CP2_BATCHES = 16

_GL = {n: np.polynomial.legendre.leggauss(n) for n in (4, 5, 6, 7, 8, 10)}


@dataclass(frozen=True)
class Integrand:
    """A top form on CP^{n-1} built from a function system.

    ``kernel`` is ``"dilog"`` (``log|f_1| dlog|f_2| ^ dlog|f_3|`` on CP^1),
    ``"trilog"`` (``log|f_1| dlog|f_2| ^ .. ^ dlog|f_5|`` on CP^2) or
    ``"custom"``.  A custom ``density(t, logabs, g)`` receives chart
    coordinates ``t`` (N, n-1), ``log|f_j|`` (N, m) and ``g[:, j, k] =
    d log f_j / d t_k`` and returns the form evaluated on
    ``(d/dx_1, d/dy_1, ...)``.
    """

    fs: FunctionSystem | None
    kernel: str = "dilog"
    density: Callable | None = None
    dim: int | None = None

    def __post_init__(self):
        if self.kernel not in ("dilog", "trilog", "custom"):
            raise ValueError(f"unknown kernel {self.kernel!r}")
        if self.kernel == "custom" and self.density is None:
            raise ValueError("custom kernel needs a density callable")
        if self.fs is None and self.kernel != "custom":
            raise ValueError("dilog/trilog kernels need a function system")
        want = {"dilog": (2, 4), "trilog": (3, 6)}.get(self.kernel)
        if want and (self.fs.dim, len(self.fs.forms)) != want:
            raise ValueError(f"{self.kernel} kernel needs {want[1]} covectors in dimension {want[0]}")

    @property
    def space_dim(self) -> int:
        if self.fs is not None:
            return self.fs.dim
        if self.dim is None:
            raise ValueError("custom integrand without function system needs dim")
        return self.dim

    def forms_array(self) -> np.ndarray:
        """Covectors ordered (denominator, f_1, f_2, ...)."""
        fs = self.fs
        order = [fs.denominator] + fs.numerators
        return np.array([fs.forms[i] for i in order], dtype=complex)


@dataclass
class QuadratureEstimate:
    value: float
    sigma: float
    samples: int
    method: str
    orientation: str = ORIENTATION_STANDARD
    budget_exceeded: bool = False
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"value": self.value, "sigma": self.sigma, "samples": self.samples,
                "method": self.method, "orientation": self.orientation,
                "budget_exceeded": self.budget_exceeded}


def orientation_calibrate(budget: int = 20000) -> str:
    """Fix the global sign from the Fubini-Study area of CP^1.

    ``(i/2) dz ^ dz-bar / (1 + |z|^2)^2`` evaluated on ``(d/dx, d/dy)`` is the
    positive density ``(1 + |z|^2)^-2``; its integral must come out as ``+pi``.
    """
    area = Integrand(None, "custom", lambda t, la, g: 1.0 / (1.0 + np.abs(t[:, 0]) ** 2) ** 2, dim=2)
    est = integrate_cp1(area, budget=budget, tol=1e-10)
    if not abs(est.value - math.pi) < 1e-6:
        raise RuntimeError(f"orientation calibration failed: area {est.value} != pi")
    return ORIENTATION_STANDARD


# ----------------------------------------------------------------------------
# CP^1

def _cp1_chart_density(intg: Integrand, chart: int, z: np.ndarray) -> np.ndarray:
    """Form density on (d/dx, d/dy) in chart 0 (V = (1, t)) or chart 1 (V = (s, 1))."""
    z = np.asarray(z, dtype=complex).ravel()
    if intg.kernel == "custom":
        t = z[:, None]
        if intg.fs is None:
            return np.asarray(intg.density(t, np.zeros((len(z), 0)), np.zeros((len(z), 0, 1))), dtype=float)
        forms = intg.forms_array()
        V = np.stack([np.ones_like(z), z], axis=1) if chart == 0 else np.stack([z, np.ones_like(z)], axis=1)
        vals = V @ forms.T
        d = forms[:, 1 - chart][None, :] / vals
        g = (d[:, 1:] - d[:, :1])[:, :, None]
        logabs = np.log(np.abs(vals[:, 1:])) - np.log(np.abs(vals[:, :1]))
        return np.asarray(intg.density(t, logabs, g), dtype=float)
    V = np.stack([np.ones_like(z), z], axis=1) if chart == 0 else np.stack([z, np.ones_like(z)], axis=1)
    kfs = kernels.cp1_dilog_np(V, intg.forms_array())
    return kfs / (math.pi * (1.0 + np.abs(z) ** 2) ** 2)


def _bump(u):
    """C-infinity step: 1 for u <= 1/2, 0 for u >= 1."""
    u = np.asarray(u, dtype=float)
    out = np.zeros_like(u)
    out[u <= 0.5] = 1.0
    mid = (u > 0.5) & (u < 1.0)
    a = 1.0 - u[mid]
    b = u[mid] - 0.5
    ea = np.exp(-1.0 / a)
    eb = np.exp(-1.0 / b)
    out[mid] = ea / (ea + eb)
    return out


@dataclass(frozen=True)
class _Singular:
    chart: int
    center: complex
    radius: float


def _zero_points(forms: np.ndarray) -> np.ndarray:
    """Homogeneous zeros ``(-l_1, l_0)`` of each covector, normalized."""
    p = np.stack([-forms[:, 1], forms[:, 0]], axis=1)
    return p / np.linalg.norm(p, axis=1)[:, None]


def chordal_distance(p, q) -> float:
    return abs(p[0] * q[1] - p[1] * q[0]) / (np.linalg.norm(p) * np.linalg.norm(q))


def _singular_points(forms: np.ndarray, radius_scale: float) -> list[_Singular]:
    pts = _zero_points(forms)
    # distinct zeros only: repeated forms give one bump
    uniq = []
    for p in pts:
        if all(chordal_distance(p, q) > 1e-14 for q in uniq):
            uniq.append(p)
    out = []
    for i, p in enumerate(uniq):
        dmin = min((chordal_distance(p, q) for j, q in enumerate(uniq) if j != i), default=1.0)
        if dmin < NONGENERIC_EPS:
            raise NonGenericError(f"zeros of two forms coincide (chordal distance {dmin:.3g})")
        rad = min(0.4 * dmin, 0.4) * radius_scale
        if abs(p[0]) >= abs(p[1]):
            out.append(_Singular(0, complex(p[1] / p[0]), rad))
        else:
            out.append(_Singular(1, complex(p[0] / p[1]), rad))
    return out


def _check_distinct(forms: np.ndarray):
    pts = _zero_points(forms)
    for i in range(len(pts)):
        for j in range(i):
            d = chordal_distance(pts[i], pts[j])
            if d < NONGENERIC_EPS:
                raise NonGenericError(f"zero loci of forms {j} and {i} coincide (distance {d:.3g})")


def _radial_rule(delta: float, n: int, levels: int = 10, q: float = 0.1, outer: int = 2):
    """Nodes/weights on (0, delta]: ``outer`` panels on [delta/2, delta], geometric below."""
    x, w = _GL[n]
    nodes, weights = [], []
    edges = np.linspace(0.5 * delta, delta, outer + 1)
    for a, b in zip(edges[:-1], edges[1:]):
        nodes.append(0.5 * (b - a) * x + 0.5 * (a + b))
        weights.append(0.5 * (b - a) * w)
    hi = 0.5 * delta
    for _ in range(levels):
        lo = hi * q
        nodes.append(0.5 * (hi - lo) * x + 0.5 * (hi + lo))
        weights.append(0.5 * (hi - lo) * w)
        hi = lo
    return np.concatenate(nodes), np.concatenate(weights)


def _local_integral(intg: Integrand, s: _Singular, n_r: int, n_theta: int) -> tuple[float, int]:
    r, wr = _radial_rule(s.radius, n_r)
    theta = 2.0 * math.pi * np.arange(n_theta) / n_theta
    R, TH = np.meshgrid(r, theta, indexing="ij")
    z = s.center + R * np.exp(1j * TH)
    dens = _cp1_chart_density(intg, s.chart, z.ravel()).reshape(R.shape)
    chi = _bump(r / s.radius)
    radial = (dens.mean(axis=1) * 2.0 * math.pi) * r * chi
    return float(np.dot(radial, wr)), dens.size


def _chi_sum(sing: list[_Singular], chart: int, z: np.ndarray) -> np.ndarray:
    total = np.zeros(z.shape)
    with np.errstate(divide="ignore", invalid="ignore"):
        zo = np.where(z == 0, np.inf, 1.0 / z)
    for s in sing:
        zz = z if s.chart == chart else zo
        d = np.abs(zz - s.center) / s.radius
        d = np.where(np.isfinite(d), d, 2.0)
        total += _bump(d)
    return total


def _split(c):
    chart, r0, r1, p0, p1 = c
    rm, pm = 0.5 * (r0 + r1), 0.5 * (p0 + p1)
    return [(chart, r0, rm, p0, pm), (chart, rm, r1, p0, pm),
            (chart, r0, rm, pm, p1), (chart, rm, r1, pm, p1)]


def _remainder(intg, sing, tol, budget, order: int = 5):
    """Adaptive integral of (1 - sum chi) K over both charts; returns (value, err, evals).

    Every cell carries its own tensor Gauss value and the sum over its four
    children; the difference is the cell's error and the children's sum is
    its contribution.  The worst cell is split until the total error meets
    ``tol`` or the budget is spent.
    """
    x, w = _GL[order]
    W0 = np.outer(w, w)
    evals = 0

    def quad_cells(cs):
        nonlocal evals
        out = []
        by_chart = {0: [], 1: []}
        for i, c in enumerate(cs):
            by_chart[c[0]].append(i)
        vals = [0.0] * len(cs)
        for chart, idx in by_chart.items():
            if not idx:
                continue
            arr = np.array([cs[i][1:] for i in idx])
            r0, r1, p0, p1 = arr.T
            R = (0.5 * (r1 - r0))[:, None, None] * x[None, :, None] + (0.5 * (r1 + r0))[:, None, None]
            P = (0.5 * (p1 - p0))[:, None, None] * x[None, None, :] + (0.5 * (p1 + p0))[:, None, None]
            R, P = np.broadcast_arrays(R, P)
            z = R * np.exp(1j * P)
            weight = 1.0 - _chi_sum(sing, chart, z)
            live = weight != 0.0
            fz = np.zeros(R.shape)
            if live.any():
                fz[live] = weight[live] * _cp1_chart_density(intg, chart, z[live])
                evals += int(live.sum())
            jac = (0.25 * (r1 - r0) * (p1 - p0))[:, None, None]
            q = np.sum(fz * R * W0[None] * jac, axis=(1, 2))
            for k, i in enumerate(idx):
                vals[i] = float(q[k])
        return vals

    def make_entries(cs):
        qs = quad_cells(cs)
        kids = [k for c in cs for k in _split(c)]
        kq = quad_cells(kids)
        out = []
        for i, c in enumerate(cs):
            ksum = sum(kq[4 * i:4 * i + 4])
            out.append((abs(ksum - qs[i]), c, ksum, kids[4 * i:4 * i + 4], kq[4 * i:4 * i + 4]))
        return out

    # bumps seen from each chart: (center, radius) in that chart's coordinate
    seen = {0: [], 1: []}
    for sg in sing:
        seen[sg.chart].append((sg.center, sg.radius))
        if sg.center != 0:
            zc = 1.0 / sg.center
            seen[1 - sg.chart].append((zc, sg.radius * abs(zc) ** 2))

    def too_coarse(c):
        chart, r0, r1, p0, p1 = c
        zc = 0.5 * (r0 + r1) * np.exp(0.5j * (p0 + p1))
        diam = max(r1 - r0, r1 * (p1 - p0))
        return any(diam > 2.0 * rad and abs(zc - cc) < diam + rad for cc, rad in seen[chart])

    cells = []
    stack = [(chart, i / 4, (i + 1) / 4, 2 * math.pi * j / 8, 2 * math.pi * (j + 1) / 8)
             for chart in (0, 1) for i in range(4) for j in range(8)]
    while stack:
        c = stack.pop()
        if too_coarse(c):
            stack += _split(c)
        else:
            cells.append(c)
    cells.sort()

    heap = []
    counter = 0
    total = 0.0
    err = 0.0
    for e, c, ksum, kids, kq in make_entries(cells):
        heapq.heappush(heap, (-e, counter, ksum, kids, kq))
        counter += 1
        total += ksum
        err += e
    while err > tol and evals < budget and heap:
        e_neg, _, ksum, kids, kq = heapq.heappop(heap)
        total -= ksum
        err += e_neg
        for e, c, ks, kk, kkq in make_entries(kids):
            heapq.heappush(heap, (-e, counter, ks, kk, kkq))
            counter += 1
            total += ks
            err += e
    return total, err, evals


def integrate_cp1(intg: Integrand, budget: int = 100_000, tol: float = 1e-7,
                  radius_scale: float = 1.0, n_r: int = 8, n_theta: int = 32) -> QuadratureEstimate:
    """Integral of a 2-form over CP^1 (standard complex orientation)."""
    if intg.space_dim != 2:
        raise ValueError("integrate_cp1 needs an integrand on CP^1")
    sing = []
    if intg.fs is not None:
        forms = intg.forms_array()
        if intg.kernel == "dilog" and np.allclose(forms[2], forms[3]):
            return QuadratureEstimate(0.0, 0.0, 0, "cp1-adaptive", details={"reason": "f2 == f3"})
        _check_distinct_if_needed(forms, intg)
        sing = _singular_points(forms, radius_scale)
    local_total, local_err, evals = 0.0, 0.0, 0
    for s in sing:
        hi, n1 = _local_integral(intg, s, n_r, n_theta)
        lo, n2 = _local_integral(intg, s, n_r - 2, n_theta // 2)
        local_total += hi
        local_err += abs(hi - lo)
        evals += n1 + n2
    rem, rem_err, n3 = _remainder(intg, sing, max(tol - local_err, 0.25 * tol), max(budget - evals, 0))
    evals += n3
    sigma = local_err + rem_err
    return QuadratureEstimate(local_total + rem, sigma, evals, "cp1-adaptive",
                              budget_exceeded=sigma > tol,
                              details={"singular_points": len(sing), "local": local_total,
                                       "remainder": rem})


def _check_distinct_if_needed(forms, intg):
    # a custom integrand may repeat forms on purpose; the kernels may not
    if intg.kernel != "custom":
        _check_distinct(forms)


# ----------------------------------------------------------------------------
# CP^2

def _line_frames(forms: np.ndarray):
    """Unit normal ``n_j`` with ``l_j(n_j) = |l_j|`` and an orthonormal basis of ``ker l_j``."""
    frames = []
    for l in forms:
        n = np.conj(l) / np.linalg.norm(l)
        M = np.column_stack([n, np.eye(3, dtype=complex)])
        Q, _ = np.linalg.qr(M)
        Q = Q[:, :3]
        Q[:, 0] = n   # QR may flip the phase of the first column
        frames.append((n, Q[:, 1], Q[:, 2]))
    return frames


def _push_samples(u: np.ndarray, frame, fs_component: bool) -> np.ndarray:
    """Map points of the unit 4-cube to C^3 (one representative per point of CP^2)."""
    eps = 1e-14
    u = np.clip(u, eps, 1.0 - eps)
    if fs_component:
        cos_r = (1.0 - u[:, 0]) ** 0.25
        sin_r = np.sqrt(np.maximum(1.0 - cos_r**2, 0.0))
    else:
        sin_r = u[:, 0]
        cos_r = np.sqrt(1.0 - sin_r**2)
    sin_e = np.sqrt(u[:, 1])
    cos_e = np.sqrt(1.0 - u[:, 1])
    gam = 2.0 * math.pi * u[:, 2]
    phi = 2.0 * math.pi * u[:, 3]
    n, k1, k2 = frame
    inner = cos_e[:, None] * k1[None, :] + (sin_e * np.exp(1j * gam))[:, None] * k2[None, :]
    return cos_r[:, None] * inner + (sin_r * np.exp(1j * phi))[:, None] * n[None, :]


POINT_SCALE = 0.3


def _point_radius(u):
    """Radius with 2D density ``3 / (2 pi r (1 + r)^4)`` from a uniform variate."""
    return (1.0 - u) ** (-1.0 / 3.0) - 1.0


def _point_density(x):
    r = np.abs(x)
    return 3.0 / (2.0 * math.pi * np.maximum(r, 1e-300) * (1.0 + r) ** 4)


class _Mixture:
    """Sampling components on CP^2 and the summed density relative to Fubini-Study.

    Component 0 is Fubini-Study itself, then one component per singular line
    (density ``1 / (4 cos^2 rho sin rho)`` relative to FS) and one per double
    point ``l_i = l_j = 0``.  Near a double point the kernel behaves like
    ``1 / (rho_i rho_j)``; the point component samples the projective
    coordinates ``X = l_i / m``, ``Y = l_j / m`` (``m(v) = <v, P>``)
    independently from the 2D density ``3 / (2 pi r (1 + r)^4)`` at scale
    ``POINT_SCALE``, which makes kernel / density bounded there.
    """

    def __init__(self, forms: np.ndarray, double_points: bool = True):
        self.forms = forms / np.linalg.norm(forms, axis=1)[:, None]
        self.frames = _line_frames(self.forms)
        self.points = []
        if double_points:
            k = len(forms)
            for i in range(k):
                for j in range(i + 1, k):
                    P = np.cross(self.forms[i], self.forms[j])
                    nP = np.linalg.norm(P)
                    if nP < NONGENERIC_EPS:
                        continue
                    P = P / nP
                    A = np.array([self.forms[i], self.forms[j], np.conj(P)])
                    B = np.linalg.inv(A)
                    self.points.append((A, B, abs(np.linalg.det(B)) ** 2))
        self.ncomp = 1 + len(self.forms) + len(self.points)

    def sample(self, c: int, u: np.ndarray) -> np.ndarray:
        if c == 0:
            return _push_samples(u, self.frames[0], True)
        if c <= len(self.forms):
            return _push_samples(u, self.frames[c - 1], False)
        A, B, _ = self.points[c - 1 - len(self.forms)]
        u = np.clip(u, 1e-14, 1.0 - 1e-14)
        X = POINT_SCALE * _point_radius(u[:, 0]) * np.exp(2j * math.pi * u[:, 1])
        Y = POINT_SCALE * _point_radius(u[:, 2]) * np.exp(2j * math.pi * u[:, 3])
        w = np.stack([X, Y, np.ones_like(X)], axis=1)
        return w @ B.T

    def weight(self, V: np.ndarray) -> np.ndarray:
        """Sum of all component densities relative to the FS probability measure."""
        vn = np.linalg.norm(V, axis=1)
        s = np.abs(V @ self.forms.T) / vn[:, None]
        s = np.clip(s, 1e-300, 1.0)
        c2 = np.maximum(1.0 - s * s, 1e-300)
        total = 1.0 + np.sum(1.0 / (4.0 * c2 * s), axis=1)
        for A, B, detB2 in self.points:
            lv = V @ A.T
            m = lv[:, 2]
            with np.errstate(divide="ignore", invalid="ignore"):
                X = lv[:, 0] / m
                Y = lv[:, 1] / m
                q = (_point_density(X / POINT_SCALE) * _point_density(Y / POINT_SCALE)
                     / POINT_SCALE**4)
                # FS density in (X, Y): (2/pi^2) |det B|^2 / |B w|^6, |B w| = |v| / |m|
                fs = (2.0 / math.pi**2) * detB2 * (np.abs(m) / vn) ** 6
                wp = np.where(np.abs(m) > 0, q / fs, 0.0)
            total = total + np.nan_to_num(wp, nan=0.0, posinf=0.0)
        return total


def mixture_weight(V: np.ndarray, forms: np.ndarray) -> np.ndarray:
    """Summed mixture density relative to Fubini-Study (see :class:`_Mixture`)."""
    return _Mixture(forms).weight(V)


def _cp2_kfs(intg: Integrand, V: np.ndarray, backend: str | None) -> np.ndarray:
    forms = intg.forms_array()
    if intg.kernel == "trilog":
        return kernels.cp2_trilog(V, forms, backend)
    logabs, g, t2 = kernels.general_chart_data_np(V, forms)
    a = np.argmax(np.abs(V), axis=1)
    Vn = V / V[np.arange(len(V)), a][:, None]
    others = np.array([[k for k in range(3) if k != j] for j in range(3)])[a]
    t = np.take_along_axis(Vn, others, axis=1)
    dens = np.asarray(intg.density(t, logabs, g), dtype=float)
    return dens * kernels.HALF_PI2 * (1.0 + t2) ** 3


def check_generic_cp2(forms: np.ndarray):
    """Six pairwise distinct lines, no three through a point (relative 1e-8)."""
    nrm = np.linalg.norm(forms, axis=1)
    k = len(forms)
    for i in range(k):
        for j in range(i):
            c = np.linalg.norm(np.cross(forms[i], forms[j])) / (nrm[i] * nrm[j])
            if c < NONGENERIC_EPS:
                raise NonGenericError(f"lines {j} and {i} coincide")
    for a in range(k):
        for b in range(a):
            for c in range(b):
                d = abs(np.linalg.det(forms[[c, b, a]])) / (nrm[a] * nrm[b] * nrm[c])
                if d < NONGENERIC_EPS:
                    raise NonGenericError(f"lines {c}, {b}, {a} are concurrent")


def _sobol(seed_seq: np.random.SeedSequence, m: int) -> np.ndarray:
    gen = np.random.default_rng(seed_seq)
    return qmc.Sobol(d=4, scramble=True, rng=gen).random_base2(m)


def integrate_cp2(intg: Integrand, budget: int = 5_000_000, seed: int = 42,
                  backend: str | None = None, require_generic: bool = True,
                  chunk: int = 1 << 15, double_points: bool = True) -> QuadratureEstimate:
    """Integral of a 4-form over CP^2 by mixture-weighted scrambled Sobol sampling."""
    if intg.space_dim != 3:
        raise ValueError("integrate_cp2 needs an integrand on CP^2")
    forms = intg.forms_array()
    if require_generic:
        check_generic_cp2(forms)
    mix = _Mixture(forms, double_points)
    ncomp = mix.ncomp
    per = budget // (CP2_BATCHES * ncomp)
    if per < 2:
        raise ValueError(f"budget {budget} too small for {CP2_BATCHES} batches of {ncomp} components")
    m = int(math.floor(math.log2(per)))
    npts = 1 << m
    children = np.random.SeedSequence(seed).spawn(CP2_BATCHES * ncomp)
    batch_vals = np.empty(CP2_BATCHES)
    for b in range(CP2_BATCHES):
        acc = 0.0
        for c in range(ncomp):
            u = _sobol(children[b * ncomp + c], m)
            part = 0.0
            for start in range(0, npts, chunk):
                V = mix.sample(c, u[start:start + chunk])
                k = _cp2_kfs(intg, V, backend)
                w = mix.weight(V)
                part += math.fsum(np.nan_to_num(k / w, nan=0.0, posinf=0.0, neginf=0.0))
            acc += part / npts
        batch_vals[b] = acc
    value = float(math.fsum(batch_vals) / CP2_BATCHES)
    sigma = float(np.std(batch_vals, ddof=1) / math.sqrt(CP2_BATCHES))
    samples = CP2_BATCHES * ncomp * npts
    return QuadratureEstimate(value, sigma, samples, "cp2-mixture-sobol",
                              details={"batches": batch_vals.tolist(), "points_per_component": npts,
                                       "backend": backend or kernels.active_backend(), "seed": seed})
