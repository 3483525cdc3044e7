"""Pointwise evaluation of the logarithmic forms r_m and their relatives.

Forms are evaluated as alternating multilinear functionals on explicit real
tangent vectors, with the determinant convention
``(a_1 ^ ... ^ a_k)(w_1, ..., w_k) = det[a_i(w_j)]``.

Every function in a form is described at the evaluation point by two
numbers per tangent vector: ``log|f|`` and the complex value ``dlog f (w)``.
Then ``dlog|f|(w) = Re dlog f(w)``, ``d arg f (w) = Im dlog f(w)`` and the
antiholomorphic ``d log f-bar (w)`` is the complex conjugate.

Normalization of R(k)-valued results: a weight-m object takes values in
``i^(m-1) R``.  It is stored as a real number together with its weight
(:class:`FormValue`): the real part for odd m, the imaginary part for even m.
The Bloch-Wigner function is stored as ``D`` while the regulator uses
``i D``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .configspace import Configuration, cross_ratio, det, det_columns
from .errors import CrossRatioDegenerateError, DegenerateError, SingularityError, SizeError
from .polylog import bloch_wigner, sv_trilog

SINGULAR_ABS = 1e-300
PRESENTATIONS = ("definition", "holo", "reduced")


@dataclass(frozen=True)
class FormValue:
    """Real-stored value of a weight-``parity`` object (see module docstring)."""

    value: float
    parity: int

    @property
    def complex(self) -> complex:
        return complex(self.value) if self.parity % 2 else 1j * self.value

    @classmethod
    def from_complex(cls, z: complex, weight: int) -> "FormValue":
        z = complex(z)
        return cls(z.real if weight % 2 else z.imag, weight)


def pi_n(n: int, z) -> FormValue:
    """Real part for odd n, i * imaginary part for even n."""
    return FormValue.from_complex(z, n)


# ----------------------------------------------------------------------------
# function systems and chart points

@dataclass(frozen=True)
class FunctionSystem:
    """Linear forms ``l_0..l_m`` on ``V_n`` with a designated denominator.

    The rational functions on ``CP^{n-1}`` are ``f_i = l_i / l_den`` for the
    remaining indices, in increasing order.
    """

    forms: tuple
    dim: int
    denominator: int = 0

    def __post_init__(self):
        object.__setattr__(self, "forms", tuple(tuple(complex(x) for x in l) for l in self.forms))
        for l in self.forms:
            if len(l) != self.dim:
                raise ValueError("covector length does not match dim")

    @classmethod
    def from_config(cls, config: Configuration, denominator: int = 0) -> "FunctionSystem":
        return cls(tuple(tuple(complex(x) for x in v) for v in config.vectors), config.dim, denominator)

    @property
    def numerators(self) -> list[int]:
        return [i for i in range(len(self.forms)) if i != self.denominator]

    def __len__(self):
        return len(self.forms) - 1


@dataclass(frozen=True)
class ChartPoint:
    """Affine coordinates ``t`` in the chart where homogeneous coordinate ``chart`` is 1."""

    t: tuple
    chart: int = 0

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(complex(x) for x in self.t))

    def homogeneous(self) -> np.ndarray:
        v = list(self.t)
        v.insert(self.chart, 1.0 + 0j)
        return np.array(v, dtype=complex)

    def lift_direction(self, w) -> np.ndarray:
        """Real tangent vector ``(Re dt_1, Im dt_1, ...)`` -> homogeneous complex direction."""
        w = np.asarray(w, dtype=float)
        dt = list(w[0::2] + 1j * w[1::2])
        dt.insert(self.chart, 0j)
        return np.array(dt, dtype=complex)

    def shifted(self, w, h: float) -> "ChartPoint":
        w = np.asarray(w, dtype=float)
        dt = w[0::2] + 1j * w[1::2]
        return ChartPoint(tuple(np.array(self.t) + h * dt), self.chart)


def _linear_data(ls, V, dVs):
    vals = np.array([np.dot(l, V) for l in ls], dtype=complex)
    if np.any(np.abs(vals) < SINGULAR_ABS):
        bad = int(np.argmin(np.abs(vals)))
        raise SingularityError(f"point lies on the zero locus of form {bad}")
    grads = np.array([[np.dot(l, dV) for dV in dVs] for l in ls], dtype=complex).reshape(len(ls), len(dVs))
    return vals, grads / vals[:, None]


def function_data(fs: FunctionSystem, p: ChartPoint, ws):
    """``(log|f_i|, dlog f_i(w_k))`` for the ratio functions of ``fs``."""
    V = p.homogeneous()
    dVs = [p.lift_direction(w) for w in ws]
    vals, dl = _linear_data(fs.forms, V, dVs)
    d = fs.denominator
    num = fs.numerators
    logabs = np.log(np.abs(vals[num])) - np.log(abs(vals[d]))
    dlogs = dl[num] - dl[d][None, :]
    return logabs, dlogs


def linear_data(ls, t, dts):
    """``(log|l_i(t)|, dlog l_i(t)(dt_k))`` for linear functions on ``V_n``.

    ``dts`` are complex directions in ``V_n``.
    """
    V = np.asarray(t, dtype=complex)
    vals, dl = _linear_data([np.asarray(l, dtype=complex) for l in ls], V,
                            [np.asarray(d, dtype=complex) for d in dts])
    return np.log(np.abs(vals)), dl


def real_to_complex_direction(w) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    return w[0::2] + 1j * w[1::2]


# ----------------------------------------------------------------------------
# r_m in three presentations

@lru_cache(maxsize=None)
def _perm_table(m: int):
    from .configspace import perm_sign
    perms = np.array(list(itertools.permutations(range(m))), dtype=np.intp)
    signs = np.array([perm_sign(p) for p in perms], dtype=float)
    return perms, signs


def _c(k: int, n: int) -> float:
    return math.comb(n, 2 * k + 1) / math.factorial(n)


def _alt_sum(logabs, dlogs, slot_kinds, coeff):
    """``coeff * Alt_m { log|f_1| ^_{slots} kind(f_s) }`` as a complex number.

    ``slot_kinds[s]`` for slots 2..m is one of 'abs', 'iarg', 'hol', 'ahol'.
    """
    m = len(logabs)
    perms, signs = _perm_table(m)
    L = logabs[perms[:, 0]]
    rows = dlogs[perms[:, 1:]]                     # (P, m-1, k)
    mats = np.empty_like(rows)
    for s, kind in enumerate(slot_kinds):
        r = rows[:, s, :]
        if kind == "abs":
            mats[:, s, :] = r.real
        elif kind == "iarg":
            mats[:, s, :] = 1j * r.imag
        elif kind == "hol":
            mats[:, s, :] = r
        elif kind == "ahol":
            mats[:, s, :] = np.conj(r)
        else:
            raise ValueError(kind)
    if m - 1 == 0:
        dets = np.ones(len(perms), dtype=complex)
    else:
        dets = np.linalg.det(mats)
    terms = signs * L * dets
    return coeff * complex(math.fsum(terms.real), math.fsum(terms.imag))


def r_definition(logabs, dlogs) -> complex:
    """-Alt_m { sum_k c_{k,m} log|f_1| ^_{2..2k+1} dlog|f_j| ^_{2k+2..m} d i arg f_j }."""
    m = len(logabs)
    total = 0j
    for k in range((m - 1) // 2 + 1):
        if 2 * k + 1 > m:
            break
        kinds = ["abs"] * (2 * k) + ["iarg"] * (m - 1 - 2 * k)
        total += _alt_sum(logabs, dlogs, kinds, -_c(k, m))
    return total


def r_holo(logabs, dlogs) -> complex:
    """Alt_m { sum_{k=1}^m (-1)^(m-k-1)/m! log|f_1| ^_{2..k} dlog f ^_{k+1..m} dlog f-bar }."""
    m = len(logabs)
    total = 0j
    for k in range(1, m + 1):
        kinds = ["hol"] * (k - 1) + ["ahol"] * (m - k)
        total += _alt_sum(logabs, dlogs, kinds, (-1) ** (m - k - 1) / math.factorial(m))
    return total


def r_reduced(logabs, dlogs) -> complex:
    """Half of the holomorphic expansion with a real or imaginary projection."""
    m = len(logabs)
    fact = math.factorial(m)
    if m % 2 == 0:
        n = m // 2
        total = 0j
        for k in range(n + 1, 2 * n + 1):
            kinds = ["hol"] * (k - 1) + ["ahol"] * (m - k)
            total += _alt_sum(logabs, dlogs, kinds, 2 * (-1) ** (k - 1) / fact)
        return 1j * total.imag
    n = (m + 1) // 2
    kinds = ["hol"] * (n - 1) + ["ahol"] * (m - n)
    total = _alt_sum(logabs, dlogs, kinds, (-1) ** n / fact)
    for k in range(n + 1, 2 * n):
        kinds = ["hol"] * (k - 1) + ["ahol"] * (m - k)
        total += _alt_sum(logabs, dlogs, kinds, 2 * (-1) ** k / fact)
    return complex(total.real, 0.0)


_R_IMPL = {"definition": r_definition, "holo": r_holo, "reduced": r_reduced}


def r_value(logabs, dlogs, presentation: str = "definition") -> FormValue:
    m = len(logabs)
    if not 2 <= m <= 5:
        raise SizeError(f"r_m supported for 2 <= m <= 5, got {m}")
    try:
        impl = _R_IMPL[presentation]
    except KeyError:
        raise ValueError(f"unknown presentation {presentation!r}") from None
    return FormValue.from_complex(impl(np.asarray(logabs, float), np.asarray(dlogs, complex)), m)


def eval_r(m: int, fs: FunctionSystem, p: ChartPoint, ws, presentation: str = "definition") -> FormValue:
    """Value of the (m-1)-form r_m(f_1..f_m) at ``p`` on ``m - 1`` tangent vectors."""
    if len(fs) != m:
        raise ValueError(f"function system has {len(fs)} functions, expected {m}")
    if len(ws) != m - 1:
        raise ValueError(f"r_{m} needs {m - 1} tangent vectors, got {len(ws)}")
    logabs, dlogs = function_data(fs, p, ws)
    return r_value(logabs, dlogs, presentation)


def eval_r_linear(ls, t, dts, presentation: str = "definition") -> FormValue:
    """r_m(l_1(t), .., l_m(t)) for linear functions on ``V_n`` at ``t``."""
    logabs, dlogs = linear_data(ls, t, dts)
    return r_value(logabs, dlogs, presentation)


def dlog_wedge(dlogs) -> complex:
    """(dlog f_1 ^ ... ^ dlog f_m)(w_1..w_m)."""
    return complex(np.linalg.det(np.asarray(dlogs, dtype=complex)))


# ----------------------------------------------------------------------------
# one-forms of single linear forms

def _dlog_linear(l, p: ChartPoint, w) -> complex:
    V = p.homogeneous()
    lv = complex(np.dot(np.asarray(l, dtype=complex), V))
    if abs(lv) < SINGULAR_ABS:
        raise SingularityError("dlog evaluated on the zero locus")
    return complex(np.dot(np.asarray(l, dtype=complex), p.lift_direction(w))) / lv


def dlog_abs(l, p: ChartPoint, w) -> float:
    return _dlog_linear(l, p, w).real


def darg(l, p: ChartPoint, w) -> float:
    return _dlog_linear(l, p, w).imag


# ----------------------------------------------------------------------------
# exterior derivative check

def _fd_derivative(fn, h: float) -> float:
    d1 = (fn(h) - fn(-h)) / (2 * h)
    d2 = (fn(h / 2) - fn(-h / 2)) / h
    return (4 * d2 - d1) / 3


def singular_distance(fs: FunctionSystem, p: ChartPoint) -> float:
    """Chart distance from ``p`` to the nearest zero locus ``l_i = 0``."""
    V = p.homogeneous()
    out = math.inf
    for l in fs.forms:
        grad = np.delete(np.asarray(l, dtype=complex), p.chart)
        g = float(np.linalg.norm(grad))
        if g > 0:
            out = min(out, abs(np.dot(l, V)) / g)
    return out


def d_r_check(m: int, fs: FunctionSystem, p: ChartPoint, ws, h: float = 1e-3,
              presentation: str = "definition") -> tuple[FormValue, FormValue]:
    """(finite-difference d r_m, analytic -pi_m(dlog f_1 ^ .. ^ dlog f_m)) on ``m`` vectors.

    The steps ``h, h/2`` shrink with the distance to the nearest zero locus
    once that distance drops below 1.
    """
    if len(ws) != m:
        raise ValueError(f"d r_{m} needs {m} tangent vectors")
    ws = [np.asarray(w, dtype=float) for w in ws]
    h = h * min(1.0, singular_distance(fs, p))
    total = 0.0
    for i in range(m):
        rest = ws[:i] + ws[i + 1:]

        def fn(s, wi=ws[i], rest=rest):
            return eval_r(m, fs, p.shifted(wi, s), rest, presentation).value

        total += (-1) ** i * _fd_derivative(fn, h)
    _, dlogs = function_data(fs, p, ws)
    exact = FormValue.from_complex(-dlog_wedge(dlogs), m)
    return FormValue(total, m), exact


# ----------------------------------------------------------------------------
# Leray form

def leray(ls, p, ws):
    """alpha_{n-1}(l_1(t), .., l_n(t)) at ``t = p`` on ``n - 1`` directions ``ws``.

    ``ls``, ``p`` and ``ws`` live in ``V_n`` (complex or exact entries).
    """
    n = len(ls)
    if len(p) != n or len(ws) != n - 1:
        raise ValueError("leray needs n forms on V_n and n-1 directions")

    def ev(l, v):
        return sum((a * b for a, b in zip(l, v)), 0 * l[0])

    total = 0 * ls[0][0]
    for i in range(n):
        others = [ls[j] for j in range(n) if j != i]
        minor = det([[ev(l, w) for w in ws] for l in others]) if n > 1 else 1
        total = total + (-1) ** i * ev(ls[i], p) * minor
    return total


def leray_euler_side(ls, p, ws):
    """Delta(l_1..l_n) * (i_E omega)(ws) = det[l] * det[p, w_1, .., w_{n-1}]."""
    return det([list(l) for l in ls]) * det_columns([list(p)] + [list(w) for w in ws])


# ----------------------------------------------------------------------------
# weight-3 one-forms on configurations of 5 vectors in dimension 2

class _PairData:
    """Delta(i, j), its log-modulus and dlog along a configuration direction."""

    def __init__(self, config: Configuration, w):
        if config.dim != 2 or len(config.vectors) != 5:
            raise ValueError("expected 5 vectors in dimension 2")
        ls = [tuple(complex(x) for x in v) for v in config.vectors]
        ws = [tuple(complex(x) for x in v) for v in w] if w is not None else [(0j, 0j)] * 5
        if len(ws) != 5:
            raise ValueError("direction must have one vector per configuration vector")
        self.d = {}
        self.dd = {}
        for i in range(5):
            for j in range(5):
                if i == j:
                    continue
                a, b = ls[i], ls[j]
                val = a[0] * b[1] - a[1] * b[0]
                if val == 0 or abs(val) < SINGULAR_ABS:
                    raise DegenerateError(f"Delta({i},{j}) = 0", (i, j))
                wa, wb = ws[i], ws[j]
                dval = (wa[0] * b[1] - wa[1] * b[0]) + (a[0] * wb[1] - a[1] * wb[0])
                self.d[i, j] = val
                self.dd[i, j] = dval / val
        self.log = {k: math.log(abs(v)) for k, v in self.d.items()}

    def cross_ratio(self, a, b, c, e):
        """r(l_a, l_b, l_c, l_e) and its dlog."""
        r = self.d[a, c] * self.d[b, e] / (self.d[a, e] * self.d[b, c])
        dr = self.dd[a, c] + self.dd[b, e] - self.dd[a, e] - self.dd[b, c]
        return r, dr


def _check_cross_ratio(r: complex):
    if abs(r) < 1e-300 or abs(r - 1) < 1e-15:
        raise CrossRatioDegenerateError(f"cross-ratio {r} is degenerate")


def _alt5(term):
    from .configspace import signed_permutations
    vals = []
    for sign, s in signed_permutations(5):
        v = term(s)
        vals.append(v if sign > 0 else -v)
    return math.fsum(vals)


def oneform_grass_13(config: Configuration, w) -> float:
    """Grassmannian 1-form of weight 3 evaluated on a configuration direction.

    ``Alt_5{ (1/12) iD(r(l0,l1,l2,l4)) d i arg D(1,4)
              - (1/3) log|D(0,1)| log|D(1,4)| dlog|D(2,4)| }``;
    the two factors ``i`` combine to ``-D(r) d arg``.
    """
    pd = _PairData(config, w)
    memo = {}

    def term(s):
        key = (s[0], s[1], s[2], s[4])
        if key not in memo:
            r, _ = pd.cross_ratio(*key)
            _check_cross_ratio(r)
            memo[key] = bloch_wigner(r)
        t1 = -memo[key] * pd.dd[s[1], s[4]].imag / 12.0
        t2 = -pd.log[s[0], s[1]] * pd.log[s[1], s[4]] * pd.dd[s[2], s[4]].real / 3.0
        return t1 + t2

    return _alt5(term)


def alpha_form(r: complex, dlog_r: complex) -> float:
    """alpha(f) = log|f| dlog|1-f| - log|1-f| dlog|f| applied along ``dlog f = dlog_r``."""
    one_minus = 1 - r
    dlog_1mr = -r * dlog_r / one_minus
    return math.log(abs(r)) * dlog_1mr.real - math.log(abs(one_minus)) * dlog_r.real


def oneform_lie_13(config: Configuration, w) -> float:
    """r_3(2) composed with phi_4(2) (Lie-motivic 1-form of weight 3)."""
    pd = _PairData(config, w)
    memo = {}

    def term(s):
        key = (s[0], s[1], s[2], s[4])
        if key not in memo:
            r, dr = pd.cross_ratio(*key)
            _check_cross_ratio(r)
            memo[key] = (bloch_wigner(r), alpha_form(r, dr))
        D, alpha = memo[key]
        return -D * pd.dd[s[1], s[4]].imag - pd.log[s[1], s[4]] * alpha / 3.0

    return _alt5(term) / 12.0


def d_triple_log_product(config: Configuration, w) -> float:
    """Directional derivative of Alt_5{log|D(2,4)| log|D(1,4)| log|D(0,2)|}."""
    pd = _PairData(config, w)

    def term(s):
        a, b, c = (s[2], s[4]), (s[1], s[4]), (s[0], s[2])
        la, lb, lc = pd.log[a], pd.log[b], pd.log[c]
        da, db, dc = pd.dd[a].real, pd.dd[b].real, pd.dd[c].real
        return da * lb * lc + la * db * lc + la * lb * dc

    return _alt5(term)


def triple_log_product(config: Configuration) -> float:
    pd = _PairData(config, None)
    return _alt5(lambda s: pd.log[s[2], s[4]] * pd.log[s[1], s[4]] * pd.log[s[0], s[2]])


# ----------------------------------------------------------------------------
# regulator maps on generators

def regulator_r2_1(x) -> float:
    """{x}_2 -> D(x) (the regulator value is i D(x))."""
    return bloch_wigner(x)


def regulator_r3_1(x) -> float:
    """{x}_3 -> single-valued trilogarithm."""
    return sv_trilog(x)
