"""Grassmannian di- and trilogarithms and the harnesses that check them.

Configurations are read as covectors ``l_0, .., l_m`` in ``V_n^*``; the
integrals run over ``CP^{n-1}`` with ``f_j = l_j / l_0``.

Closed forms:

* weight 2: ``D(r(l_0, l_1, l_2, l_3))`` (Bloch-Wigner of the cross-ratio);
* weight 3: ``L^G_3 - (1/9) Alt_6 log|D(012)| log|D(123)| log|D(234)|`` with
  ``L^G_3 = (1/90) Alt_6 L_3(triple ratio)``.

Numeric forms:

* weight 2: ``-(1/pi) int_{CP^1} log|f_1| dlog|f_2| ^ dlog|f_3|``;
* weight 3: ``(2 / (3 pi^2)) int_{CP^2} log|f_1| dlog|f_2| ^ .. ^ dlog|f_5|``.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from . import formeval, quad
from .configspace import (TRIPLE_DEN, TRIPLE_NUM, Configuration, GaussianRational, cross_ratio,
                          det_columns, drop, perm_sign, project, signed_permutations)
from .errors import CrossRatioDegenerateError, DegenerateError, DomainError
from .formeval import FunctionSystem
from .polylog import bloch_wigner, sv_trilog

QUANT = 1e-12
TRILOG_INTEGRAL_FACTOR = 2.0 / (3.0 * math.pi**2)
DEFAULT_EPSILONS = (1e-5, 5e-6, 2.5e-6)


# ----------------------------------------------------------------------------
# minor tables

class _Minors:
    """All maximal minors of a configuration, indexed by ordered tuples."""

    def __init__(self, config: Configuration):
        n = config.dim
        self.exact = config.exact
        self.table = {}
        vf = config.volume_form
        for idx in itertools.combinations(range(len(config.vectors)), n):
            d = vf * det_columns([config.vectors[i] for i in idx])
            if (not d) if self.exact else d == 0:
                raise DegenerateError(f"Delta{idx} = 0", idx)
            self.table[idx] = d
        self._log = {k: math.log(abs(complex(v))) for k, v in self.table.items()}

    def __call__(self, idx):
        key = tuple(sorted(idx))
        if len(set(idx)) != len(idx):
            raise DegenerateError(f"repeated index in Delta{tuple(idx)}", idx)
        sign = perm_sign([key.index(i) for i in idx])
        v = self.table[key]
        return v if sign > 0 else -v

    def log_abs(self, idx) -> float:
        return self._log[tuple(sorted(idx))]


def _require(config: Configuration, count: int, dim: int):
    if config.dim != dim or len(config.vectors) != count:
        raise ValueError(f"expected {count} vectors in dimension {dim}, got "
                         f"{len(config.vectors)} in dimension {config.dim}")


def _ratio(minors: _Minors, s):
    num = 1
    den = 1
    for a, b, c in TRIPLE_NUM:
        num = num * minors((s[a], s[b], s[c]))
    for a, b, c in TRIPLE_DEN:
        den = den * minors((s[a], s[b], s[c]))
    return num / den


def _ratio_key(r, exact: bool):
    if exact:
        return r
    z = complex(r)
    return (round(z.real / QUANT), round(z.imag / QUANT))


def _sv3_checked(r) -> float:
    z = complex(r)
    if (r == 1) if isinstance(r, GaussianRational) else abs(z - 1.0) < 1e-14:
        raise CrossRatioDegenerateError("triple ratio equals 1")
    return sv_trilog(z)


def lie_trilog(config: Configuration, memoize: bool = True) -> float:
    """``(1/90) Alt_6 L_3(triple ratio)`` for six vectors in dimension 3."""
    _require(config, 6, 3)
    minors = _Minors(config)
    memo = {}
    terms = []
    for sign, s in signed_permutations(6):
        r = _ratio(minors, s)
        if memoize:
            key = _ratio_key(r, minors.exact)
            val = memo.get(key)
            if val is None:
                val = memo[key] = _sv3_checked(r)
        else:
            val = _sv3_checked(r)
        terms.append(sign * val)
    return math.fsum(terms) / 90.0


def difference_term(config: Configuration) -> float:
    """``(1/9) Alt_6 log|D(012)| log|D(123)| log|D(234)|``."""
    _require(config, 6, 3)
    minors = _Minors(config)
    terms = []
    for sign, s in signed_permutations(6):
        terms.append(sign * minors.log_abs(s[0:3]) * minors.log_abs(s[1:4]) * minors.log_abs(s[2:5]))
    return math.fsum(terms) / 9.0


@dataclass
class TrilogReport:
    closed: float
    lie: float
    diff_term: float
    numeric: quad.QuadratureEstimate | None = None
    residuals: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        out = {"closed": self.closed, "lie": self.lie, "diff_term": self.diff_term,
               "residuals": dict(self.residuals)}
        if self.numeric is not None:
            out["numeric"] = self.numeric.as_dict()
            out["numeric_scaled"] = TRILOG_INTEGRAL_FACTOR * self.numeric.value
            out["numeric_sigma_scaled"] = TRILOG_INTEGRAL_FACTOR * self.numeric.sigma
        return out


def grass_trilog_closed(config: Configuration) -> TrilogReport:
    lie = lie_trilog(config)
    diff = difference_term(config)
    return TrilogReport(lie - diff, lie, diff)


def grass_trilog_numeric(config: Configuration, budget: int = 5_000_000, seed: int = 42,
                         backend: str | None = None) -> TrilogReport:
    """Closed form plus the CP^2 integral, with the residual recorded."""
    rep = grass_trilog_closed(config)
    fs = FunctionSystem.from_config(config.to_float())
    est = quad.integrate_cp2(quad.Integrand(fs, "trilog"), budget=budget, seed=seed, backend=backend)
    rep.numeric = est
    scaled = TRILOG_INTEGRAL_FACTOR * est.value
    rep.residuals["theorem_main"] = scaled - rep.closed
    rep.residuals["theorem_main_sigma"] = TRILOG_INTEGRAL_FACTOR * est.sigma
    return rep


# ----------------------------------------------------------------------------
# weight 2

def grass_dilog(config: Configuration, mode: str = "closed", budget: int = 100_000,
                tol: float = 1e-7):
    """Grassmannian dilogarithm of four covectors in dimension 2.

    ``mode="closed"`` returns ``D(r)``; ``mode="numeric"`` returns a
    :class:`~grasslog.quad.QuadratureEstimate` already scaled by ``-1/pi``.
    """
    _require(config, 4, 2)
    if mode == "closed":
        r = cross_ratio(*config.vectors)
        return bloch_wigner(complex(r))
    if mode != "numeric":
        raise ValueError(f"mode must be 'closed' or 'numeric', got {mode!r}")
    for i, j in itertools.combinations(range(4), 2):
        if not det_columns([config.vectors[i], config.vectors[j]]):
            raise DegenerateError(f"Delta({i},{j}) = 0", (i, j))
    fs = FunctionSystem.from_config(config.to_float())
    est = quad.integrate_cp1(quad.Integrand(fs, "dilog"), budget=budget, tol=tol)
    return quad.QuadratureEstimate(-est.value / math.pi, est.sigma / math.pi, est.samples,
                                   est.method, est.orientation, est.budget_exceeded, est.details)


# ----------------------------------------------------------------------------
# special stratum

def special_config(z) -> Configuration:
    """Columns (1,0,0), (0,1,0), (0,0,1), (1,1,0), (0,1,1), (1,0,z)."""
    if z == 0:
        raise DomainError("special_config needs z != 0")
    if isinstance(z, float) and not math.isfinite(z):
        raise DomainError("special_config needs finite z")
    cols = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 0), (0, 1, 1), (1, 0, z)]
    return Configuration.from_columns(cols)


def _exact_direction(seed: int):
    rng = random.Random(seed)
    return [[GaussianRational(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(3)] for _ in range(6)]


def _perturbed(config: Configuration, direction, eps) -> Configuration:
    if config.exact:
        e = GaussianRational.coerce(eps)
        vecs = tuple(tuple(x + e * d for x, d in zip(v, dv)) for v, dv in zip(config.vectors, direction))
    else:
        vecs = tuple(tuple(complex(x) + eps * complex(d) for x, d in zip(v, dv))
                     for v, dv in zip(config.vectors, direction))
    return Configuration(vecs, config.dim, config.volume_form)


def richardson(epsilons, values) -> float:
    """Extrapolate ``v(eps) = v0 + a eps + b eps^2 + ..`` to ``eps = 0``."""
    k = len(epsilons)
    A = np.vander(np.asarray(epsilons, dtype=float), k, increasing=True)
    return float(np.linalg.solve(A, np.asarray(values, dtype=float))[0])


def special_stratum_value(z, epsilons=DEFAULT_EPSILONS, seed: int = 0, retries: int = 5,
                          details: bool = False):
    """``L^G_3`` at ``g_3(z)`` as the limit of nearby generic configurations."""
    base = special_config(_exactify(z))
    eps = [float(e) for e in epsilons]
    if len(eps) < 2 or any(b >= a for a, b in zip(eps, eps[1:])):
        raise ValueError("epsilons must be decreasing with at least two entries")
    last = None
    for attempt in range(retries):
        direction = _exact_direction(seed + attempt)
        try:
            vals = [grass_trilog_closed(_perturbed(base, direction, _exactify(e))).closed for e in eps]
        except DegenerateError as exc:
            last = exc
            continue
        value = richardson(eps, vals)
        if details:
            return value, {"epsilons": eps, "values": vals, "direction_seed": seed + attempt}
        return value
    raise DegenerateError(f"no generic perturbation found after {retries} directions: {last}")


def _exactify(x):
    """Floats with a short binary expansion stay exact; complex -> Gaussian rational."""
    from fractions import Fraction
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    z = complex(x)
    return GaussianRational(Fraction(z.real).limit_denominator(10**12),
                            Fraction(z.imag).limit_denominator(10**12))


# ----------------------------------------------------------------------------
# functional equations

@dataclass
class ResidualReport:
    residual: float
    scale: float
    terms: list

    @property
    def relative(self) -> float:
        return abs(self.residual) / self.scale if self.scale > 0 else abs(self.residual)

    def as_dict(self) -> dict:
        return {"residual": self.residual, "scale": self.scale, "relative": self.relative}


_FNS = {
    "closed": lambda c: grass_trilog_closed(c).closed,
    "lie": lie_trilog,
    "diff": difference_term,
}


def _alternating_residual(configs, fn: str) -> ResidualReport:
    f = _FNS[fn]
    terms = [(-1) ** i * f(c) for i, c in enumerate(configs)]
    return ResidualReport(math.fsum(terms), math.fsum(abs(t) for t in terms), terms)


def check_drop_equation(points: Configuration, fn: str = "closed") -> ResidualReport:
    """``sum_i (-1)^i fn(l_0, .., ^l_i, .., l_6)`` for seven vectors in dimension 3."""
    _require(points, 7, 3)
    return _alternating_residual([drop(points, i) for i in range(7)], fn)


def check_projection_equation(points: Configuration, fn: str = "closed") -> ResidualReport:
    """``sum_i (-1)^i fn(l_0, .., l_6 mod l_i)`` for seven vectors in dimension 4."""
    _require(points, 7, 4)
    return _alternating_residual([project(points, i) for i in range(7)], fn)


# ----------------------------------------------------------------------------
# form-level identities

def check_oneform_difference(config: Configuration, w) -> ResidualReport:
    """Grassmannian minus Lie-motivic 1-form of weight 3 against ``(1/9) d Alt_5(...)``."""
    _require(config, 5, 2)
    g = formeval.oneform_grass_13(config, w)
    lie = formeval.oneform_lie_13(config, w)
    d = formeval.d_triple_log_product(config, w) / 9.0
    res = g - lie - d
    return ResidualReport(res, max(abs(g), abs(lie), abs(d), 1.0), [g, -lie, -d])


def _linear_sides(ls, t, dts, m: int, sign: int, coeff: float):
    """(coeff * sign-adjusted Alt over labels of r_m(l_s0..l_s(m-1)), direct r_m(f_1..f_m))."""
    k = len(ls)
    alt = []
    for sgn, s in signed_permutations(k):
        alt.append(sgn * formeval.eval_r_linear([ls[s[i]] for i in range(m)], t, dts).value)
    lhs = sign * coeff * math.fsum(alt)
    logabs, dl = formeval.linear_data(ls, t, dts)
    direct = formeval.r_value(logabs[1:] - logabs[0], dl[1:] - dl[0][None, :]).value
    return lhs, direct


def check_weight2_oneform(config: Configuration, p, w) -> ResidualReport:
    """``(1/2) Alt_3 r_2(l_i, l_j) = r_2(f_1, f_2)`` at ``p in V_2`` along complex ``w``."""
    _require(config, 3, 2)
    ls = [np.array([complex(x) for x in v]) for v in config.vectors]
    _check_pairs(ls)
    lhs, rhs = _linear_sides(ls, p, [w], 2, 1, 0.5)
    return ResidualReport(lhs - rhs, max(abs(lhs), abs(rhs), 1.0), [lhs, -rhs])


def check_weight3_twoform(config: Configuration, p, ws) -> ResidualReport:
    """``-(1/6) Alt_4 r_3(l_0, l_1, l_2) = r_3(f_1, f_2, f_3)`` on two directions."""
    _require(config, 4, 2)
    if len(ws) != 2:
        raise ValueError("check_weight3_twoform needs two tangent directions")
    ls = [np.array([complex(x) for x in v]) for v in config.vectors]
    lhs, rhs = _linear_sides(ls, p, list(ws), 3, -1, 1.0 / 6.0)
    return ResidualReport(lhs - rhs, max(abs(lhs), abs(rhs), 1.0), [lhs, -rhs])


def _check_pairs(ls):
    for i, j in itertools.combinations(range(len(ls)), 2):
        if abs(ls[i][0] * ls[j][1] - ls[i][1] * ls[j][0]) == 0:
            raise DegenerateError(f"covectors {i} and {j} are proportional", (i, j))


def check_mainL1(z, epsilons=DEFAULT_EPSILONS, seed: int = 0) -> dict:
    """Exploratory: special-stratum values of the three trilog functions (no contract)."""
    base = special_config(_exactify(z))
    direction = _exact_direction(seed)
    out = {}
    for name in ("closed", "lie", "diff"):
        vals = [_FNS[name](_perturbed(base, direction, _exactify(e))) for e in epsilons]
        out[name] = {"values": vals, "extrapolated": richardson(list(epsilons), vals)}
    out["sv_trilog"] = sv_trilog(complex(z))
    return out
