"""Classical polylogarithms Li_1..Li_3 and their single-valued versions.

Evaluation scheme for the principal branch of Li_2 and Li_3:

* ``|z| <= 0.5``   direct power series ``sum z^k / k^n``;
* ``0.5 < |z| <= 1`` expansion in ``mu = log z`` around ``z = 1``::

      Li_n(e^mu) = sum_{k != n-1} zeta(n-k) mu^k / k!
                   + mu^(n-1) / (n-1)! * (H_{n-1} - log(-mu))

  which converges for ``|mu| < 2 pi`` (here ``|mu| <= pi + log 2``);
* ``|z| > 1`` inversion::

      Li_2(z) = -Li_2(1/z) - pi^2/6 - log(-z)^2 / 2
      Li_3(z) =  Li_3(1/z) - log(-z)^3 / 6 - pi^2/6 log(-z)

Points on the cut ``(1, inf)`` are reached as one-sided limits through the
sign of a zero imaginary part (``complex(x, 0.0)`` is the limit from above,
``complex(x, -0.0)`` from below).  The single-valued combinations below do not
depend on the side.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

from .errors import CutError, DomainError

ZETA2 = math.pi**2 / 6
ZETA3 = 1.2020569031595942853997381615114499907649862923405
CATALAN = 0.91596559417721901505460351493238411077414937428167

_SERIES_TERMS = 80
_LOG_TERMS = 90


@lru_cache(maxsize=None)
def _bernoulli(n: int) -> tuple[Fraction, ...]:
    """Bernoulli numbers B_0..B_n with B_1 = -1/2."""
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * b[k]
            binom = binom * (m + 1 - k) // (k + 1)
        b[m] = -acc / (m + 1)
    return tuple(b)


@lru_cache(maxsize=None)
def _zeta_nonpositive() -> tuple[float, ...]:
    """zeta(-m) for m = 0.._LOG_TERMS."""
    b = _bernoulli(_LOG_TERMS + 2)
    out = [-0.5]
    for m in range(1, _LOG_TERMS + 1):
        out.append(float(-b[m + 1] / (m + 1)))
    return tuple(out)


def _series(z: complex, n: int) -> complex:
    total = 0j
    zk = z
    for k in range(1, _SERIES_TERMS + 1):
        term = zk / k**n
        total += term
        if abs(term) < 1e-18 * (abs(total) + 1e-300):
            break
        zk *= z
    return total


def _log_expansion(z: complex, n: int) -> complex:
    mu = cmath.log(z)
    zneg = _zeta_nonpositive()
    if n == 2:
        total = ZETA2 + mu * (1.0 - cmath.log(-mu))
        first = 2
    else:
        total = ZETA3 + ZETA2 * mu + (1.5 - cmath.log(-mu)) * mu * mu / 2.0
        first = 3
    muk = mu ** first / math.factorial(first)
    for k in range(first, _LOG_TERMS):
        c = zneg[k - n]
        if c != 0.0:
            term = c * muk
            total += term
            if abs(term) < 1e-18 * abs(total):
                break
        muk *= mu / (k + 1)
    return total


def _li2(z: complex) -> complex:
    if z == 0:
        return 0j
    if z == 1:
        return complex(ZETA2, 0.0)
    a = abs(z)
    if a <= 0.5:
        return _series(z, 2)
    if a <= 1.0:
        return _log_expansion(z, 2)
    lz = cmath.log(-z)
    return -_li2(1.0 / z) - ZETA2 - 0.5 * lz * lz


def _li3(z: complex) -> complex:
    if z == 0:
        return 0j
    if z == 1:
        return complex(ZETA3, 0.0)
    a = abs(z)
    if a <= 0.5:
        return _series(z, 3)
    if a <= 1.0:
        return _log_expansion(z, 3)
    lz = cmath.log(-z)
    return _li3(1.0 / z) - lz**3 / 6.0 - ZETA2 * lz


def _as_complex(z) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def li(n: int, z, side: str | None = None) -> complex:
    """Principal branch of the classical polylogarithm Li_n, n in {1, 2, 3}.

    On the cut ``z in (1, inf)`` a one-sided limit must be requested with
    ``side='above'`` or ``side='below'``.
    """
    if n not in (1, 2, 3):
        raise DomainError(f"li: weight {n} not supported (1, 2 or 3)")
    z = _as_complex(z)
    if z.imag == 0.0 and z.real > 1.0:
        if side is None:
            raise CutError(f"li({n}, {z.real}) lies on the branch cut (1, inf)")
        if side not in ("above", "below"):
            raise DomainError(f"side must be 'above' or 'below', got {side!r}")
        z = complex(z.real, 0.0 if side == "above" else -0.0)
    if n == 1:
        return -cmath.log(1.0 - z)
    return _li2(z) if n == 2 else _li3(z)


def _is_infinite(z) -> bool:
    if isinstance(z, complex):
        return math.isinf(z.real) or math.isinf(z.imag)
    try:
        return math.isinf(z)
    except TypeError:
        return False


def bloch_wigner(z) -> float:
    """Bloch-Wigner function D(z) = Im Li_2(z) + arg(1 - z) log|z|.

    Real normalization; the purely imaginary variant used in the
    regulator tables is ``1j * bloch_wigner(z)``.  Extended by 0 at
    0, 1 and infinity.
    """
    if _is_infinite(z):
        return 0.0
    z = _as_complex(z)
    if z.imag == 0.0:
        return 0.0
    if abs(z) > 1.0:
        return -bloch_wigner(1.0 / z)
    return _li2(z).imag + cmath.phase(1.0 - z) * math.log(abs(z))


def sv_trilog(z) -> float:
    """Single-valued trilogarithm.

    ``Re(Li_3(z) - log|z| Li_2(z)) - log(|z|)^2 log|1 - z| / 3``, extended
    continuously by 0 at 0 and infinity and by zeta(3) at 1.
    """
    if _is_infinite(z):
        return 0.0
    z = _as_complex(z)
    if z == 0:
        return 0.0
    if z == 1:
        return ZETA3
    if abs(z) > 1.0:
        z = 1.0 / z
    lz = math.log(abs(z))
    val = (_li3(z) - lz * _li2(z)).real
    return val - lz * lz * math.log(abs(1.0 - z)) / 3.0


def dilog_differential(z: complex, dz: complex) -> float:
    """Directional derivative of the Bloch-Wigner function.

    ``dD = log|z| d arg(1-z) - log|1-z| d arg z`` applied to the
    holomorphic increment ``dz``.
    """
    z = complex(z)
    if z == 0 or z == 1:
        raise DomainError("dilog_differential undefined at 0 and 1")
    darg_z = (dz / z).imag
    darg_1mz = (-dz / (1.0 - z)).imag
    return math.log(abs(z)) * darg_1mz - math.log(abs(1.0 - z)) * darg_z
