"""Configurations of vectors: determinants, cross-ratios, Grassmannian maps.

Two scalar backends are supported.  ``exact`` uses :class:`GaussianRational`
(``a/b + (c/d) i`` with unbounded integers) and is authoritative in tests;
``float`` uses Python ``complex``.  A :class:`Configuration` is an ordered
tuple of column vectors together with a volume-form multiplier ``c`` so that
``delta`` returns ``c * det``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import DegenerateError, SizeError

EPS_GENERIC = 1e-10
MAX_ALT = 8


class GaussianRational:
    """Exact element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, complex):
            return cls(Fraction(x.real), Fraction(x.imag))
        if isinstance(x, float):
            return cls(Fraction(x))
        return cls(x)

    def __add__(self, other):
        o = _gr(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _gr(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _gr(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _gr(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _gr(other)
        if o is NotImplemented:
            return o
        n2 = o.re * o.re + o.im * o.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational((self.re * o.re + self.im * o.im) / n2,
                                (self.im * o.re - self.re * o.im) / n2)

    def __rtruediv__(self, other):
        o = _gr(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** -k)
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.sqrt(float(self.norm2()))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = _gr(other)
        if o is NotImplemented:
            return False
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GR({self.re})"
        return f"GR({self.re}, {self.im})"


def _gr(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    return NotImplemented


def is_exact_scalar(x) -> bool:
    return isinstance(x, (GaussianRational, int, Fraction))


def to_complex(x) -> complex:
    return complex(x)


# ----------------------------------------------------------------------------
# determinants

def det(rows: Sequence[Sequence]):
    """Determinant by Gaussian elimination; exact for exact entries."""
    n = len(rows)
    if n == 0:
        return 1
    exact = all(is_exact_scalar(x) for r in rows for x in r)
    if not exact:
        a = [[complex(x) for x in r] for r in rows]
        return _det_float(a)
    a = [[GaussianRational.coerce(x) for x in r] for r in rows]
    sign = 1
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return GaussianRational(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        inv = GaussianRational(1) / a[col][col]
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [a[r][k] - f * a[col][k] if k >= col else a[r][k]
                        for k in range(n)]
    out = GaussianRational(sign)
    for i in range(n):
        out = out * a[i][i]
    return out


def _det_float(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        return (a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
                - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
                + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]))
    import numpy as np
    return complex(np.linalg.det(np.array(a, dtype=complex)))


def det_columns(columns: Sequence[Sequence]):
    """Determinant of the square matrix whose columns are ``columns``."""
    n = len(columns)
    return det([[columns[j][i] for j in range(n)] for i in range(n)])


# ----------------------------------------------------------------------------
# configurations

@dataclass(frozen=True)
class Configuration:
    """Ordered vectors of common dimension ``dim``.

    ``volume_form`` multiplies every determinant (the choice of volume form).
    """

    vectors: tuple
    dim: int
    volume_form: object = 1

    def __post_init__(self):
        vecs = tuple(tuple(v) for v in self.vectors)
        object.__setattr__(self, "vectors", vecs)
        for v in vecs:
            if len(v) != self.dim:
                raise ValueError(f"vector {v!r} has length {len(v)}, expected {self.dim}")

    @classmethod
    def from_columns(cls, columns, exact: bool | None = None, volume_form=1):
        columns = [list(c) for c in columns]
        if not columns:
            raise ValueError("empty configuration")
        if exact is None:
            exact = all(is_exact_scalar(x) for c in columns for x in c)
        conv = GaussianRational.coerce if exact else complex
        vecs = tuple(tuple(conv(x) for x in c) for c in columns)
        vf = conv(volume_form)
        return cls(vecs, len(columns[0]), vf)

    @property
    def exact(self) -> bool:
        return all(isinstance(x, GaussianRational) for v in self.vectors for x in v)

    @property
    def backend(self) -> str:
        return "exact" if self.exact else "float"

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def to_float(self) -> "Configuration":
        return Configuration(tuple(tuple(complex(x) for x in v) for v in self.vectors),
                             self.dim, complex(self.volume_form))

    def permuted(self, perm: Sequence[int]) -> "Configuration":
        return Configuration(tuple(self.vectors[p] for p in perm), self.dim, self.volume_form)

    def with_volume_form(self, c) -> "Configuration":
        return Configuration(self.vectors, self.dim, c)

    def transformed(self, g) -> "Configuration":
        """Apply the linear map with matrix ``g`` (rows) to every vector."""
        vecs = tuple(tuple(sum((g[i][k] * v[k] for k in range(self.dim)), 0 * v[0])
                           for i in range(self.dim)) for v in self.vectors)
        return Configuration(vecs, self.dim, self.volume_form)

    def rescaled(self, factors) -> "Configuration":
        vecs = tuple(tuple(f * x for x in v) for f, v in zip(factors, self.vectors))
        return Configuration(vecs, self.dim, self.volume_form)

    def as_array(self):
        import numpy as np
        return np.array([[complex(x) for x in v] for v in self.vectors], dtype=complex)


def delta(config: Configuration, indices: Sequence[int]):
    """Volume-form weighted determinant of the selected columns."""
    if len(indices) != config.dim:
        raise IndexError(f"need {config.dim} indices, got {len(indices)}")
    if len(set(indices)) != len(indices):
        raise IndexError(f"indices {tuple(indices)} are not distinct")
    m = len(config.vectors)
    for i in indices:
        if not 0 <= i < m:
            raise IndexError(f"index {i} out of range for {m} vectors")
    return config.volume_form * det_columns([config.vectors[i] for i in indices])


def _column_norm(v) -> float:
    return math.sqrt(sum(abs(complex(x)) ** 2 for x in v))


def is_generic(config: Configuration) -> bool:
    """Every maximal minor is nonzero (relative tolerance for floats)."""
    n = config.dim
    if any(not any(x for x in v) for v in config.vectors):
        return False
    exact = config.exact
    for idx in itertools.combinations(range(len(config.vectors)), n):
        d = det_columns([config.vectors[i] for i in idx])
        if exact:
            if not d:
                return False
        else:
            scale = math.prod(_column_norm(config.vectors[i]) for i in idx)
            if abs(d) <= EPS_GENERIC * scale:
                return False
    return True


def vanishing_minors(config: Configuration) -> list[tuple[int, ...]]:
    out = []
    for idx in itertools.combinations(range(len(config.vectors)), config.dim):
        d = det_columns([config.vectors[i] for i in idx])
        if config.exact:
            if not d:
                out.append(idx)
        else:
            scale = math.prod(_column_norm(config.vectors[i]) for i in idx)
            if abs(d) <= EPS_GENERIC * scale:
                out.append(idx)
    return out


def _is_zero(x) -> bool:
    if isinstance(x, GaussianRational):
        return not x
    return x == 0


def cross_ratio(v0, v1, v2, v3):
    """Delta(v0,v2) Delta(v1,v3) / (Delta(v0,v3) Delta(v1,v2)) for vectors in dimension 2."""
    def d2(a, b):
        return a[0] * b[1] - a[1] * b[0]
    num = d2(v0, v2) * d2(v1, v3)
    den0, den1 = d2(v0, v3), d2(v1, v2)
    if _is_zero(den0):
        raise DegenerateError("cross_ratio: Delta(v0, v3) = 0", (0, 3))
    if _is_zero(den1):
        raise DegenerateError("cross_ratio: Delta(v1, v2) = 0", (1, 2))
    return num / (den0 * den1)


TRIPLE_NUM = ((0, 1, 3), (1, 2, 4), (2, 0, 5))
TRIPLE_DEN = ((0, 1, 4), (1, 2, 5), (2, 0, 3))


def triple_ratio_arg(l0, l1, l2, l3, l4, l5):
    """The degree-3 ratio
    D(013) D(124) D(205) / (D(014) D(125) D(203)) for six vectors in dimension 3."""
    ls = (l0, l1, l2, l3, l4, l5)
    num = 1
    den = 1
    for a, b, c in TRIPLE_NUM:
        d = det_columns([ls[a], ls[b], ls[c]])
        if _is_zero(d):
            raise DegenerateError(f"triple ratio: Delta{(a, b, c)} = 0", (a, b, c))
        num = num * d
    for a, b, c in TRIPLE_DEN:
        d = det_columns([ls[a], ls[b], ls[c]])
        if _is_zero(d):
            raise DegenerateError(f"triple ratio: Delta{(a, b, c)} = 0", (a, b, c))
        den = den * d
    return num / den


def drop(config: Configuration, i: int) -> Configuration:
    m = len(config.vectors)
    if m < 2:
        raise IndexError("cannot drop from a configuration with fewer than 2 vectors")
    if not 0 <= i < m:
        raise IndexError(f"index {i} out of range for {m} vectors")
    vecs = config.vectors[:i] + config.vectors[i + 1:]
    return Configuration(vecs, config.dim, config.volume_form)


def project(config: Configuration, i: int) -> Configuration:
    """Images of the other vectors in ``V / <v_i>``.

    The coordinate where ``v_i`` is largest is eliminated; the volume form of
    the quotient is set so that
    ``Delta_quot(w_1, ..., w_{n-1}) = Delta(v_i, w_1, ..., w_{n-1})``.
    """
    m = len(config.vectors)
    if not 0 <= i < m:
        raise IndexError(f"index {i} out of range for {m} vectors")
    if config.dim < 2:
        raise ValueError("cannot project a configuration of dimension 1")
    v = config.vectors[i]
    k = max(range(config.dim), key=lambda j: abs(complex(v[j])))
    if _is_zero(v[k]):
        raise DegenerateError(f"project: v_{i} is zero", (i,))
    out = []
    for j, w in enumerate(config.vectors):
        if j == i:
            continue
        f = w[k] / v[k]
        red = [w[a] - f * v[a] for a in range(config.dim) if a != k]
        out.append(tuple(red))
    sign = -1 if k % 2 else 1
    vf = config.volume_form * v[k] * sign
    return Configuration(tuple(out), config.dim - 1, vf)


def _gauss_kernel(rows, exact: bool):
    """Row-reduce a p x N matrix; return (pivots, reduced rows) or raise."""
    a = [list(r) for r in rows]
    p, N = len(a), len(a[0])
    pivots = []
    r = 0
    for col in range(N):
        if r == p:
            break
        if exact:
            piv = next((s for s in range(r, p) if a[s][col]), None)
        else:
            best = max(range(r, p), key=lambda s: abs(a[s][col]))
            piv = best if abs(a[best][col]) > 1e-14 else None
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for s in range(p):
            if s != r and not _is_zero(a[s][col]):
                f = a[s][col]
                a[s] = [a[s][k] - f * a[r][k] for k in range(N)]
        pivots.append(col)
        r += 1
    return pivots, a


def dualize(config: Configuration) -> Configuration:
    """Gale dual: ``p + q`` vectors in dimension ``p`` -> dimension ``q``.

    With ``M`` the ``p x (p+q)`` matrix of columns, the result has columns of a
    ``q x (p+q)`` matrix ``N`` with ``M N^T = 0``.  For generic input the
    first ``p`` columns of ``M`` are pivots and ``N = [-A^T | I]`` where
    ``[I | A]`` is the reduced echelon form of ``M``.
    """
    p = config.dim
    N = len(config.vectors)
    q = N - p
    if q < 1:
        raise ValueError("dualize needs more vectors than the dimension")
    if not is_generic(config):
        raise DegenerateError("dualize: configuration is not generic")
    exact = config.exact
    rows = [[config.vectors[j][i] for j in range(N)] for i in range(p)]
    pivots, red = _gauss_kernel(rows, exact)
    if pivots != list(range(p)):
        raise DegenerateError("dualize: rank deficiency in leading block")
    one = GaussianRational(1) if exact else 1.0 + 0j
    zero = GaussianRational(0) if exact else 0j
    cols = []
    for j in range(N):
        if j < p:
            cols.append(tuple(-red[j][p + s] for s in range(q)))
        else:
            cols.append(tuple(one if s == j - p else zero for s in range(q)))
    return Configuration(tuple(cols), q, one)


# ----------------------------------------------------------------------------
# alternation

def perm_sign(perm: Sequence[int]) -> int:
    perm = list(perm)
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def signed_permutations(n: int):
    """Yield ``(sign, perm)`` in lexicographic order."""
    for perm in itertools.permutations(range(n)):
        yield perm_sign(perm), perm


def alternate(n: int, evaluator: Callable[[tuple], object]):
    """Sum over S_n of ``sgn(sigma) * evaluator(sigma)``.

    Float terms are reduced with ``math.fsum`` (correctly rounded, hence
    independent of summation order); other additive values are summed in
    lexicographic permutation order.
    """
    if n > MAX_ALT:
        raise SizeError(f"alternation over S_{n} exceeds the S_{MAX_ALT} guard")
    terms = []
    for sign, perm in signed_permutations(n):
        val = evaluator(perm)
        terms.append(val if sign > 0 else -val)
    if not terms:
        return 0
    if all(isinstance(t, (float, int)) and not isinstance(t, bool) for t in terms):
        if any(isinstance(t, float) for t in terms):
            return math.fsum(terms)
        return sum(terms)
    if all(isinstance(t, (complex, float, int)) for t in terms):
        return complex(math.fsum(t.real for t in terms), math.fsum(complex(t).imag for t in terms))
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


# ----------------------------------------------------------------------------
# formal sums

class FormalSum:
    """Finitely supported map from hashable symbols to rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        self._terms = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for sym, c in items:
                self._add(sym, c)

    def _add(self, sym, c):
        c = Fraction(c)
        if not c:
            return
        new = self._terms.get(sym, 0) + c
        if new:
            self._terms[sym] = new
        else:
            self._terms.pop(sym, None)

    @classmethod
    def single(cls, sym, c=1):
        return cls({sym: c})

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __getitem__(self, sym):
        return self._terms.get(sym, Fraction(0))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, FormalSum):
            return NotImplemented
        out = FormalSum(self._terms)
        for s, c in other._terms.items():
            out._add(s, c)
        return out

    __radd__ = __add__

    def __neg__(self):
        return FormalSum({s: -c for s, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        if isinstance(k, (int, Fraction)):
            return FormalSum({s: c * k for s, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def map_symbols(self, fn: Callable) -> "FormalSum":
        """Linear extension of ``fn: symbol -> FormalSum | (symbol, coeff)``."""
        out = FormalSum()
        for s, c in self._terms.items():
            img = fn(s)
            if isinstance(img, FormalSum):
                for s2, c2 in img._terms.items():
                    out._add(s2, c * c2)
            elif img is not None:
                sym, k = img
                out._add(sym, c * k)
        return out

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._terms == other._terms

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        body = " + ".join(f"{c}*{s!r}" for s, c in sorted(self._terms.items(), key=repr))
        return f"FormalSum({body or '0'})"


def grassmannian_differential(configs: FormalSum) -> FormalSum:
    """d'(v_0..v_m) = sum (-1)^i (v_0..^v_i..v_m) on formal sums of configurations."""
    out = FormalSum()
    for cfg, c in configs.items():
        for i in range(len(cfg.vectors)):
            out = out + FormalSum.single(drop(cfg, i), c * (-1) ** i)
    return out


# ----------------------------------------------------------------------------
# JSON

def config_to_json(config: Configuration) -> dict:
    if config.exact:
        vecs = [[[x.re.numerator, x.re.denominator, x.im.numerator, x.im.denominator]
                 for x in v] for v in config.vectors]
        backend = "exact"
    else:
        vecs = [[[complex(x).real, complex(x).imag] for x in v] for v in config.vectors]
        backend = "float"
    out = {"dim": config.dim, "backend": backend, "vectors": vecs}
    vf = config.volume_form
    if vf != 1:
        if config.exact:
            vf = GaussianRational.coerce(vf)
            out["volume_form"] = [vf.re.numerator, vf.re.denominator,
                                  vf.im.numerator, vf.im.denominator]
        else:
            out["volume_form"] = [complex(vf).real, complex(vf).imag]
    return out


def _parse_scalar(entry, backend):
    if backend == "exact":
        if len(entry) != 4:
            raise ValueError(f"exact scalar needs 4 integers, got {entry!r}")
        rn, rd, im_n, im_d = entry
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in entry):
            raise ValueError(f"exact scalar entries must be integers: {entry!r}")
        if rd == 0 or im_d == 0:
            raise ValueError("zero denominator")
        return GaussianRational(Fraction(rn, rd), Fraction(im_n, im_d))
    if len(entry) != 2:
        raise ValueError(f"float scalar needs [re, im], got {entry!r}")
    return complex(float(entry[0]), float(entry[1]))


def config_from_json(data) -> Configuration:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        dim = int(data["dim"])
        backend = data["backend"]
        raw = data["vectors"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed configuration JSON: {exc}") from exc
    if backend not in ("exact", "float"):
        raise ValueError(f"unknown backend {backend!r}")
    vecs = tuple(tuple(_parse_scalar(e, backend) for e in v) for v in raw)
    if "volume_form" in data:
        vf = _parse_scalar(data["volume_form"], backend)
    else:
        vf = GaussianRational(1) if backend == "exact" else 1 + 0j
    if not vecs:
        raise ValueError("configuration has no vectors")
    return Configuration(vecs, dim, vf)


# ----------------------------------------------------------------------------
# random configurations

def random_exact_configuration(rng, m: int, n: int, bound: int = 9,
                               complex_entries: bool = True) -> Configuration:
    """Random Gaussian-integer-over-small-denominator configuration (re-drawn until generic)."""
    while True:
        cols = []
        for _ in range(m):
            col = []
            for _ in range(n):
                re = Fraction(rng.randint(-bound, bound), rng.randint(1, 4))
                im = Fraction(rng.randint(-bound, bound), rng.randint(1, 4)) if complex_entries else 0
                col.append(GaussianRational(re, im))
            cols.append(tuple(col))
        cfg = Configuration(tuple(cols), n, GaussianRational(1))
        if is_generic(cfg):
            return cfg


def random_float_configuration(rng, m: int, n: int) -> Configuration:
    """Random complex Gaussian configuration; ``rng`` is a numpy Generator."""
    while True:
        a = rng.normal(size=(m, n)) + 1j * rng.normal(size=(m, n))
        cfg = Configuration(tuple(tuple(complex(x) for x in row) for row in a), n, 1 + 0j)
        if is_generic(cfg):
            return cfg


def minors_conditioned(config: Configuration, lo: float = 1e-3, hi: float = 1e3) -> bool:
    """All normalized maximal minors lie within ``[lo, hi]`` of each other."""
    vals = []
    for idx in itertools.combinations(range(len(config.vectors)), config.dim):
        d = abs(complex(det_columns([config.vectors[i] for i in idx])))
        scale = math.prod(_column_norm(config.vectors[i]) for i in idx)
        vals.append(d / scale)
    return min(vals) > 0 and max(vals) / min(vals) <= hi / lo and min(vals) >= lo


def columns(config: Configuration) -> Iterable:
    return config.vectors
