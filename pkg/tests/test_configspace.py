"""Determinants, ratios, Grassmannian maps and the alternation engine."""

import itertools
import json
import math
import random
from fractions import Fraction

import numpy as np
import pytest

from grasslog.configspace import (Configuration, FormalSum, GaussianRational, alternate,
                                  config_from_json, config_to_json, cross_ratio, delta, det_columns,
                                  drop, dualize, grassmannian_differential, is_generic, perm_sign,
                                  project, random_exact_configuration, triple_ratio_arg)
from grasslog.errors import DegenerateError, SizeError
from grasslog.grasspoly import special_config

G = GaussianRational


def rational_matrix(rng, n):
    while True:
        m = [[G(Fraction(rng.randint(-6, 6), rng.randint(1, 3)), rng.randint(-3, 3)) for _ in range(n)]
             for _ in range(n)]
        if det_columns(m) != 0:
            return m


def brute_det3(a, b, c):
    return (a[0] * (b[1] * c[2] - b[2] * c[1]) - b[0] * (a[1] * c[2] - a[2] * c[1])
            + c[0] * (a[1] * b[2] - a[2] * b[1]))


def test_gaussian_rational_arithmetic():
    a, b = G(Fraction(1, 2), 3), G(-2, Fraction(1, 3))
    assert a * b / b == a
    assert a - a == 0
    assert complex(a + b) == complex(a) + complex(b)
    assert G(Fraction(2, 4)).re.denominator == 2


def test_delta_examples():
    ident = Configuration.from_columns([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert delta(ident, [0, 1, 2]) == 1
    g3 = special_config(G(3))
    assert delta(g3, [0, 1, 3]) == 0
    assert delta(g3, [0, 1, 2]) == 1
    # det[(0,0,1),(0,1,1),(1,0,z)] by cofactor expansion along row 0 is 0*1 - 1*1
    assert delta(g3, [2, 4, 5]) == -1
    assert delta(ident, [1, 0, 2]) == -1


def test_delta_multilinear_alternating():
    rng = random.Random(0)
    for _ in range(10):
        cfg = random_exact_configuration(rng, 4, 3)
        v = cfg.vectors
        lam = G(rng.randint(-5, 5), rng.randint(-5, 5))
        for col in range(3):
            idx = [0, 1, 2]
            mixed = list(v[:3])
            mixed[col] = tuple(x + lam * y for x, y in zip(v[col], v[3]))
            other = list(v[:3])
            other[col] = v[3]
            assert det_columns(mixed) == det_columns(list(v[:3])) + lam * det_columns(other)
        for i, j in itertools.combinations(range(3), 2):
            p = [0, 1, 2]
            p[i], p[j] = p[j], p[i]
            assert delta(cfg, p) == -delta(cfg, [0, 1, 2])
    with pytest.raises(IndexError):
        delta(cfg, [0, 0, 1])
    with pytest.raises(IndexError):
        delta(cfg, [0, 1, 9])


def test_is_generic_examples():
    rng = random.Random(1)
    ident = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    pert = [tuple(G(x) + G(Fraction(rng.randint(1, 9), 97), Fraction(rng.randint(1, 9), 89))
                  for x in c) for c in ident + [(1, 1, 1)]]
    assert is_generic(Configuration.from_columns(pert))
    assert not is_generic(special_config(G(2)))
    assert not is_generic(Configuration.from_columns([(1, 2), (3, 4), (1, 2)]))


def test_cross_ratio_examples():
    z = G(3, -2)
    r = cross_ratio((G(1), G(0)), (G(0), G(1)), (G(1), G(1)), (G(1), z))
    assert r == 1 / z
    rng = random.Random(2)
    for _ in range(10):
        cfg = random_exact_configuration(rng, 4, 2)
        base = cross_ratio(*cfg.vectors)
        g = rational_matrix(rng, 2)
        assert cross_ratio(*cfg.transformed(g).vectors) == base
        lam = [G(rng.randint(1, 5), rng.randint(-5, 5)) for _ in range(4)]
        assert cross_ratio(*cfg.rescaled(lam).vectors) == base
    with pytest.raises(DegenerateError):
        cross_ratio((1, 0), (0, 1), (1, 1), (1, 0))


def test_triple_ratio_against_brute_force():
    rng = random.Random(3)
    for _ in range(10):
        cfg = random_exact_configuration(rng, 6, 3)
        l = cfg.vectors
        d = lambda a, b, c: brute_det3(l[a], l[b], l[c])
        ref = d(0, 1, 3) * d(1, 2, 4) * d(2, 0, 5) / (d(0, 1, 4) * d(1, 2, 5) * d(2, 0, 3))
        r = triple_ratio_arg(*l)
        assert r == ref
        lam = [G(rng.randint(1, 5), rng.randint(-5, 5)) for _ in range(6)]
        assert triple_ratio_arg(*cfg.rescaled(lam).vectors) == r
        assert triple_ratio_arg(*cfg.transformed(rational_matrix(rng, 3)).vectors) == r
    with pytest.raises(DegenerateError):
        triple_ratio_arg(*special_config(G(2)).vectors)


def test_drop_behaviour():
    rng = random.Random(4)
    for _ in range(3):
        cfg = random_exact_configuration(rng, 5, 2)
        assert drop(cfg, 2).vectors == cfg.vectors[:2] + cfg.vectors[3:]
        for i, j in itertools.combinations(range(5), 2):
            assert drop(drop(cfg, j), i) == drop(drop(cfg, i), j - 1)
    with pytest.raises(IndexError):
        drop(cfg, 7)


def test_d_prime_squared_is_zero():
    rng = random.Random(5)
    for _ in range(10):
        cfg = random_exact_configuration(rng, 7, 3, bound=4)
        once = grassmannian_differential(FormalSum.single(cfg))
        assert len(once) == 7
        assert grassmannian_differential(once) == 0


def test_project_contract():
    rng = random.Random(6)
    for _ in range(10):
        cfg = random_exact_configuration(rng, 4, 2)
        q = project(cfg, 0)
        assert q.dim == 1 and len(q) == 3
        for j in range(3):
            assert delta(q, [j]) == delta(cfg, [0, j + 1])
        cfg3 = random_exact_configuration(rng, 6, 3)
        for i in range(6):
            q = project(cfg3, i)
            assert is_generic(q)
            others = [k for k in range(6) if k != i]
            for a, b in itertools.combinations(range(5), 2):
                assert delta(q, [a, b]) == det_columns([cfg3.vectors[i], cfg3.vectors[others[a]],
                                                        cfg3.vectors[others[b]]])


def test_project_duplicate_flags_nongeneric():
    v = [(G(1), G(2)), (G(3), G(-1)), (G(1), G(2))]
    q = project(Configuration.from_columns(v), 0)
    assert q.vectors[1][0] == 0
    assert not is_generic(q)


def test_dualize_kernel_and_cross_ratio_relation():
    rng = random.Random(7)
    relations = set()
    for _ in range(20):
        cfg = random_exact_configuration(rng, 4, 2)
        dual = dualize(cfg)
        for i in range(2):
            for k in range(2):
                assert sum((cfg.vectors[j][i] * dual.vectors[j][k] for j in range(4)), G(0)) == 0
        r, rd = cross_ratio(*cfg.vectors), cross_ratio(*dual.vectors)
        candidates = {"r": r, "1/r": 1 / r, "1-r": 1 - r, "1/(1-r)": 1 / (1 - r),
                      "r/(r-1)": r / (r - 1), "(r-1)/r": (r - 1) / r}
        relations.add(tuple(sorted(k for k, v in candidates.items() if v == rd)))
    assert len(relations) == 1 and relations != {()}


def test_double_dual_preserves_invariants():
    rng = random.Random(8)
    for _ in range(5):
        cfg = random_exact_configuration(rng, 6, 3)
        back = dualize(dualize(cfg))
        assert back.dim == 3
        assert triple_ratio_arg(*back.vectors) == triple_ratio_arg(*cfg.vectors)
    with pytest.raises(DegenerateError):
        dualize(special_config(G(2)))


def test_alternate_examples():
    assert alternate(4, lambda s: 1.0) == 0
    assert alternate(5, lambda s: perm_sign(s)) == 120
    with pytest.raises(SizeError):
        alternate(9, lambda s: 0)
    rng = np.random.default_rng(0)
    base = rng.normal(size=6)
    f = lambda s: float(np.dot(base, np.arange(6)[list(s)]) ** 3)
    a = alternate(6, f)
    # reduction is fsum, so independent of term order
    terms = [perm_sign(s) * f(s) for s in itertools.permutations(range(6))]
    rng.shuffle(terms)
    assert a == math.fsum(terms)


def test_alt6_of_log_product_with_equal_vectors_vanishes():
    rng = random.Random(9)
    cfg = random_exact_configuration(rng, 5, 3)
    v = list(cfg.vectors) + [cfg.vectors[0]]

    def term(s):
        d = [abs(complex(det_columns([v[s[a]], v[s[a + 1]], v[s[a + 2]]]))) for a in range(3)]
        if min(d) == 0:
            return 0.0
        return math.log(d[0]) * math.log(d[1]) * math.log(d[2])

    assert abs(alternate(6, term)) < 1e-12


def test_json_round_trip():
    rng = random.Random(10)
    cfg = random_exact_configuration(rng, 5, 3)
    again = config_from_json(json.loads(json.dumps(config_to_json(cfg))))
    assert again == cfg and again.exact
    f = cfg.to_float()
    again = config_from_json(json.dumps(config_to_json(f)))
    assert again.vectors == f.vectors
    with pytest.raises(ValueError):
        config_from_json({"dim": 2})
    with pytest.raises(ValueError):
        config_from_json({"dim": 1, "backend": "exact", "vectors": [[[1, 0, 0, 1]]]})


def test_volume_form_change_leaves_ratios():
    rng = random.Random(11)
    cfg = random_exact_configuration(rng, 6, 3)
    c = G(3, 4)
    assert delta(cfg.with_volume_form(c), [0, 1, 2]) == c * delta(cfg, [0, 1, 2])
    assert triple_ratio_arg(*cfg.with_volume_form(c).vectors) == triple_ratio_arg(*cfg.vectors)
