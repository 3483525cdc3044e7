#!/usr/bin/env python3
"""Kernel and quadrature throughput, numba vs numpy.

    python3 benchmarks/bench_kernels.py --points 200000 --runs 5
    python3 benchmarks/bench_kernels.py --json
"""

import argparse
import json
import time

import numpy as np

from grasslog import kernels, quad
from grasslog.formeval import FunctionSystem


def timed(fn, runs):
    fn()                                   # warm-up, includes JIT compilation
    times = []
    for _ in range(runs):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--points", type=int, default=200_000)
    ap.add_argument("--runs", type=int, default=5)
    ap.add_argument("--budget", type=int, default=1_000_000, help="CP^2 integration budget")
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    f2 = rng.normal(size=(6, 3)) + 1j * rng.normal(size=(6, 3))
    f1 = rng.normal(size=(4, 2)) + 1j * rng.normal(size=(4, 2))
    V3 = rng.normal(size=(args.points, 3)) + 1j * rng.normal(size=(args.points, 3))
    V2 = rng.normal(size=(args.points, 2)) + 1j * rng.normal(size=(args.points, 2))

    backends = ["numpy"] + (["numba"] if kernels._HAVE_NUMBA else [])
    results = {"points": args.points, "budget": args.budget, "kernels": {}, "integrate_cp2": {}}
    ref = {}
    for b in backends:
        t2, out2 = timed(lambda: kernels.cp2_trilog(V3, f2, b), args.runs)
        t1, _ = timed(lambda: kernels.cp1_dilog(V2, f1, b), args.runs)
        ref[b] = out2
        results["kernels"][b] = {"cp2_trilog_Mpts_per_s": args.points / t2 / 1e6,
                                 "cp1_dilog_Mpts_per_s": args.points / t1 / 1e6}
        intg = quad.Integrand(FunctionSystem(tuple(map(tuple, f2)), 3), "trilog")
        ti, est = timed(lambda: quad.integrate_cp2(intg, budget=args.budget, seed=args.seed, backend=b), 1)
        results["integrate_cp2"][b] = {"seconds": ti, "value": est.value, "sigma": est.sigma}
    if len(ref) == 2:
        a, c = ref["numpy"], ref["numba"]
        results["max_relative_gap"] = float(np.max(np.abs(a - c)) / np.max(np.abs(a)))

    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
        return
    print(f"{args.points} points, best of {args.runs}")
    for b, r in results["kernels"].items():
        q = results["integrate_cp2"][b]
        print(f"  {b:6s} cp2 {r['cp2_trilog_Mpts_per_s']:7.2f} Mpt/s   cp1 {r['cp1_dilog_Mpts_per_s']:7.2f} Mpt/s"
              f"   integrate_cp2({args.budget}) {q['seconds']:6.2f}s  value {q['value']:+.5f} +- {q['sigma']:.5f}")
    if "max_relative_gap" in results:
        print(f"  max |numpy - numba| / max|numpy| = {results['max_relative_gap']:.2e}")


if __name__ == "__main__":
    main()
