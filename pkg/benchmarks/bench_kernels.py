"""Compare the numba kernels with the numpy fallback on points-oracle workloads.

    python3 benchmarks/bench_kernels.py [--mod 7] [--pairs 400000] [--repeat 5]

Both backends are imported directly, so GL2HOPF_DISABLE_NUMBA has no effect
here. Each row reports the best of ``--repeat`` runs after one warm-up call
(which also triggers JIT compilation), and the results of the two backends
are checked for equality before timing.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from gl2hopf import _kernels
from gl2hopf.algebra import CoeffRing
from gl2hopf.hopf import gl2_hopf
from gl2hopf.points import enumerate_points, point_values, term_arrays


def best_of(fn, repeat):
    fn()
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(n, pairs, seed):
    h = gl2_hopf(CoeffRing.integers())
    G = enumerate_points("GL2", n).elements
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, len(G), size=(pairs, 2))
    out = []
    for name in ("x11", "x12"):
        exps, coeffs, width = term_arrays(h.delta[name])
        vals = np.ascontiguousarray(np.concatenate(
            [point_values(G[idx[:, 0]], n, width), point_values(G[idx[:, 1]], n, width)], axis=1))
        out.append((f"eval Delta({name}), {pairs} pairs", "eval_terms", (exps, coeffs, vals, n)))
    exps, coeffs, width = term_arrays(h.carrier.det().inverse())
    vals = np.ascontiguousarray(point_values(G[idx[:, 0]], n, width))
    out.append((f"eval D^-1, {pairs} points", "eval_terms", (exps, coeffs, vals, n)))
    for group in ("GL2", "N"):
        P = enumerate_points(group, n).elements
        member = np.zeros(n**4, dtype=np.bool_)
        member[_kernels.numpy_impl.mat_codes(P, n)] = True
        out.append((f"closure {group}(Z/{n}), {len(P)}^2 products", "closure_misses", (P, member, n)))
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--mod", type=int, default=7)
    ap.add_argument("--pairs", type=int, default=400_000)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args(argv)

    if _kernels.numba_impl is None:
        print("numba is not installed; nothing to compare", file=sys.stderr)
        return 1
    backends = (_kernels.numpy_impl, _kernels.numba_impl)

    print(f"{'workload':<44}{'numpy s':>10}{'numba s':>10}{'speedup':>10}")
    for label, kernel, args in workloads(a.mod, a.pairs, a.seed):
        results = [getattr(b, kernel)(*args) for b in backends]
        if not np.array_equal(results[0], results[1]):
            print(f"{label}: backends disagree", file=sys.stderr)
            return 1
        t_np, t_nb = (best_of(lambda b=b: getattr(b, kernel)(*args), a.repeat) for b in backends)
        print(f"{label:<44}{t_np:>10.4f}{t_nb:>10.4f}{t_np / t_nb:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
