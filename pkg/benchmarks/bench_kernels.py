"""Time the numba kernels against the pure-numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both backends must return identical arrays; the script exits non-zero if not.
"""
import argparse
import sys
import time

import numpy as np

from walksym import kernels
from walksym.graph import complete, petersen
from walksym.walks import neighbor_table


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--trials", type=int, default=1_000_000)
    args = ap.parse_args(argv)

    cases = [(f"scan_codes n={n}", lambda f, n=n: f(n)) for n in (6, 7)]
    for name, g, steps in (("K3", complete(3), 2), ("Petersen", petersen(), 10)):
        nbr, deg = neighbor_table(g)
        cases.append((
            f"walk_endpoints {name} t={steps} trials={args.trials}",
            lambda f, nbr=nbr, deg=deg, steps=steps: f(nbr, deg, 0, steps, args.trials, 7),
        ))
    backends = {
        "scan_codes": (kernels.scan_codes_numba, kernels.scan_codes_numpy),
        "walk_endpoints": (kernels.walk_endpoints_numba, kernels.walk_endpoints_numpy),
    }

    # warm up the jit so compile time is not measured
    for name, call in cases:
        call(backends[name.split()[0]][0])

    ok = True
    print(f"{'kernel':<52} {'numba s':>9} {'numpy s':>9} {'speedup':>8}")
    for name, call in cases:
        fast, slow = backends[name.split()[0]]
        t_fast, r_fast = best_of(lambda: call(fast), args.repeat)
        t_slow, r_slow = best_of(lambda: call(slow), args.repeat)
        same = np.array_equal(r_fast, r_slow)
        ok &= same
        print(f"{name:<52} {t_fast:9.4f} {t_slow:9.4f} {t_slow / t_fast:7.1f}x" + ("" if same else "  MISMATCH"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
