"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Both backends are loaded in the same process; the first numba call (JIT
compilation) is timed separately and excluded from the steady-state numbers.
"""

import argparse
import time

import numpy as np

from schur_kostka import _kernels


def _inputs(rng):
    # A3 partition-function arguments and a B2-sized Weyl double sum
    terms = rng.integers(-5, 60, size=(200_000, 3))
    signs = rng.choice([-1, 1], size=200_000)
    a = rng.integers(-20, 40, size=(24, 3))
    b = rng.integers(-20, 40, size=(24, 3))
    sa = rng.choice([-1, 1], size=24)
    sb = rng.choice([-1, 1], size=24)
    t = np.array([3, 1, 2])
    x = rng.normal(size=2_000_000)
    y = rng.normal(size=2_000_000)
    return {
        "alt_sum": lambda be: be.alt_sum(terms, signs, 1, 2),
        "double_alt_sum": lambda be: be.double_alt_sum(a, sa, b, sb, t, 1, 2),
        "hist2d": lambda be: be.hist2d(x, y, -4.0, -4.0, 0.1, 80),
    }


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    bes = _kernels.backends()
    cases = _inputs(np.random.default_rng(0))
    print(f"{'kernel':<16}{'numpy':>12}{'numba':>12}{'speedup':>10}{'jit':>10}")
    for name, call in cases.items():
        ref = call(bes["numpy"])
        row = f"{name:<16}{_time(lambda: call(bes['numpy']), args.repeat) * 1e3:>10.2f}ms"
        if "numba" in bes:
            t0 = time.perf_counter()
            got = call(bes["numba"])
            jit = time.perf_counter() - t0
            assert np.array_equal(np.asarray(ref), np.asarray(got)), name
            tn = _time(lambda: call(bes["numba"]), args.repeat)
            tp = _time(lambda: call(bes["numpy"]), args.repeat)
            row += f"{tn * 1e3:>10.2f}ms{tp / tn:>9.1f}x{jit:>9.2f}s"
        print(row)


if __name__ == "__main__":
    main()
