"""Compare the compiled and numpy kernels on the workloads the checkers run.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import importlib
import time

import numpy as np

from udcodes import _kernels_py
from udcodes.analysis import SumEncoder
from udcodes.construction import build_arbitrary, build_pow2


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads():
    for label, code in [("A(4,3)", build_pow2(2, 3)[0]),
                        ("A(5,3)", build_arbitrary(5, 3)[0]),
                        ("A(7,3)", build_arbitrary(7, 3)[0])]:
        keys = SumEncoder(code).user_keys(code)
        yield f"find_collision {label} ({code.tuple_count()} tuples)", "find_collision", (keys,)
    rng = np.random.default_rng(0)
    pts = rng.integers(0, 50, size=(20_000, 6))
    yield "min_l1_pairwise 20000x6", "min_l1_pairwise", (pts,)
    # the last two users collide at once, so early exit matters
    dup = [np.arange(8) * 10 ** (i + 2) for i in range(7)] + [np.array([0, 1]), np.array([0, 1])]
    yield "find_collision early hit (8.4M tuples)", "find_collision", (dup,)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    try:
        compiled = importlib.import_module("udcodes._kernels")
    except ImportError:
        compiled = None
        print("compiled kernels not built; timing the numpy fallback only")
    print(f"{'workload':<42} {'numpy s':>9} {'cython s':>9} {'speedup':>8}")
    for label, name, fargs in workloads():
        py = best_of(lambda: getattr(_kernels_py, name)(*fargs), args.repeat)
        if compiled is None:
            print(f"{label:<42} {py:>9.3f} {'-':>9} {'-':>8}")
            continue
        cy = best_of(lambda: getattr(compiled, name)(*fargs), args.repeat)
        print(f"{label:<42} {py:>9.3f} {cy:>9.3f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
