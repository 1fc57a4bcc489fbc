#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Runs the three hot kernels on representative desk-scale workloads and
prints a timing table.  Usage: ``python benchmarks/bench_backends.py``.
"""
import time

from quandlekit import Permutation, conjugacy_class_quandle, symmetric_group
from quandlekit._kernels import _pure

try:
    from quandlekit._kernels import _speedups
except ImportError:
    _speedups = None


def bench(fn, *args, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def workloads():
    s7 = [g.images for g in symmetric_group(7).generators]
    yield ("closure: symmetric group, degree 7 (5040 elements)",
           "closure_elements", (7, s7, 10 ** 6))

    cls6 = conjugacy_class_quandle(
        symmetric_group(6), Permutation.from_cycles(6, [[0, 1, 2, 3, 4]]))
    rows6 = [p.images for p in cls6.rack.translations()]
    yield (f"closure: inner group on {cls6.rack.n} points "
           f"({cls6.rack.n} generators)",
           "closure_elements", (cls6.rack.n, rows6, 10 ** 6))

    yield (f"distributivity scan: {cls6.rack.n}^3 triples",
           "a1_violations", (rows6,))

    labels = [p.images for p in cls6.labels]
    yield (f"conjugation table: {len(labels)} x {len(labels)} class products",
           "conjugation_table", (labels, 6))


def main():
    if _speedups is None:
        print("compiled backend unavailable; build the extension first")
        return
    print(f"{'workload':55s} {'pure':>9s} {'cython':>9s} {'speedup':>8s}")
    for title, fname, args in workloads():
        t_pure, r_pure = bench(getattr(_pure, fname), *args)
        t_fast, r_fast = bench(getattr(_speedups, fname), *args)
        assert r_pure == r_fast, f"backend mismatch in {fname}"
        print(f"{title:55s} {t_pure:8.3f}s {t_fast:8.3f}s "
              f"{t_pure / t_fast:7.1f}x")


if __name__ == "__main__":
    main()
