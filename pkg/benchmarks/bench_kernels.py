#!/usr/bin/env python3
"""Benchmark the pure-Python kernel against the compiled one.

Runs each workload on both backends (when the extension is available) and
prints a table with the best-of-N wall times and the speedup.  Workload
inputs are seeded, so repeated runs measure the same computation.

    python benchmarks/bench_kernels.py [--quick] [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import time

from zclrp._kernels import pure

try:
    from zclrp._kernels import _fast
except ImportError:
    _fast = None


def best_of(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def dense_pair(rng, size):
    return rng.getrandbits(size), rng.getrandbits(size)


def witness_product(kernel, m, s):
    # the factor chain (x_1+x_s)^m ... (x_(s-1)+x_s)^m via repeated squaring
    x_s = 1 << (m + 1) ** (s - 1)
    acc = 1
    for i in range(1, s):
        base = (1 << (m + 1) ** (i - 1)) ^ x_s
        p = base
        for bit in bin(m)[3:]:
            p = kernel.square(p)
            if bit == "1":
                p = kernel.mul(p, base)
        acc = kernel.mul(acc, p)
    return acc


def run_workloads(shapes, rref_shapes, repeats):
    rows = []
    for m, s in shapes:
        size = (m + 1) ** s
        rng = random.Random(1234)
        a, b = dense_pair(rng, size)
        kernels = {"pure": pure.RingKernel(m, s)}
        if _fast is not None:
            kernels["compiled"] = _fast.RingKernel(m, s)

        checks = {}
        for label, op in [
            (f"mul dense (m={m}, s={s}, {size} bits)",
             lambda k: k.mul(a, b)),
            (f"square dense (m={m}, s={s})",
             lambda k: k.square(a)),
            (f"witness chain (m={m}, s={s})",
             lambda k: witness_product(k, m, s)),
        ]:
            times = {}
            for name, kernel in kernels.items():
                checks.setdefault(label, set()).add(op(kernel))
                times[name] = best_of(lambda: op(kernel), repeats)
            assert len(checks[label]) == 1, f"backend mismatch in {label}"
            rows.append((label, times))

    for n, width in rref_shapes:
        rng = random.Random(99)
        mat = [rng.getrandbits(width) for _ in range(n)]
        times = {"pure": best_of(lambda: pure.rref(list(mat), width), repeats)}
        if _fast is not None:
            assert pure.rref(list(mat), width) == _fast.rref(list(mat), width)
            times["compiled"] = best_of(lambda: _fast.rref(list(mat), width),
                                        repeats)
        rows.append((f"rref {n}x{width}", times))
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="smaller shapes only")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if args.quick:
        shapes = [(7, 3), (7, 4)]
        rref_shapes = [(200, 300)]
    else:
        # dense pure-Python products above ~10^4 bits take minutes; the
        # compiled kernel is the point of larger rings
        shapes = [(7, 3), (7, 4), (9, 4), (7, 5)]
        rref_shapes = [(200, 300), (600, 900)]

    if _fast is None:
        print("compiled kernel unavailable; timing the pure backend only\n")

    rows = run_workloads(shapes, rref_shapes, args.repeats)
    name_w = max(len(r[0]) for r in rows)
    header = f"{'workload':<{name_w}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, times in rows:
        pure_ms = times["pure"] * 1000
        if "compiled" in times:
            comp_ms = times["compiled"] * 1000
            speedup = pure_ms / comp_ms if comp_ms > 0 else float("inf")
            print(f"{label:<{name_w}}  {pure_ms:>8.3f}ms  {comp_ms:>8.3f}ms  "
                  f"{speedup:>7.1f}x")
        else:
            print(f"{label:<{name_w}}  {pure_ms:>8.3f}ms  {'-':>10}  {'-':>8}")


if __name__ == "__main__":
    main()
