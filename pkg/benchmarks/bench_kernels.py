"""Timing comparison between the compiled and pure-numpy kernel backends.

Usage: python benchmarks/bench_kernels.py [--n 40] [--repeat 3] [--seed 0]
"""

import argparse
import time

import numpy as np

from hypan import backend, build_metric_from_points, gen_random_ball


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    d = np.ascontiguousarray(
        build_metric_from_points(gen_random_ball(args.n, 3, args.seed)).dist
    )
    backends = [("python", backend.py_kernels)]
    if backend.BACKEND == "cython":
        backends.append(("cython", backend.kernels))
    else:
        print("compiled extension unavailable; timing the python backend only")

    jobs = [
        ("triangle_scan", lambda k: k.triangle_scan(d)),
        ("perimeter_scan", lambda k: k.perimeter_scan(d)),
        ("ptolemy_scan", lambda k: k.ptolemy_scan(d)),
        ("lemma22_scan", lambda k: k.lemma22_scan(d, 0)),
        ("delta_scan", lambda k: k.delta_scan(d)),
        ("epsilon_scan", lambda k: k.epsilon_scan(d, 1e-12)),
        ("bolicity_scan", lambda k: k.bolicity_scan(d, 1.0, 0.1)),
    ]

    print(f"n = {args.n}, seed = {args.seed}, best of {args.repeat}")
    header = f"{'kernel':<16}" + "".join(f"{name:>12}" for name, _ in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, job in jobs:
        row = f"{name:<16}"
        times = []
        for _, kern in backends:
            t, _ = best_of(lambda: job(kern), args.repeat)
            times.append(t)
            row += f"{t * 1e3:>10.2f}ms"
        if len(times) == 2:
            row += f"{times[0] / times[1]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
