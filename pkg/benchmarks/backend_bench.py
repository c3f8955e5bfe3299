"""Timing comparison between the compiled and numpy escape kernels.

Runs the same workloads on every available backend, checks the outputs are
bit-identical, and prints one row per workload with the speedup of the
compiled extension over the numpy fallback.

Usage:
    python3 benchmarks/backend_bench.py [--quick] [--repeat N]
"""

import argparse
import time

import numpy as np

from tricomplex import backends
from tricomplex.raster import Window2D, Window3D, scan2d, scan3d
from tricomplex.realroots import PolyParams


def best_time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def workloads(quick):
    n = 2_000 if quick else 20_000
    mi = 300 if quick else 2_000
    res2 = 96 if quick else 384
    mi2 = 200 if quick else 2_000
    res3 = 16 if quick else 48
    mi3 = 60 if quick else 400

    rng = np.random.default_rng(0)
    p = 3
    radius = PolyParams.for_power(p).escape_radius
    r2 = radius * radius
    cr = rng.uniform(-1.5, 1.5, n)
    ci = rng.uniform(-1.5, 1.5, n)
    qr = rng.uniform(-0.8, 0.8, (4, n))
    qi = rng.uniform(-0.8, 0.8, (4, n))
    w2 = Window2D(-1.0, 1.0, -1.0, 1.0, res2, res2)
    w3 = Window3D(-1.0, 1.0, -1.0, 1.0, -1.0, 1.0, res3, res3, res3)

    return [
        (
            f"complex_escape n={n} mi={mi}",
            lambda k: k.complex_escape(cr, ci, p, mi, r2),
        ),
        (
            f"hyper_escape   n={n} mi={mi}",
            lambda k: k.hyper_escape(cr, ci, p, mi, r2),
        ),
        (
            f"quad_escape    n={n} mi={mi}",
            lambda k: k.quad_escape(qr, qi, p, mi, r2),
        ),
        (
            f"scan2d hyperbrot {res2}x{res2} mi={mi2}",
            lambda k: scan2d("hyperbrot", p, w2, mi2, backend=k).escape,
        ),
        (
            f"scan3d (1,j1,j2) {res3}^3 mi={mi3}",
            lambda k: scan3d(("1", "j1", "j2"), p, w3, mi3, backend=k).escape,
        ),
    ]


def _arrays(result):
    if isinstance(result, tuple):
        return [np.asarray(a) for a in result]
    return [np.asarray(result)]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--quick", action="store_true", help="small sizes for a fast smoke run"
    )
    parser.add_argument(
        "--repeat", type=int, default=3, help="repetitions per cell; best is kept"
    )
    args = parser.parse_args()

    names = backends.names()
    if "compiled" not in names:
        print("note: compiled extension not built; timing the numpy fallback only")
    print(f"backends: {', '.join(names)} (default {backends.default_name()})")
    header = f"{'workload':<36}" + "".join(f"{n:>12}" for n in names)
    if len(names) > 1:
        header += f"{'speedup':>10}{'identical':>11}"
    print(header)
    print("-" * len(header))

    for label, work in workloads(args.quick):
        times = {}
        results = {}
        for name in names:
            kern = backends.get(name)
            times[name], results[name] = best_time(
                lambda k=kern: work(k), args.repeat
            )
        line = f"{label:<36}" + "".join(f"{times[n] * 1e3:>10.1f}ms" for n in names)
        if len(names) > 1:
            same = all(
                np.array_equal(a, b)
                for a, b in zip(_arrays(results["compiled"]), _arrays(results["python"]))
            )
            line += f"{times['python'] / times['compiled']:>9.1f}x{str(same):>11}"
        print(line)


if __name__ == "__main__":
    main()
