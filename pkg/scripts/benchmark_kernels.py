#!/usr/bin/env python3
"""Benchmark the Euler-Maclaurin kernel backends.

Times the raw kernel on a representative truncation, then a realistic
engine workload (zeta over a complex-plane lattice) with each backend,
and prints the speedup of the compiled extension over pure Python.

Usage:
    python scripts/benchmark_kernels.py [--points 600] [--repeat 3]
"""

from __future__ import annotations

import argparse
import time

from zrc._kernel import available_backends, get_backend
from zrc.zeta import ZetaEngine


def _lattice(points: int):
    out = []
    k = 0
    re, im = -5.75, -10.25
    while len(out) < points:
        s = complex(re + 0.5 * (k % 25), im + 1.5 * ((k // 25) % 14))
        if abs(s - 1.0) > 0.3:
            out.append(s)
        k += 1
    return out


def time_kernel(backend, lattice, repeat: int) -> float:
    em = backend.em_partial
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for s in lattice:
            em(s.real, s.imag, 48, 8)
        best = min(best, time.perf_counter() - t0)
    return best


def time_engine(backend_name: str, lattice, repeat: int) -> float:
    import zrc._kernel as kernel_mod

    saved = kernel_mod.em_partial
    kernel_mod.em_partial = get_backend(backend_name).em_partial
    try:
        best = float("inf")
        for _ in range(repeat):
            engine = ZetaEngine()  # fresh cache per run
            t0 = time.perf_counter()
            for s in lattice:
                engine.zeta(s)
            best = min(best, time.perf_counter() - t0)
        return best
    finally:
        kernel_mod.em_partial = saved


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=600)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    lattice = _lattice(args.points)
    names = available_backends()
    print(f"backends available: {', '.join(names)}")
    print(f"workload: {len(lattice)} lattice points, best of {args.repeat}\n")

    kernel_times = {}
    engine_times = {}
    for name in names:
        kernel_times[name] = time_kernel(get_backend(name), lattice, args.repeat)
        engine_times[name] = time_engine(name, lattice, args.repeat)

    print(f"{'backend':8s} {'raw kernel':>12s} {'engine sweep':>13s}")
    for name in names:
        print(f"{name:8s} {kernel_times[name]*1e3:10.2f}ms {engine_times[name]*1e3:11.2f}ms")
    if "cython" in kernel_times:
        print(
            f"\nspeedup (pure/cython): kernel x{kernel_times['pure']/kernel_times['cython']:.1f}, "
            f"engine sweep x{engine_times['pure']/engine_times['cython']:.1f}"
        )


if __name__ == "__main__":
    main()
