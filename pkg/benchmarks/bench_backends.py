#!/usr/bin/env python3
"""Compare the compiled kernel extension against the pure-Python fallback.

Run from the repository root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_backends.py

Each workload is timed over a few repetitions and the best time is kept.
The two backends must produce identical output; that is asserted before
timing.
"""

import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from fractree import _kernels_py  # noqa: E402

try:
    from fractree import _kernels
except ImportError:
    _kernels = None


def bench(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - started)
    return best


def stern_sweep(mod):
    def work():
        total = 0
        for n in range(1, 200_000):
            total += mod.stern_value(n)
        return total

    return work


def newman_terms(mod):
    return lambda: mod.newman_run(1, 1, 200_000)


def diatomic_chunks(mod):
    def work():
        chunk = [1, 1]
        for _ in range(18):
            chunk = mod.diatomic_next(chunk)
        return chunk

    return work


def cw_rows(mod):
    def work():
        flat = [1, 1]
        for _ in range(18):
            flat = mod.next_row(0, flat)
        return flat

    return work


def sb_rows(mod):
    def work():
        boundary = [0, 1, 1, 0]
        for _ in range(18):
            boundary = mod.sb_refine(boundary)
        return boundary

    return work


WORKLOADS = [
    ("stern_value, n < 2*10^5", stern_sweep),
    ("newman_run, 2*10^5 terms", newman_terms),
    ("diatomic chunks to row 18", diatomic_chunks),
    ("CW rows to row 18", cw_rows),
    ("SB boundary to row 18", sb_rows),
]


def main():
    if _kernels is None:
        print("compiled kernels not built; run: python setup.py build_ext --inplace")
        return 1
    print(f"{'workload':<28} {'pure':>10} {'compiled':>10} {'speedup':>9}")
    for name, factory in WORKLOADS:
        assert factory(_kernels)() == factory(_kernels_py)()
        pure = bench(factory(_kernels_py))
        fast = bench(factory(_kernels))
        print(f"{name:<28} {pure:>9.3f}s {fast:>9.3f}s {pure / fast:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
