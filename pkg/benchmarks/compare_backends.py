"""Compare the JIT and pure-numpy kernel backends on matmul and closure.

Runs min-plus matrix product and closure at a few sizes under each backend
and prints a timing table. The JIT backend pays a one-off compile cost that
warmup() absorbs before timing starts.

    python3 benchmarks/compare_backends.py [--sizes 32,64,128,256] [--repeats 5]
"""

import argparse
import time

import numpy as np

from semikernel import kernels
from semikernel.semiring import MIN_PLUS


def _time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="32,64,128,256")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    spec = MIN_PLUS.kernel_spec
    rng = np.random.default_rng(17)

    kernels.set_backend("numba")
    kernels.warmup()

    rows = []
    for n in sizes:
        a = rng.integers(0, 10, size=(n, n)).astype(np.float64)
        b = rng.integers(0, 10, size=(n, n)).astype(np.float64)
        # strictly positive off-diagonal weights keep every pivot star finite
        np.fill_diagonal(a, 0.0)
        timings = {}
        for backend in sorted(kernels.available_backends()):
            kernels.set_backend(backend)
            timings[backend, "matmul"] = _time(
                lambda: kernels.matmul(a, b, spec.add_op, spec.mul_op, spec.zero), args.repeats
            )
            timings[backend, "closure"] = _time(
                lambda: kernels.closure(a, spec.add_op, spec.mul_op, spec.one), args.repeats
            )
        rows.append((n, timings))

    header = f"{'n':>5} {'op':>8} {'numba (s)':>12} {'numpy (s)':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n, timings in rows:
        for op in ("matmul", "closure"):
            tb = timings["numba", op]
            tp = timings["numpy", op]
            print(f"{n:>5} {op:>8} {tb:>12.5f} {tp:>12.5f} {tp / tb:>8.1f}x")


if __name__ == "__main__":
    main()
