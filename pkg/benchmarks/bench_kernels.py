"""Compare the compiled transform kernel against the numpy fallback.

Run with:  python3 benchmarks/bench_kernels.py [--max-qubits 14]

Times the in-place Walsh-Hadamard butterfly (the hot kernel behind the
x-basis evolution engine) for both backends, plus a full evolve round
trip, and prints a throughput table.
"""

import argparse
import time

import numpy as np

from isingsym import basis_state, evolve_xdiag, kernels
from isingsym._kernels_py import fwht as fwht_python

try:
    from isingsym._kernels import fwht as fwht_cython
except ImportError:
    fwht_cython = None


def time_fn(fn, arg, min_seconds=0.2):
    reps = 1
    while True:
        buf = [arg.copy() for _ in range(reps)]
        start = time.perf_counter()
        for b in buf:
            fn(b)
        elapsed = time.perf_counter() - start
        if elapsed >= min_seconds:
            return elapsed / reps
        reps = max(reps + 1, int(reps * min_seconds / max(elapsed, 1e-9)))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-qubits", type=int, default=14)
    args = parser.parse_args()

    print(f"active backend: {kernels.BACKEND}")
    print(f"{'n':>3} {'dim':>6} {'numpy (us)':>12} {'cython (us)':>12} {'speedup':>8}")
    rng = np.random.default_rng(0)
    for n in range(4, args.max_qubits + 1, 2):
        a = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
        t_py = time_fn(fwht_python, a)
        if fwht_cython is not None:
            t_cy = time_fn(fwht_cython, a)
            print(
                f"{n:>3} {2**n:>6} {t_py * 1e6:>12.2f} {t_cy * 1e6:>12.2f}"
                f" {t_py / t_cy:>8.2f}x"
            )
        else:
            print(f"{n:>3} {2**n:>6} {t_py * 1e6:>12.2f} {'n/a':>12} {'n/a':>8}")

    n = min(args.max_qubits, 12)
    psi = basis_state(n, "0" * n)
    t_evolve = time_fn(lambda _: evolve_xdiag(psi, 0.7), np.empty(0))
    print(f"\nfull evolve round trip at n={n}: {t_evolve * 1e3:.3f} ms")


if __name__ == "__main__":
    main()
