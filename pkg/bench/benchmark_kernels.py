"""Benchmark the numba kernels against the pure-numpy fallback.

Times the three hot kernels and a full optimizer-style lattice scan on
the default 4121-point lattice and on a denser synthetic grid. Run:

    python bench/benchmark_kernels.py
"""

import time

import numpy as np

from elastomix import _kernels
from elastomix.mixture import enumerate_lattice
from elastomix.models import PAPER_HARDNESS, PAPER_TRANSPARENCY

REPEAT = 200


def timeit(fn, *args) -> float:
    fn(*args)  # warmup / JIT
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(REPEAT):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / REPEAT)
    return best


def scan_scores(fused, fr, c1, c2):
    return fused(
        fr, c1, c2,
        _kernels.NTB, 0.0, 100.0, 55.0, 1.0,
        _kernels.NTB, 0.0, 90.0, 55.0, 1.0,
        0.5, 0.5,
    )


def scan(fused, fr, c1, c2):
    return int(np.argmax(scan_scores(fused, fr, c1, c2)))


def dense_fractions(step: float) -> np.ndarray:
    grid = np.arange(0.0, 1.0 + step / 2, step)
    pts = []
    for a in grid:
        for b in grid:
            c = 1.0 - a - b
            if -1e-12 <= c <= 0.6 and b <= 0.8:
                pts.append((a, b, max(c, 0.0)))
    return np.array(pts)


def main() -> None:
    if not _kernels.using_numba():
        print("numba path unavailable (ELASTOMIX_NO_NUMBA set or import failed);")
        print("benchmarking the numpy fallback against itself is meaningless.")
        return

    lattice = np.array([c.fractions() for c in enumerate_lattice()])
    dense = dense_fractions(0.0025)
    c1 = PAPER_TRANSPARENCY.dense_coefficients()
    c2 = PAPER_HARDNESS.dense_coefficients()

    numba_fns = {
        "scheffe": _kernels.scheffe_eval,
        "desirability": _kernels.desirability_eval,
        "scan": _kernels.overall_scan,
    }
    numpy_fns = {
        "scheffe": _kernels.scheffe_eval_numpy,
        "desirability": _kernels.desirability_eval_numpy,
        "scan": _kernels.overall_scan_numpy,
    }

    print(f"{'case':<34}{'numba':>12}{'numpy':>12}{'speedup':>9}")
    cases = [
        ("scheffe_eval, 4121 pts", lambda f: f["scheffe"](lattice, c1)),
        ("desirability_eval, 4121 pts",
         lambda f: f["desirability"](f["scheffe"](lattice, c1),
                                     _kernels.NTB, 0.0, 100.0, 55.0, 1.0)),
        ("fused scan, 4121 pts", lambda f: scan(f["scan"], lattice, c1, c2)),
        (f"fused scan, {len(dense)} pts", lambda f: scan(f["scan"], dense, c1, c2)),
    ]
    for name, runner in cases:
        t_nb = timeit(runner, numba_fns)
        t_np = timeit(runner, numpy_fns)
        print(f"{name:<34}{t_nb * 1e3:>10.3f}ms{t_np * 1e3:>10.3f}ms{t_np / t_nb:>8.1f}x")

    # sanity: same argmax, scores within one ulp
    assert scan(numba_fns["scan"], lattice, c1, c2) == scan(numpy_fns["scan"], lattice, c1, c2)
    s_nb = scan_scores(numba_fns["scan"], lattice, c1, c2)
    s_np = scan_scores(numpy_fns["scan"], lattice, c1, c2)
    print("\nmax |numba - numpy| over the scan:", float(np.abs(s_nb - s_np).max()),
          "(pow differs by <= 1 ulp between libm and numpy)")


if __name__ == "__main__":
    main()
