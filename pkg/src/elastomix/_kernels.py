"""Hot numeric kernels: batch polynomial and desirability evaluation.

Every lattice-wide scan (optimization, windows, feasible-space builds,
brute-force style filters) funnels through the three functions exported
here. Two interchangeable implementations exist:

* numba ``@njit`` loops (default when numba imports cleanly), and
* pure-numpy vectorized fallbacks.

Set ``ELASTOMIX_NO_NUMBA=1`` to force the numpy path. Both paths apply
the same floating-point operations in the same order; polynomial
evaluation is bit-identical and desirability scans agree to a few ulps
(numpy's vectorized pow differs from libm pow in the last bit).
``bench/benchmark_kernels.py`` compares their speed.

Criterion kinds are encoded as integers: 0 = NTB, 1 = LTB, 2 = STB.
Scheffé coefficients arrive as a dense 7-vector in canonical term order
(x1, x2, x3, x1x2, x1x3, x2x3, x1x2x3) with zeros for inactive terms.
"""

from __future__ import annotations

import os

import numpy as np

NTB, LTB, STB = 0, 1, 2


def _scheffe_eval_py(fractions: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    out = np.empty(fractions.shape[0])
    for i in range(fractions.shape[0]):
        a = fractions[i, 0]
        b = fractions[i, 1]
        c = fractions[i, 2]
        out[i] = (
            coeffs[0] * a
            + coeffs[1] * b
            + coeffs[2] * c
            + coeffs[3] * (a * b)
            + coeffs[4] * (a * c)
            + coeffs[5] * (b * c)
            + coeffs[6] * ((a * b) * c)
        )
    return out


def _scheffe_eval_numpy(fractions: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    a = fractions[:, 0]
    b = fractions[:, 1]
    c = fractions[:, 2]
    return (
        coeffs[0] * a
        + coeffs[1] * b
        + coeffs[2] * c
        + coeffs[3] * (a * b)
        + coeffs[4] * (a * c)
        + coeffs[5] * (b * c)
        + coeffs[6] * ((a * b) * c)
    )


def _d_scalar(y: float, kind: int, lo: float, hi: float, target: float, r: float) -> float:
    if kind == NTB:
        if y < lo or y > hi:
            return 0.0
        if y == target:
            return 1.0
        if y < target:
            if target == lo:
                return 0.0
            return ((y - lo) / (target - lo)) ** r
        if hi == target:
            return 0.0
        return ((hi - y) / (hi - target)) ** r
    if kind == LTB:
        if y < lo:
            return 0.0
        if y > hi:
            return 1.0
        return ((y - lo) / (hi - lo)) ** r
    # STB
    if y > hi:
        return 0.0
    if y < lo:
        return 1.0
    return ((y - hi) / (lo - hi)) ** r


def _desirability_eval_py(
    y: np.ndarray, kind: int, lo: float, hi: float, target: float, r: float
) -> np.ndarray:
    out = np.empty(y.shape[0])
    for i in range(y.shape[0]):
        out[i] = _d_scalar(y[i], kind, lo, hi, target, r)
    return out


def _desirability_eval_numpy(
    y: np.ndarray, kind: int, lo: float, hi: float, target: float, r: float
) -> np.ndarray:
    out = np.zeros(y.shape[0])
    if kind == NTB:
        below = (y >= lo) & (y < target)
        above = (y <= hi) & (y > target)
        if target != lo:
            out[below] = ((y[below] - lo) / (target - lo)) ** r
        if hi != target:
            out[above] = ((hi - y[above]) / (hi - target)) ** r
        out[y == target] = 1.0
    elif kind == LTB:
        mid = (y >= lo) & (y <= hi)
        out[mid] = ((y[mid] - lo) / (hi - lo)) ** r
        out[y > hi] = 1.0
    else:
        mid = (y >= lo) & (y <= hi)
        out[mid] = ((y[mid] - hi) / (lo - hi)) ** r
        out[y < lo] = 1.0
    return out


def _overall_eval_py(d1: np.ndarray, d2: np.ndarray, w1: float, w2: float) -> np.ndarray:
    # Weighted geometric mean; zero annihilates regardless of its weight.
    e1 = w1 / (w1 + w2)
    e2 = w2 / (w1 + w2)
    out = np.empty(d1.shape[0])
    for i in range(d1.shape[0]):
        if d1[i] <= 0.0 or d2[i] <= 0.0:
            out[i] = 0.0
        else:
            out[i] = d1[i] ** e1 * d2[i] ** e2
    return out


def _overall_eval_numpy(d1: np.ndarray, d2: np.ndarray, w1: float, w2: float) -> np.ndarray:
    e1 = w1 / (w1 + w2)
    e2 = w2 / (w1 + w2)
    pos = (d1 > 0.0) & (d2 > 0.0)
    out = np.zeros(d1.shape[0])
    out[pos] = d1[pos] ** e1 * d2[pos] ** e2
    return out


def _overall_scan_numpy(
    fractions, coeffs_1, coeffs_2,
    k1, lo1, hi1, t1, r1,
    k2, lo2, hi2, t2, r2,
    w1, w2,
):
    """Fused lattice scan: predictions -> desirabilities -> overall D."""
    y1 = _scheffe_eval_numpy(fractions, coeffs_1)
    y2 = _scheffe_eval_numpy(fractions, coeffs_2)
    d1 = _desirability_eval_numpy(y1, k1, lo1, hi1, t1, r1)
    d2 = _desirability_eval_numpy(y2, k2, lo2, hi2, t2, r2)
    return _overall_eval_numpy(d1, d2, w1, w2)


_DISABLED = os.environ.get("ELASTOMIX_NO_NUMBA", "").strip() not in ("", "0")
_NUMBA_OK = False

if not _DISABLED:
    try:
        from numba import njit

        _scheffe_eval_numba = njit(cache=True)(_scheffe_eval_py)
        _overall_eval_numba = njit(cache=True)(_overall_eval_py)
        _d_scalar_jit = njit(cache=True)(_d_scalar)

        @njit(cache=True)
        def _desirability_eval_numba(y, kind, lo, hi, target, r):
            out = np.empty(y.shape[0])
            for i in range(y.shape[0]):
                out[i] = _d_scalar_jit(y[i], kind, lo, hi, target, r)
            return out

        @njit(cache=True)
        def _overall_scan_numba(
            fractions, coeffs_1, coeffs_2,
            k1, lo1, hi1, t1, r1,
            k2, lo2, hi2, t2, r2,
            w1, w2,
        ):
            e1 = w1 / (w1 + w2)
            e2 = w2 / (w1 + w2)
            out = np.empty(fractions.shape[0])
            for i in range(fractions.shape[0]):
                a = fractions[i, 0]
                b = fractions[i, 1]
                c = fractions[i, 2]
                y1 = (
                    coeffs_1[0] * a + coeffs_1[1] * b + coeffs_1[2] * c
                    + coeffs_1[3] * (a * b) + coeffs_1[4] * (a * c)
                    + coeffs_1[5] * (b * c) + coeffs_1[6] * ((a * b) * c)
                )
                y2 = (
                    coeffs_2[0] * a + coeffs_2[1] * b + coeffs_2[2] * c
                    + coeffs_2[3] * (a * b) + coeffs_2[4] * (a * c)
                    + coeffs_2[5] * (b * c) + coeffs_2[6] * ((a * b) * c)
                )
                d1 = _d_scalar_jit(y1, k1, lo1, hi1, t1, r1)
                d2 = _d_scalar_jit(y2, k2, lo2, hi2, t2, r2)
                if d1 <= 0.0 or d2 <= 0.0:
                    out[i] = 0.0
                else:
                    out[i] = d1 ** e1 * d2 ** e2
            return out

        _NUMBA_OK = True
    except ImportError:  # pragma: no cover - exercised via env flag instead
        _NUMBA_OK = False

if _NUMBA_OK:
    scheffe_eval = _scheffe_eval_numba
    desirability_eval = _desirability_eval_numba
    overall_eval = _overall_eval_numba
    overall_scan = _overall_scan_numba
else:
    scheffe_eval = _scheffe_eval_numpy
    desirability_eval = _desirability_eval_numpy
    overall_eval = _overall_eval_numpy
    overall_scan = _overall_scan_numpy

# Fallbacks stay importable for benchmarks and equivalence tests.
scheffe_eval_numpy = _scheffe_eval_numpy
desirability_eval_numpy = _desirability_eval_numpy
overall_eval_numpy = _overall_eval_numpy
overall_scan_numpy = _overall_scan_numpy


def using_numba() -> bool:
    return _NUMBA_OK


def warmup() -> None:
    """Trigger JIT compilation so timed paths never pay compile cost."""
    fr = np.array([[0.5, 0.3, 0.2]])
    y = scheffe_eval(fr, np.ones(7))
    d = desirability_eval(y, NTB, 0.0, 100.0, 50.0, 1.0)
    overall_eval(d, d, 0.5, 0.5)
    overall_scan(
        fr, np.ones(7), np.ones(7),
        NTB, 0.0, 100.0, 50.0, 1.0,
        LTB, 0.0, 90.0, np.nan, 1.0,
        0.5, 0.5,
    )
