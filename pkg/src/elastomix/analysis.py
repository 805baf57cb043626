"""Post-hoc validation: inverse-design error accounting, cross-property
correlations, and the scalar mechanics/optics formulas used in reporting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadElement,
    DegenerateX,
    MismatchedSpan,
    NonPositiveDenominator,
    OutOfRange,
    ValidationError,
)


@dataclass(frozen=True)
class ErrorRecord:
    """Target vs prediction (error 1) and prediction vs measurement (error 2).

    Absolute errors keep their sign; percent errors are magnitudes
    relative to the target (error 1) and to the prediction (error 2).
    """

    property_name: str
    target: float
    predicted: float
    measured: float
    error1_abs: float
    error1_pct: float
    error2_abs: float
    error2_pct: float


@dataclass(frozen=True)
class StressStrainCurve:
    """Ordered (strain fraction, stress kPa) pairs for one test leg."""

    points: tuple[tuple[float, float], ...]
    mode: str = "tension"  # or "compression"

    def __post_init__(self):
        if self.mode not in ("tension", "compression"):
            raise ValidationError("mode must be 'tension' or 'compression'")
        if len(self.points) < 2:
            raise ValidationError("curve needs at least two points")
        prev = None
        for strain, stress in self.points:
            if prev is not None and strain < prev:
                raise ValidationError("strain must be non-decreasing within a leg")
            if not math.isfinite(stress):
                raise ValidationError("stress must be finite")
            prev = strain

    @property
    def strain_range(self) -> tuple[float, float]:
        return (self.points[0][0], self.points[-1][0])


def error_report(target: float, predicted: float, measured: float, property_name: str = "") -> ErrorRecord:
    """Error record for one property of one design; values must be positive."""
    if target <= 0 or predicted <= 0:
        raise NonPositiveDenominator("target and prediction must be positive")
    e1 = target - predicted
    e2 = predicted - measured
    return ErrorRecord(
        property_name=property_name,
        target=target,
        predicted=predicted,
        measured=measured,
        error1_abs=e1,
        error1_pct=abs(e1) / target,
        error2_abs=e2,
        error2_pct=abs(e2) / predicted,
    )


def aggregate_errors(groups: dict[str, list[ErrorRecord]]) -> dict:
    """Accumulate error magnitudes per design rank and average per error kind.

    ``groups`` maps a rank label (I1/I2/I3) to its records. Returns
    ``accumulated[rank][property] = {error1: sum|e1|, error2: sum|e2|}``
    and ``mean_pct[property] = {error1: mean, error2: mean}``.
    """
    if not groups or any(not records for records in groups.values()):
        raise ValidationError("every rank group needs at least one record")
    accumulated: dict[str, dict[str, dict[str, float]]] = {}
    for rank, records in groups.items():
        per_prop: dict[str, dict[str, float]] = {}
        for rec in records:
            slot = per_prop.setdefault(rec.property_name, {"error1": 0.0, "error2": 0.0})
            slot["error1"] += abs(rec.error1_abs)
            slot["error2"] += abs(rec.error2_abs)
        accumulated[rank] = per_prop
    mean_pct: dict[str, dict[str, float]] = {}
    all_records = [rec for records in groups.values() for rec in records]
    for prop in sorted({rec.property_name for rec in all_records}):
        sub = [rec for rec in all_records if rec.property_name == prop]
        mean_pct[prop] = {
            "error1": sum(r.error1_pct for r in sub) / len(sub),
            "error2": sum(r.error2_pct for r in sub) / len(sub),
        }
    return {"accumulated": accumulated, "mean_pct": mean_pct}


def linear_fit(x, y) -> tuple[float, float, float]:
    """Least-squares line; returns (slope, intercept, centered r2)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.shape != y.shape or x.size < 2 or np.unique(x).size < 2:
        raise DegenerateX("need at least two distinct x values")
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_res = float(resid @ resid)
    centered = y - y.mean()
    ss_tot = float(centered @ centered)
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return (float(slope), float(intercept), r2)


def usaf_resolution(group: int, element: int) -> float:
    """Resolution (line pairs per mm) of a chart group/element, to 2 decimals."""
    if not (1 <= element <= 6):
        raise BadElement(f"element must be 1..6, got {element}")
    return round(2.0 ** (group + (element - 1) / 6.0), 2)


def stress_at(curve: StressStrainCurve, strain: float) -> float:
    """Stress at a strain by linear interpolation along the leg."""
    lo, hi = curve.strain_range
    if not (lo <= strain <= hi):
        raise OutOfRange(f"strain {strain} outside curve range [{lo}, {hi}]")
    pts = curve.points
    for i in range(len(pts) - 1):
        s0, v0 = pts[i]
        s1, v1 = pts[i + 1]
        if s0 <= strain <= s1:
            if s1 == s0:
                return v1
            frac = (strain - s0) / (s1 - s0)
            return v0 + frac * (v1 - v0)
    return pts[-1][1]


def curve_scalars(
    curve: StressStrainCurve, reference_strain: float, secant: bool = True
) -> float:
    """Modulus estimate from the stress at a reference strain.

    Default (secant) divides by the reference strain, so a linear curve
    sigma = E * eps reports E at any reference. With ``secant=False`` the
    raw stress at the reference strain is returned instead.
    """
    if reference_strain <= 0:
        raise ValidationError("reference strain must be positive")
    sigma = stress_at(curve, reference_strain)
    return sigma / reference_strain if secant else sigma


def hysteresis(loading: StressStrainCurve, unloading: StressStrainCurve) -> float:
    """Normalized loop area: (area under loading - area under unloading) / loading.

    Both legs must span the same strain interval; areas use the trapezoid
    rule on the given points, no smoothing.
    """
    la, lb = loading.strain_range
    ua, ub = unloading.strain_range
    if not (math.isclose(la, ua, rel_tol=1e-9, abs_tol=1e-12)
            and math.isclose(lb, ub, rel_tol=1e-9, abs_tol=1e-12)):
        raise MismatchedSpan(
            f"loading spans [{la}, {lb}] but unloading spans [{ua}, {ub}]"
        )
    a_load = _trapezoid(loading)
    a_unload = _trapezoid(unloading)
    if a_load <= 0:
        raise ValidationError("loading leg encloses no area")
    return (a_load - a_unload) / a_load


_trapz = getattr(np, "trapezoid", None) or np.trapz


def _trapezoid(curve: StressStrainCurve) -> float:
    s = np.array([p[0] for p in curve.points])
    v = np.array([p[1] for p in curve.points])
    return float(_trapz(v, s))


def poisson_ratio(axial_strains, transverse_strains) -> float:
    """Negative slope of the transverse-vs-axial strain least-squares line."""
    slope, _, _ = linear_fit(axial_strains, transverse_strains)
    return -slope
