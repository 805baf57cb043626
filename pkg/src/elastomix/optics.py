"""Spectrometer transmission data -> scalar transparency metrics.

Transmission curves are reduced to a single transmission value at a
reference wavelength, corrected by the pure-air bias reading, and folded
into Beer-Lambert absorbance / opacity-density-per-mm scalars.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import OutOfRange, ValidationError, ZeroTransmission

#: Default reference wavelength (nm): peak transmission inside the visible band.
REFERENCE_WAVELENGTH_NM = 700.0
#: Default specimen thickness (mm) used for fitting-grade measurements.
REFERENCE_THICKNESS_MM = 3.0
#: Transmission below this is treated as instrument noise and clamped before logs.
NOISE_FLOOR = 1e-6


@dataclass(frozen=True)
class TransmissionSpectrum:
    """One sample's transmission curve: ordered (wavelength_nm, fraction) points."""

    sample_label: str
    thickness_mm: float
    points: tuple[tuple[float, float], ...]

    def __post_init__(self):
        if self.thickness_mm <= 0:
            raise ValidationError("thickness must be positive")
        if len(self.points) < 1:
            raise ValidationError("spectrum needs at least one point")
        prev = None
        for wl, t in self.points:
            if prev is not None and wl <= prev:
                raise ValidationError("wavelengths must be strictly increasing")
            if not (0.0 <= t <= 1.0):
                raise ValidationError(f"transmission {t} at {wl} nm outside [0, 1]")
            prev = wl

    @property
    def wavelength_range(self) -> tuple[float, float]:
        return (self.points[0][0], self.points[-1][0])


@dataclass(frozen=True)
class OpticalSummary:
    """Scalar transparency metrics for one sample at one thickness."""

    sample_label: str
    t_mix: float
    t_unbiased: float
    absorbance: float
    opacity_density: float


def transmission_at(spectrum: TransmissionSpectrum, wavelength: float) -> float:
    """Transmission at a wavelength by linear interpolation; exact at sample points."""
    lo, hi = spectrum.wavelength_range
    if not (lo <= wavelength <= hi):
        raise OutOfRange(f"{wavelength} nm outside spectrum range [{lo}, {hi}]")
    pts = spectrum.points
    for i in range(len(pts) - 1):
        w0, t0 = pts[i]
        w1, t1 = pts[i + 1]
        if w0 <= wavelength <= w1:
            if wavelength == w0:
                return t0
            if wavelength == w1:
                return t1
            frac = (wavelength - w0) / (w1 - w0)
            return t0 + frac * (t1 - t0)
    return pts[-1][1]


def unbiased_transparency(t_mix: float, t_bias: float) -> float:
    """Bias-corrected transmission: clamp(t_mix + (1 - t_bias), 0, 1)."""
    if not (0.0 <= t_mix <= 1.0 and 0.0 <= t_bias <= 1.0):
        raise ValidationError("transmissions must lie in [0, 1]")
    return min(1.0, max(0.0, t_mix + (1.0 - t_bias)))


def absorbance(t_mix: float, t_bias: float = 1.0) -> float:
    """Beer-Lambert absorbance of the bias-corrected transmission."""
    u = t_mix + (1.0 - t_bias)
    if u <= 0.0:
        raise ZeroTransmission("unbiased transparency <= 0: absorbance unbounded")
    u = min(1.0, max(NOISE_FLOOR, u))
    return -math.log10(u)


def opacity_density(t_mix: float, t_bias: float, thickness_mm: float) -> float:
    """Absorbance per unit thickness (1/mm); non-negative.

    The sign makes the density positive for partially transmitting
    samples, matching the absorbance definition.
    """
    if thickness_mm <= 0:
        raise ValidationError("thickness must be positive")
    return absorbance(t_mix, t_bias) / thickness_mm


def summarize(
    spectrum: TransmissionSpectrum,
    bias: TransmissionSpectrum | float,
    wavelength: float = REFERENCE_WAVELENGTH_NM,
) -> OpticalSummary:
    """Reduce a spectrum to its scalar metrics at the reference wavelength.

    ``bias`` is the pure-air spectrum (sampled at the same wavelength) or
    an already-sampled bias transmission value.
    """
    t_mix = transmission_at(spectrum, wavelength)
    t_bias = bias if isinstance(bias, float) else transmission_at(bias, wavelength)
    t_unb = unbiased_transparency(t_mix, t_bias)
    a = absorbance(t_mix, t_bias)
    return OpticalSummary(
        sample_label=spectrum.sample_label,
        t_mix=t_mix,
        t_unbiased=t_unb,
        absorbance=a,
        opacity_density=a / spectrum.thickness_mm,
    )
