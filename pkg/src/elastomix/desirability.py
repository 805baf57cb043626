"""Desirability-function multi-objective optimization over the lattice.

Each property gets an NTB / LTB / STB criterion mapping predictions to a
[0, 1] desirability; the weighted geometric mean combines them; the
optimizer exhaustively scans the integer composition lattice and then
polishes a continuous point as advisory output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import AllZeroDesirability, MissingTarget, ValidationError
from .mixture import ComponentBounds, Composition, DEFAULT_BOUNDS, enumerate_lattice
from .models import ScheffeModel, predict, predict_many

KINDS = ("NTB", "LTB", "STB")

#: Desirability normalization ranges per property scale. Transparency is a
#: percentage; hardness saturates at Shore 00 90, past which the durometer
#: scale leaves the soft-elastomer regime.
PROPERTY_SCALES: dict[str, tuple[float, float]] = {
    "transparency": (0.0, 100.0),
    "hardness": (0.0, 90.0),
}


@dataclass(frozen=True)
class Criterion:
    """Per-property desirability spec: kind, target (NTB only), range, exponent."""

    kind: str
    lower: float
    upper: float
    target: float | None = None
    exponent: float = 1.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValidationError(f"criterion kind must be one of {KINDS}, got {self.kind!r}")
        if not self.lower < self.upper:
            raise ValidationError("criterion requires lower < upper")
        if self.exponent <= 0:
            raise ValidationError("criterion exponent must be positive")
        if self.kind == "NTB":
            if self.target is None:
                raise MissingTarget("NTB criterion requires a target")
            if not (self.lower <= self.target <= self.upper):
                raise ValidationError("NTB target must lie within [lower, upper]")

    def _kind_code(self) -> int:
        return KINDS.index(self.kind)

    def _target_value(self) -> float:
        return self.target if self.target is not None else math.nan


@dataclass(frozen=True)
class DesirabilityConfig:
    """Criterion pair plus weights; weights are normalized to sum 1."""

    criterion_1: Criterion
    criterion_2: Criterion
    weights: tuple[float, float] = (0.5, 0.5)

    def __post_init__(self):
        w1, w2 = self.weights
        if w1 < 0 or w2 < 0 or w1 + w2 <= 0:
            raise ValidationError("weights must be non-negative with positive sum")
        object.__setattr__(self, "weights", (w1 / (w1 + w2), w2 / (w1 + w2)))


@dataclass(frozen=True)
class DesignSolution:
    """Best integer design, advisory continuous point, and its scores."""

    composition: Composition
    continuous_point: tuple[float, float, float]
    desirability: float
    predictions: tuple[float, float]


def d_value(criterion: Criterion, y: float) -> float:
    """Scalar desirability of a property value under a criterion."""
    arr = _kernels.desirability_eval(
        np.array([float(y)]),
        criterion._kind_code(),
        criterion.lower,
        criterion.upper,
        criterion._target_value(),
        criterion.exponent,
    )
    return float(arr[0])


def overall_D(d1: float, d2: float, weights: tuple[float, float]) -> float:
    """Weighted geometric mean of two desirabilities; zero annihilates."""
    w1, w2 = weights
    if w1 < 0 or w2 < 0 or w1 + w2 <= 0:
        raise ValidationError("weights must be non-negative with positive sum")
    arr = _kernels.overall_eval(np.array([float(d1)]), np.array([float(d2)]), w1, w2)
    return float(arr[0])


def lattice_scores(
    model_1: ScheffeModel,
    model_2: ScheffeModel,
    config: DesirabilityConfig,
    lattice: list[Composition],
) -> np.ndarray:
    """Overall desirability at every lattice composition, in lattice order."""
    fr = np.array([c.fractions() for c in lattice])
    c1, c2 = config.criterion_1, config.criterion_2
    return _kernels.overall_scan(
        fr,
        model_1.dense_coefficients(),
        model_2.dense_coefficients(),
        c1._kind_code(), c1.lower, c1.upper, c1._target_value(), c1.exponent,
        c2._kind_code(), c2.lower, c2.upper, c2._target_value(), c2.exponent,
        config.weights[0], config.weights[1],
    )


def _score_point(model_1, model_2, config, point) -> float:
    d1 = d_value(config.criterion_1, predict(model_1, point))
    d2 = d_value(config.criterion_2, predict(model_2, point))
    return overall_D(d1, d2, config.weights)


def _polish(model_1, model_2, config, start, bounds) -> tuple[float, float, float]:
    """Coordinate polish on the simplex: shift mass pairwise, shrink the step."""
    lo, hi = bounds.lower, bounds.upper
    point = list(start)
    best = _score_point(model_1, model_2, config, tuple(point))
    step = 0.01
    while step >= 0.0001:
        improved = False
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                trial = list(point)
                trial[i] += step
                trial[j] -= step
                if trial[i] > hi[i] + 1e-12 or trial[j] < lo[j] - 1e-12:
                    continue
                score = _score_point(model_1, model_2, config, tuple(trial))
                if score > best:
                    point, best = trial, score
                    improved = True
        if not improved:
            step /= 2.0
    return tuple(point)


def optimize(
    model_1: ScheffeModel,
    model_2: ScheffeModel,
    config: DesirabilityConfig,
    bounds: ComponentBounds = DEFAULT_BOUNDS,
    step: int = 1,
) -> DesignSolution:
    """Maximize overall desirability over the integer lattice.

    Exhaustive scan (deterministic; ties broken by lattice order) followed
    by a continuous refinement reported as ``continuous_point``. Raises
    AllZeroDesirability with per-criterion diagnostics when no lattice
    point scores above zero.
    """
    lattice = enumerate_lattice(bounds, step=step)
    scores = lattice_scores(model_1, model_2, config, lattice)
    idx = int(np.argmax(scores))
    if scores[idx] <= 0.0:
        raise AllZeroDesirability(_zero_diagnostics(model_1, model_2, config, lattice))
    best = lattice[idx]
    cont = _polish(model_1, model_2, config, best.fractions(), bounds)
    return DesignSolution(
        composition=best,
        continuous_point=cont,
        desirability=float(scores[idx]),
        predictions=(predict(model_1, best), predict(model_2, best)),
    )


def _zero_diagnostics(model_1, model_2, config, lattice) -> dict:
    fr = np.array([c.fractions() for c in lattice])
    out = {}
    for name, model, crit in (
        (model_1.property_name, model_1, config.criterion_1),
        (model_2.property_name, model_2, config.criterion_2),
    ):
        y = predict_many(model, fr)
        d = _kernels.desirability_eval(
            y, crit._kind_code(), crit.lower, crit.upper, crit._target_value(), crit.exponent
        )
        out[name] = (
            f"max d = {float(d.max()):.4f} (predictions span "
            f"[{float(y.min()):.2f}, {float(y.max()):.2f}])"
        )
    return out


# Guideline catalog: criterion-kind pair per guidance row, with the design
# intent it serves. NTB slots require a user target.
GUIDELINES = {
    1: ("NTB", "NTB", "specific transparency and hardness", "targeted customization"),
    2: ("NTB", "LTB", "hardest at a specific transparency", "hardness optimization"),
    3: ("NTB", "STB", "softest at a specific transparency", "hardness optimization"),
    4: ("LTB", "NTB", "clearest at a specific hardness", "transparency optimization"),
    5: ("LTB", "LTB", "clearest and hardest", "ultra-rigid clear elastomer"),
    6: ("LTB", "STB", "clearest and softest", "ultra-soft clear elastomer"),
    7: ("STB", "NTB", "most opaque at a specific hardness", "transparency optimization"),
    8: ("STB", "LTB", "most opaque and hardest", "ultra-rigid opaque elastomer"),
    9: ("STB", "STB", "most opaque and softest", "ultra-soft opaque elastomer"),
}


def scale_criterion(
    property_name: str,
    kind: str,
    target: float | None = None,
    exponent: float = 1.0,
) -> Criterion:
    """Criterion with lower/upper auto-filled from the property scale."""
    if property_name not in PROPERTY_SCALES:
        raise ValidationError(
            f"no scale registered for {property_name!r}; pass explicit bounds"
        )
    lo, hi = PROPERTY_SCALES[property_name]
    return Criterion(kind=kind, lower=lo, upper=hi, target=target, exponent=exponent)


def empirical_criterion(
    model: ScheffeModel,
    kind: str,
    target: float | None = None,
    exponent: float = 1.0,
    bounds: ComponentBounds = DEFAULT_BOUNDS,
) -> Criterion:
    """Criterion bounded by the model's achievable range over the lattice."""
    fr = np.array([c.fractions() for c in enumerate_lattice(bounds)])
    y = predict_many(model, fr)
    return Criterion(
        kind=kind, lower=float(y.min()), upper=float(y.max()), target=target, exponent=exponent
    )


def guideline_config(
    guidance_id: int,
    targets: tuple[float | None, float | None] = (None, None),
    weights: tuple[float, float] = (0.5, 0.5),
    properties: tuple[str, str] = ("transparency", "hardness"),
) -> DesirabilityConfig:
    """Build the criterion pair for a guideline row; NTB slots need targets."""
    if guidance_id not in GUIDELINES:
        raise ValidationError(f"guidance id must be 1..9, got {guidance_id}")
    kind_1, kind_2, _, _ = GUIDELINES[guidance_id]
    crits = []
    for prop, kind, target in zip(properties, (kind_1, kind_2), targets):
        if kind == "NTB" and target is None:
            raise MissingTarget(f"guidance Id-{guidance_id} needs a {prop} target (NTB)")
        crits.append(scale_criterion(prop, kind, target if kind == "NTB" else None))
    return DesirabilityConfig(criterion_1=crits[0], criterion_2=crits[1], weights=weights)
