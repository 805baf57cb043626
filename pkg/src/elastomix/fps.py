"""Feasible property space: the lattice's forward image under both models.

The cloud answers feasibility queries (is a target reachable, what is the
nearest achievable point) and supplies the binned component maps that
show which component governs each property region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mixture import ComponentBounds, Composition, DEFAULT_BOUNDS, enumerate_lattice
from .models import ScheffeModel, predict_many


@dataclass(frozen=True)
class PropertyPoint:
    y1: float
    y2: float
    source: Composition


@dataclass(frozen=True)
class FpsCloud:
    """Immutable lattice image: one property point per composition, lattice order."""

    compositions: tuple[Composition, ...]
    y1: np.ndarray
    y2: np.ndarray

    def __len__(self) -> int:
        return len(self.compositions)

    def point(self, i: int) -> PropertyPoint:
        return PropertyPoint(float(self.y1[i]), float(self.y2[i]), self.compositions[i])

    @property
    def y1_range(self) -> tuple[float, float]:
        return (float(self.y1.min()), float(self.y1.max()))

    @property
    def y2_range(self) -> tuple[float, float]:
        return (float(self.y2.min()), float(self.y2.max()))


@dataclass(frozen=True)
class FeasibilityVerdict:
    feasible: bool
    nearest: PropertyPoint
    distance: float  # range-normalized euclidean distance to the target


@dataclass(frozen=True)
class ComponentMap:
    """Per-cell mean fraction of one component over a (y1, y2) grid."""

    component: int  # 0-based index
    y1_edges: np.ndarray
    y2_edges: np.ndarray
    mean: np.ndarray  # shape (n1, n2); nan marks empty cells
    count: np.ndarray  # shape (n1, n2)

    def is_empty(self, i: int, j: int) -> bool:
        return self.count[i, j] == 0


def build_fps(
    model_1: ScheffeModel,
    model_2: ScheffeModel,
    bounds: ComponentBounds = DEFAULT_BOUNDS,
) -> FpsCloud:
    """Evaluate both models at every lattice composition, in lattice order."""
    lattice = enumerate_lattice(bounds)
    fr = np.array([c.fractions() for c in lattice])
    return FpsCloud(
        compositions=tuple(lattice),
        y1=predict_many(model_1, fr),
        y2=predict_many(model_2, fr),
    )


def feasibility(
    cloud: FpsCloud,
    target: tuple[float, float],
    tolerance: tuple[float, float],
) -> FeasibilityVerdict:
    """Check whether any cloud point falls inside the tolerance box.

    The nearest point (always returned) minimizes the euclidean distance
    with each axis normalized by the cloud's range, so neither property
    dominates; ties break by lattice order.
    """
    t1, t2 = target
    r1 = cloud.y1_range[1] - cloud.y1_range[0] or 1.0
    r2 = cloud.y2_range[1] - cloud.y2_range[0] or 1.0
    dy1 = np.abs(cloud.y1 - t1)
    dy2 = np.abs(cloud.y2 - t2)
    feasible = bool(np.any((dy1 <= tolerance[0]) & (dy2 <= tolerance[1])))
    dist = np.sqrt((dy1 / r1) ** 2 + (dy2 / r2) ** 2)
    idx = int(np.argmin(dist))
    return FeasibilityVerdict(
        feasible=feasible, nearest=cloud.point(idx), distance=float(dist[idx])
    )


def component_map(
    cloud: FpsCloud,
    component_index: int,
    grid: tuple[int, int],
    extent: tuple[tuple[float, float], tuple[float, float]] | None = None,
) -> ComponentMap:
    """Bin the cloud over a (y1, y2) grid; per-cell mean component fraction.

    ``extent`` defaults to the cloud ranges. Points on the upper edge land
    in the last cell. Empty cells carry count 0 and nan mean.
    """
    n1, n2 = grid
    if n1 < 1 or n2 < 1:
        raise ValueError("grid must be at least 1x1")
    if component_index not in (0, 1, 2):
        raise ValueError("component_index must be 0, 1 or 2")
    (lo1, hi1), (lo2, hi2) = extent if extent is not None else (cloud.y1_range, cloud.y2_range)
    e1 = np.linspace(lo1, hi1, n1 + 1)
    e2 = np.linspace(lo2, hi2, n2 + 1)
    i1 = np.clip(np.searchsorted(e1, cloud.y1, side="right") - 1, 0, n1 - 1)
    i2 = np.clip(np.searchsorted(e2, cloud.y2, side="right") - 1, 0, n2 - 1)
    inside = (cloud.y1 >= lo1) & (cloud.y1 <= hi1) & (cloud.y2 >= lo2) & (cloud.y2 <= hi2)
    frac = np.array([c.fractions()[component_index] for c in cloud.compositions])
    mean = np.full((n1, n2), math.nan)
    count = np.zeros((n1, n2), dtype=int)
    total = np.zeros((n1, n2))
    for a, b, f, ok in zip(i1, i2, frac, inside):
        if not ok:
            continue
        count[a, b] += 1
        total[a, b] += f
    nonzero = count > 0
    mean[nonzero] = total[nonzero] / count[nonzero]
    return ComponentMap(
        component=component_index, y1_edges=e1, y2_edges=e2, mean=mean, count=count
    )
