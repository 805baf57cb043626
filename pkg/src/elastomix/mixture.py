"""Bounded 3-component composition simplex.

Compositions are integer percents (the printable unit); the module
validates points, enumerates the feasible integer lattice in a fixed
deterministic order, holds the standard sampling plan, and maps
compositions to 2-D ternary-diagram coordinates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BoundViolation, EmptySpace, SumViolation, ValidationError

COMPONENT_NAMES = ("x1", "x2", "x3")

#: Ternary-diagram corners for components 1..3 (unit equilateral triangle).
_TRIANGLE = ((0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3.0) / 2.0))


@dataclass(frozen=True)
class ComponentBounds:
    """Per-component fraction bounds restricting the simplex."""

    lower: tuple[float, float, float] = (0.0, 0.0, 0.0)
    upper: tuple[float, float, float] = (1.0, 0.8, 0.6)

    def __post_init__(self):
        for i in range(3):
            lo, hi = self.lower[i], self.upper[i]
            if not (0.0 <= lo <= hi <= 1.0):
                raise ValidationError(
                    f"bounds for {COMPONENT_NAMES[i]} must satisfy 0 <= lower <= upper <= 1, "
                    f"got [{lo}, {hi}]"
                )
        if sum(self.lower) > 1.0 or sum(self.upper) < 1.0:
            raise ValidationError("bounds leave no feasible point on the simplex")

    def lower_pct(self) -> tuple[int, int, int]:
        return tuple(math.ceil(round(v * 100, 9)) for v in self.lower)

    def upper_pct(self) -> tuple[int, int, int]:
        return tuple(math.floor(round(v * 100, 9)) for v in self.upper)


DEFAULT_BOUNDS = ComponentBounds()


@dataclass(frozen=True, order=True)
class Composition:
    """Integer-percent point on the simplex; construct via validate_composition."""

    x1: int
    x2: int
    x3: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x1, self.x2, self.x3)

    def fractions(self) -> tuple[float, float, float]:
        return (self.x1 / 100.0, self.x2 / 100.0, self.x3 / 100.0)

    def __str__(self) -> str:
        return f"({self.x1},{self.x2},{self.x3})"


@dataclass(frozen=True)
class PlanEntry:
    label: str
    composition: Composition


@dataclass(frozen=True)
class PlanExclusion:
    label: str
    point: tuple[int, int, int]
    reason: str  # "forbidden" (violates bounds) or "special"
    note: str


@dataclass(frozen=True)
class SamplePlan:
    """Labeled sampling plan plus the points excluded from it."""

    entries: tuple[PlanEntry, ...]
    exclusions: tuple[PlanExclusion, ...]

    def __post_init__(self):
        labels = [e.label for e in self.entries] + [e.label for e in self.exclusions]
        if len(labels) != len(set(labels)):
            raise ValidationError("sample plan labels must be unique")

    def labels(self) -> tuple[str, ...]:
        return tuple(e.label for e in self.entries)

    def composition(self, label: str) -> Composition:
        for e in self.entries:
            if e.label == label:
                return e.composition
        raise KeyError(label)

    def is_excluded(self, label: str) -> PlanExclusion | None:
        for e in self.exclusions:
            if e.label == label:
                return e
        return None


def validate_composition(x, bounds: ComponentBounds = DEFAULT_BOUNDS) -> Composition:
    """Validate a raw (x1, x2, x3) integer-percent triple against the bounds.

    Raises SumViolation when the triple does not add to 100, BoundViolation
    naming the offending component otherwise.
    """
    xi = tuple(int(v) for v in x)
    if len(xi) != 3:
        raise ValidationError(f"expected 3 components, got {len(xi)}")
    total = sum(xi)
    if total != 100:
        raise SumViolation(total)
    lo, hi = bounds.lower_pct(), bounds.upper_pct()
    for i in range(3):
        if xi[i] < lo[i]:
            raise BoundViolation(COMPONENT_NAMES[i], xi[i], lo[i], "lower")
        if xi[i] > hi[i]:
            raise BoundViolation(COMPONENT_NAMES[i], xi[i], hi[i], "upper")
    return Composition(*xi)


def lattice_size(bounds: ComponentBounds = DEFAULT_BOUNDS, step: int = 1) -> int:
    """Closed-form lattice count by inclusion-exclusion over the upper bounds.

    Counts integer triples on the step-grid summing to 100 within the
    bounds. Shift by the lower bounds, then subtract the triples that
    overrun each subset of upper bounds (stars and bars).
    """
    lo, hi = bounds.lower_pct(), bounds.upper_pct()
    lo = tuple(_ceil_div(v, step) for v in lo)
    hi = tuple(v // step for v in hi)
    total = 100 // step
    if 100 % step != 0:
        return 0
    rest = total - sum(lo)
    if rest < 0:
        return 0
    caps = [hi[i] - lo[i] for i in range(3)]
    count = 0
    for mask in range(8):
        shift = rest
        sign = 1
        for i in range(3):
            if mask >> i & 1:
                shift -= caps[i] + 1
                sign = -sign
        if shift >= 0:
            count += sign * math.comb(shift + 2, 2)
    return count


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def enumerate_lattice(bounds: ComponentBounds = DEFAULT_BOUNDS, step: int = 1) -> list[Composition]:
    """All feasible integer compositions, ordered x1 descending then x2 descending.

    The order is the tie-breaking convention for every argmax in the
    toolkit; (100, 0, 0) is first under the default bounds.
    """
    lo, hi = bounds.lower_pct(), bounds.upper_pct()
    out = []
    for x1 in range(hi[0] - hi[0] % step, lo[0] - 1, -step):
        x2_hi = min(hi[1], 100 - x1 - lo[2])
        x2_lo = max(lo[1], 100 - x1 - hi[2])
        x2_hi -= x2_hi % step
        for x2 in range(x2_hi, x2_lo - 1, -step):
            x3 = 100 - x1 - x2
            if x3 % step or not (lo[2] <= x3 <= hi[2]):
                continue
            out.append(Composition(x1, x2, x3))
    if not out:
        raise EmptySpace("no integer composition satisfies the bounds")
    return out


# Standard sampling plan: edge sweeps of each binary system at 20 % steps
# plus centroid and the three axial ternary blends. Points that violate
# the default bounds are excluded as forbidden; pure component 3 is kept
# out of the plan for optical-only characterization.
_PLAN_POINTS = [
    ("a1", (100, 0, 0)),
    ("a2", (80, 20, 0)),
    ("a3", (60, 40, 0)),
    ("a4", (40, 60, 0)),
    ("a5", (20, 80, 0)),
    ("t2", (0, 80, 20)),
    ("t3", (0, 60, 40)),
    ("t4", (0, 40, 60)),
    ("g3", (40, 0, 60)),
    ("g4", (60, 0, 40)),
    ("g5", (80, 0, 20)),
    ("c1", (33, 33, 34)),
    ("c2", (50, 25, 25)),
    ("c3", (25, 50, 25)),
    ("c4", (25, 25, 50)),
]

_PLAN_EXCLUSIONS = [
    PlanExclusion("t1", (0, 100, 0), "forbidden", "x2 exceeds its 80% upper bound"),
    PlanExclusion("t5", (0, 20, 80), "forbidden", "x3 exceeds its 60% upper bound"),
    PlanExclusion("g2", (20, 0, 80), "forbidden", "x3 exceeds its 60% upper bound"),
    PlanExclusion(
        "g1", (0, 0, 100), "special",
        "pure component 3 is kept for optical-only testing; too fluid for mechanical use",
    ),
]


def paper_sample_plan() -> SamplePlan:
    """The 15-mixture sampling plan with its four exclusion records."""
    entries = tuple(
        PlanEntry(label, validate_composition(pt)) for label, pt in _PLAN_POINTS
    )
    return SamplePlan(entries=entries, exclusions=tuple(_PLAN_EXCLUSIONS))


def ternary_xy(x) -> tuple[float, float]:
    """Barycentric-to-Cartesian map onto the unit equilateral triangle.

    Accepts a Composition or any fraction triple summing to 1; the map is
    affine, so convex combinations of compositions map to the same convex
    combinations of points.
    """
    if isinstance(x, Composition):
        f = x.fractions()
    else:
        f = tuple(float(v) for v in x)
        if abs(sum(f) - 1.0) > 1e-9:
            raise ValidationError(f"fractions must sum to 1, got {sum(f)}")
    px = sum(f[i] * _TRIANGLE[i][0] for i in range(3))
    py = sum(f[i] * _TRIANGLE[i][1] for i in range(3))
    return (px, py)
