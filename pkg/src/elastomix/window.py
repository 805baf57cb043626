"""Operating windows: near-optimal integer designs around a solution.

The design window keeps compositions within a per-component percent
tolerance of the optimum; the property window keeps compositions whose
overall desirability stays within a relative margin of the optimum (an
alternate mode cuts on per-property prediction drift instead). Their
intersection, ranked by desirability, is the fabrication-ready window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .desirability import DesirabilityConfig, DesignSolution, lattice_scores, optimize
from .errors import EmptyWindow, ValidationError
from .mixture import ComponentBounds, Composition, DEFAULT_BOUNDS, enumerate_lattice
from .models import ScheffeModel, predict

RANK_LABELS = ("I1", "I2", "I3")


@dataclass(frozen=True)
class WindowSpec:
    """Tolerances: delta_x percent per component, delta_y percent desirability."""

    delta_x: float = 3.0
    delta_y: float = 3.0
    property_cut: bool = False  # alternate mode: cut on prediction drift, not D

    def __post_init__(self):
        if self.delta_x < 0 or self.delta_y < 0:
            raise ValidationError("window tolerances must be non-negative")


@dataclass(frozen=True)
class WindowMember:
    rank: int  # 1-based, ordered by desirability descending
    composition: Composition
    desirability: float
    predictions: tuple[float, float]

    @property
    def label(self) -> str:
        return RANK_LABELS[self.rank - 1] if self.rank <= 3 else f"I{self.rank}"


@dataclass(frozen=True)
class OperatingWindow:
    anchor: DesignSolution
    members: tuple[WindowMember, ...]

    def top(self, n: int = 3) -> tuple[WindowMember, ...]:
        return self.members[:n]

    def compositions(self) -> list[Composition]:
        return [m.composition for m in self.members]


def design_window(
    anchor: DesignSolution,
    delta_x: float,
    bounds: ComponentBounds = DEFAULT_BOUNDS,
) -> list[Composition]:
    """Lattice compositions within +/- delta_x percent of the anchor, per component.

    The window is centered on the anchor's integer composition (the best
    printable design), which keeps the anchor a member by construction.
    """
    center = anchor.composition.as_tuple()
    out = []
    for comp in enumerate_lattice(bounds):
        pt = comp.as_tuple()
        if all(abs(pt[i] - center[i]) <= delta_x for i in range(3)):
            out.append(comp)
    return out


def property_window(
    model_1: ScheffeModel,
    model_2: ScheffeModel,
    config: DesirabilityConfig,
    anchor: DesignSolution,
    delta_y: float,
    bounds: ComponentBounds = DEFAULT_BOUNDS,
    property_cut: bool = False,
) -> list[Composition]:
    """Lattice compositions whose score stays within the delta_y margin.

    Default cut: D(x) >= D(anchor) * (1 - delta_y/100). Alternate
    property cut: both predictions within delta_y percent of the anchor's.
    """
    lattice = enumerate_lattice(bounds)
    if property_cut:
        ref_1, ref_2 = anchor.predictions
        out = []
        for comp in lattice:
            p1, p2 = predict(model_1, comp), predict(model_2, comp)
            if (
                abs(p1 - ref_1) <= abs(ref_1) * delta_y / 100.0
                and abs(p2 - ref_2) <= abs(ref_2) * delta_y / 100.0
            ):
                out.append(comp)
        return out
    scores = lattice_scores(model_1, model_2, config, lattice)
    cutoff = anchor.desirability * (1.0 - delta_y / 100.0)
    return [comp for comp, s in zip(lattice, scores) if s >= cutoff]


def optimal_window(
    model_1: ScheffeModel,
    model_2: ScheffeModel,
    config: DesirabilityConfig,
    spec: WindowSpec = WindowSpec(),
    bounds: ComponentBounds = DEFAULT_BOUNDS,
    anchor: DesignSolution | None = None,
) -> OperatingWindow:
    """Design-window / property-window intersection, ranked by desirability."""
    if anchor is None:
        anchor = optimize(model_1, model_2, config, bounds)
    in_design = set(design_window(anchor, spec.delta_x, bounds))
    in_property = property_window(
        model_1, model_2, config, anchor, spec.delta_y, bounds, spec.property_cut
    )
    lattice = enumerate_lattice(bounds)
    order = {comp: i for i, comp in enumerate(lattice)}
    both = [comp for comp in in_property if comp in in_design]
    if not both:
        detail = (
            f"design window has {len(in_design)} members, "
            f"property window has {len(in_property)}; "
            + (
                "the design window is the binding constraint"
                if len(in_design) < len(in_property)
                else "the property window is the binding constraint"
            )
        )
        raise EmptyWindow(f"window intersection is empty; {detail}")
    scores = lattice_scores(model_1, model_2, config, lattice)
    scored = sorted(
        ((float(scores[order[comp]]), comp) for comp in both),
        key=lambda t: (-t[0], order[t[1]]),
    )
    members = tuple(
        WindowMember(
            rank=i + 1,
            composition=comp,
            desirability=score,
            predictions=(predict(model_1, comp), predict(model_2, comp)),
        )
        for i, (score, comp) in enumerate(scored)
    )
    return OperatingWindow(anchor=anchor, members=members)
