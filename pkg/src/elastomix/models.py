"""Scheffé mixture polynomials: OLS fitting, diagnostics, ANOVA pruning.

Models are no-intercept polynomials over component fractions with linear,
pairwise and ternary terms. Fit metrics follow the no-intercept
conventions: rmse = sqrt(SSE/(n-k)), uncentered R^2 = 1 - SSE/sum(y^2),
adj R^2 = 1 - (1-R^2) n/(n-k), AIC = 2k + n(ln(2 pi SSE/n)+1),
BIC = k ln(n) + n(ln(2 pi SSE/n)+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.stats import f as f_dist

from . import _kernels
from .errors import RankDeficient, Underdetermined, ValidationError
from .mixture import Composition

TERM_NAMES = ("x1", "x2", "x3", "x1x2", "x1x3", "x2x3", "x1x2x3")

FULL_CUBIC = (True,) * 7
LINEAR_ONLY = (True, True, True, False, False, False, False)


@dataclass(frozen=True)
class TermSet:
    """Ordered activity flags over the seven canonical terms."""

    flags: tuple[bool, ...] = FULL_CUBIC

    def __post_init__(self):
        if len(self.flags) != 7:
            raise ValidationError("term set needs exactly 7 flags")
        if not any(self.flags[:3]):
            raise ValidationError("at least one linear term must be active")

    @classmethod
    def from_names(cls, names) -> "TermSet":
        unknown = set(names) - set(TERM_NAMES)
        if unknown:
            raise ValidationError(f"unknown terms: {sorted(unknown)}")
        return cls(tuple(t in set(names) for t in TERM_NAMES))

    def names(self) -> tuple[str, ...]:
        return tuple(t for t, on in zip(TERM_NAMES, self.flags) if on)

    def count(self) -> int:
        return sum(self.flags)

    def without(self, name: str) -> "TermSet":
        return TermSet(tuple(on and t != name for t, on in zip(TERM_NAMES, self.flags)))


@dataclass(frozen=True)
class FitReport:
    n: int
    k: int
    sse: float
    rmse: float
    r2: float
    adj_r2: float
    aic: float
    bic: float


@dataclass(frozen=True)
class AnovaReport:
    """Partial-F statistic and p-value per active term."""

    terms: dict[str, tuple[float, float]]

    def f_value(self, term: str) -> float:
        return self.terms[term][0]

    def p_value(self, term: str) -> float:
        return self.terms[term][1]


@dataclass(frozen=True)
class PropertyDataset:
    """Training rows of (composition, response) for one property."""

    property_name: str
    units: str
    rows: tuple[tuple[Composition, float], ...]

    def compositions(self) -> list[Composition]:
        return [c for c, _ in self.rows]

    def values(self) -> np.ndarray:
        return np.array([v for _, v in self.rows], dtype=float)

    def __len__(self) -> int:
        return len(self.rows)


@dataclass(frozen=True)
class ScheffeModel:
    """Coefficient set over the active mixture terms for one property.

    fit_stats is absent for hand-entered coefficient sets.
    """

    property_name: str
    units: str
    terms: TermSet
    coefficients: tuple[float, ...]
    fit_stats: FitReport | None = None
    provenance: str = ""

    def __post_init__(self):
        if len(self.coefficients) != self.terms.count():
            raise ValidationError(
                f"{len(self.coefficients)} coefficients for {self.terms.count()} active terms"
            )

    def coefficient(self, term: str) -> float:
        names = self.terms.names()
        if term not in names:
            raise KeyError(term)
        return self.coefficients[names.index(term)]

    def dense_coefficients(self) -> np.ndarray:
        """7-vector in canonical term order, zeros for inactive terms."""
        dense = np.zeros(7)
        idx = 0
        for i, on in enumerate(self.terms.flags):
            if on:
                dense[i] = self.coefficients[idx]
                idx += 1
        return dense


def _as_fractions(x) -> tuple[float, float, float]:
    if isinstance(x, Composition):
        return x.fractions()
    f = tuple(float(v) for v in x)
    if len(f) != 3:
        raise ValidationError("expected a 3-component point")
    if abs(sum(f) - 1.0) > 1e-9:
        raise ValidationError(f"fractions must sum to 1, got {sum(f)!r}")
    return f


def design_matrix(compositions, terms: TermSet = TermSet()) -> np.ndarray:
    """Rows of active-term values; components encoded as fractions in [0, 1]."""
    fr = np.array([_as_fractions(c) for c in compositions], dtype=float)
    a, b, c = fr[:, 0], fr[:, 1], fr[:, 2]
    cols = {
        "x1": a, "x2": b, "x3": c,
        "x1x2": a * b, "x1x3": a * c, "x2x3": b * c,
        "x1x2x3": a * b * c,
    }
    return np.column_stack([cols[t] for t in terms.names()])


def fit_ols(data: PropertyDataset, terms: TermSet = TermSet()) -> ScheffeModel:
    """Ordinary least squares fit of the active terms; raises on rank problems."""
    X = design_matrix(data.compositions(), terms)
    y = data.values()
    n, k = X.shape
    if n <= k:
        raise Underdetermined(f"{n} rows cannot identify {k} terms")
    if np.linalg.matrix_rank(X) < k:
        names = terms.names()
        culprits = [
            names[j]
            for j in range(k)
            if np.linalg.matrix_rank(np.delete(X, j, axis=1)) == np.linalg.matrix_rank(X)
        ]
        raise RankDeficient(culprits or list(names))
    beta, _, _, _ = np.linalg.lstsq(X, y, rcond=None)
    resid = y - X @ beta
    sse = float(resid @ resid)
    stats = FitReport(
        n=n,
        k=k,
        sse=sse,
        rmse=math.sqrt(sse / (n - k)),
        r2=1.0 - sse / float(y @ y),
        adj_r2=1.0 - (sse / float(y @ y)) * n / (n - k),
        aic=2 * k + n * (math.log(2 * math.pi * sse / n) + 1),
        bic=k * math.log(n) + n * (math.log(2 * math.pi * sse / n) + 1),
    )
    return ScheffeModel(
        property_name=data.property_name,
        units=data.units,
        terms=terms,
        coefficients=tuple(float(b) for b in beta),
        fit_stats=stats,
        provenance=f"ols fit on dataset {data.property_name!r} ({n} rows)",
    )


def predict(model: ScheffeModel, x) -> float:
    """Evaluate the polynomial at a composition or fraction triple."""
    fr = np.array([_as_fractions(x)])
    return float(_kernels.scheffe_eval(fr, model.dense_coefficients())[0])


def predict_many(model: ScheffeModel, fractions: np.ndarray) -> np.ndarray:
    """Vectorized predict over an (N, 3) fraction array."""
    fr = np.ascontiguousarray(fractions, dtype=float)
    return _kernels.scheffe_eval(fr, model.dense_coefficients())


def predict_gradient(model: ScheffeModel, x) -> tuple[float, float, float]:
    """Analytic gradient of the polynomial w.r.t. the three fractions."""
    a, b, c = _as_fractions(x)
    d = model.dense_coefficients()
    return (
        d[0] + d[3] * b + d[4] * c + d[6] * b * c,
        d[1] + d[3] * a + d[5] * c + d[6] * a * c,
        d[2] + d[4] * a + d[5] * b + d[6] * a * b,
    )


def anova_partial_f(data: PropertyDataset, model: ScheffeModel) -> AnovaReport:
    """Partial F test per active term: drop the term, refit, compare SSE.

    F_j = (SSE_without_j - SSE_full) / (SSE_full / (n - k)); p_j from the
    upper tail of F(1, n - k).
    """
    if model.fit_stats is None:
        raise ValidationError("model carries no fit; fit it on the dataset first")
    full = model.fit_stats
    dof = full.n - full.k
    out: dict[str, tuple[float, float]] = {}
    for term in model.terms.names():
        reduced = fit_ols(data, model.terms.without(term))
        f_stat = (reduced.fit_stats.sse - full.sse) / (full.sse / dof)
        f_stat = max(f_stat, 0.0)
        out[term] = (f_stat, float(f_dist.sf(f_stat, 1, dof)))
    return AnovaReport(terms=out)


def prune_terms(
    data: PropertyDataset,
    start: TermSet = TermSet(),
    p_threshold: float = 0.45,
    keep: tuple[str, ...] = (),
) -> ScheffeModel:
    """Backward elimination: repeatedly drop the highest-p term above threshold.

    Terms listed in ``keep`` are never dropped. Returns the final refitted
    model (the starting fit when nothing exceeds the threshold).
    """
    model = fit_ols(data, start)
    while True:
        report = anova_partial_f(data, model)
        candidates = sorted(
            (
                (p, term)
                for term, (_, p) in report.terms.items()
                if term not in keep and p > p_threshold
            ),
            reverse=True,
        )
        dropped = False
        for _, term in candidates:
            try:
                model = fit_ols(data, model.terms.without(term))
            except ValidationError:
                continue  # dropping would leave no linear term
            dropped = True
            break
        if not dropped:
            return model


# Published pruned-model coefficients, shipped as the default models.
PAPER_TRANSPARENCY = ScheffeModel(
    property_name="transparency",
    units="percent",
    terms=TermSet.from_names(("x1", "x2", "x3", "x1x3", "x2x3")),
    coefficients=(85.1, 78.8, 124.2, -399.1, -281.6),
    fit_stats=None,
    provenance="published coefficients (hand-entered)",
)

PAPER_HARDNESS = ScheffeModel(
    property_name="hardness",
    units="shore00",
    terms=TermSet.from_names(("x1", "x2", "x3", "x1x2", "x1x3", "x2x3")),
    coefficients=(82.5, 26.2, -13.7, 31.6, 81.0, 65.1),
    fit_stats=None,
    provenance="published coefficients (hand-entered)",
)
