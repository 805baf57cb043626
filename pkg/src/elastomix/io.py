"""Persistence and ingestion: canonical JSON records, delimited-text data
files, and the project container binding datasets, models and configs.

All writers are deterministic (fixed key order, 17-significant-digit
floats, no timestamps), so save -> load -> save round-trips are
byte-identical and identical inputs always produce identical artifacts.
"""

from __future__ import annotations

import csv
import hashlib
import io as _stdio
import json
import math
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from . import __version__
from .desirability import Criterion, DesirabilityConfig
from .errors import MissingBiasColumn, ParseError, UnknownLabel, ValidationError
from .mixture import ComponentBounds, SamplePlan, paper_sample_plan
from .models import (
    FitReport,
    PropertyDataset,
    ScheffeModel,
    TERM_NAMES,
    TermSet,
)
from .optics import (
    REFERENCE_THICKNESS_MM,
    REFERENCE_WAVELENGTH_NM,
    TransmissionSpectrum,
    summarize,
)
from .window import OperatingWindow

TOOL = f"elastomix {__version__}"


# ---------------------------------------------------------------------------
# canonical JSON


def _fmt(value):
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return json.dumps(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValidationError(f"cannot serialize non-finite float {value}")
        text = format(value, ".17g")
        # keep a float marker so round-trips preserve the type
        if "." not in text and "e" not in text and "E" not in text:
            text += ".0"
        return text
    raise TypeError(f"unsupported scalar {type(value)}")


def canonical_dumps(obj, indent: int = 0) -> str:
    """Deterministic JSON: insertion-ordered keys, .17g floats, 2-space indent."""
    pad = "  " * indent
    inner = "  " * (indent + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [
            f"{inner}{json.dumps(str(k))}: {canonical_dumps(v, indent + 1)}"
            for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(parts) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        parts = [f"{inner}{canonical_dumps(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(parts) + f"\n{pad}]"
    return _fmt(obj)


def canonical_text(obj) -> str:
    return canonical_dumps(obj) + "\n"


def digest_text(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()[:12]


def digest_file(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()[:12]


# ---------------------------------------------------------------------------
# model / dataset / config records


def model_to_record(model: ScheffeModel) -> dict:
    record = {
        "format": "elastomix.model/1",
        "name": model.property_name,
        "units": model.units,
        "terms": {t: bool(on) for t, on in zip(TERM_NAMES, model.terms.flags)},
        "coefficients": {
            t: float(c) for t, c in zip(model.terms.names(), model.coefficients)
        },
        "fit": None,
        "provenance": model.provenance,
    }
    if model.fit_stats is not None:
        s = model.fit_stats
        record["fit"] = {
            "n": s.n, "k": s.k, "sse": s.sse, "rmse": s.rmse,
            "r2": s.r2, "adj_r2": s.adj_r2, "aic": s.aic, "bic": s.bic,
        }
    return record


def model_from_record(record: dict) -> ScheffeModel:
    if record.get("format") != "elastomix.model/1":
        raise ValidationError(f"not a model record: format={record.get('format')!r}")
    terms = TermSet(tuple(bool(record["terms"][t]) for t in TERM_NAMES))
    coeffs = tuple(float(record["coefficients"][t]) for t in terms.names())
    fit = None
    if record.get("fit"):
        fit = FitReport(**{k: record["fit"][k] for k in
                           ("n", "k", "sse", "rmse", "r2", "adj_r2", "aic", "bic")})
    return ScheffeModel(
        property_name=record["name"],
        units=record["units"],
        terms=terms,
        coefficients=coeffs,
        fit_stats=fit,
        provenance=record.get("provenance", ""),
    )


def dataset_to_record(data: PropertyDataset) -> dict:
    return {
        "format": "elastomix.dataset/1",
        "name": data.property_name,
        "units": data.units,
        "rows": [
            {"x1": c.x1, "x2": c.x2, "x3": c.x3, "value": float(v)}
            for c, v in data.rows
        ],
    }


def dataset_from_record(record: dict, bounds: ComponentBounds | None = None) -> PropertyDataset:
    from .mixture import DEFAULT_BOUNDS, validate_composition

    if record.get("format") != "elastomix.dataset/1":
        raise ValidationError(f"not a dataset record: format={record.get('format')!r}")
    bounds = bounds or DEFAULT_BOUNDS
    rows = tuple(
        (validate_composition((r["x1"], r["x2"], r["x3"]), bounds), float(r["value"]))
        for r in record["rows"]
    )
    return PropertyDataset(property_name=record["name"], units=record["units"], rows=rows)


def criterion_to_record(crit: Criterion) -> dict:
    return {
        "kind": crit.kind,
        "lower": float(crit.lower),
        "upper": float(crit.upper),
        "target": None if crit.target is None else float(crit.target),
        "exponent": float(crit.exponent),
    }


def criterion_from_record(record: dict) -> Criterion:
    return Criterion(
        kind=record["kind"],
        lower=float(record["lower"]),
        upper=float(record["upper"]),
        target=None if record.get("target") is None else float(record["target"]),
        exponent=float(record.get("exponent", 1.0)),
    )


def config_to_record(config: DesirabilityConfig) -> dict:
    return {
        "format": "elastomix.config/1",
        "criteria": [
            criterion_to_record(config.criterion_1),
            criterion_to_record(config.criterion_2),
        ],
        "weights": [float(config.weights[0]), float(config.weights[1])],
    }


def config_from_record(record: dict) -> DesirabilityConfig:
    if record.get("format") != "elastomix.config/1":
        raise ValidationError(f"not a config record: format={record.get('format')!r}")
    crits = [criterion_from_record(c) for c in record["criteria"]]
    return DesirabilityConfig(
        criterion_1=crits[0],
        criterion_2=crits[1],
        weights=(float(record["weights"][0]), float(record["weights"][1])),
    )


def save_record(record: dict, path) -> None:
    Path(path).write_text(canonical_text(record), encoding="utf-8")


def load_record(path) -> dict:
    return json.loads(Path(path).read_text(encoding="utf-8"))


# ---------------------------------------------------------------------------
# ingestion


def _parse_float(token: str, path, line: int, column: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(path, line, column, f"expected a number, got {token!r}") from None


def read_spectra_file(path) -> dict[str, list[tuple[float, float]]]:
    """Parse a spectra CSV: header wavelength_nm,<label>...; rows of reals."""
    path = Path(path)
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(path, 1, None, "empty file") from None
        if not header or header[0].strip() != "wavelength_nm":
            raise ParseError(path, 1, 1, "first column must be wavelength_nm")
        labels = [h.strip() for h in header[1:]]
        series: dict[str, list[tuple[float, float]]] = {lab: [] for lab in labels}
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(labels) + 1:
                raise ParseError(path, line_no, None,
                                 f"expected {len(labels) + 1} columns, got {len(row)}")
            wl = _parse_float(row[0], path, line_no, 1)
            for j, lab in enumerate(labels, start=2):
                series[lab].append((wl, _parse_float(row[j - 1], path, line_no, j)))
    return series


def ingest_spectra(
    path,
    thickness_mm: float = REFERENCE_THICKNESS_MM,
    bias_label: str = "air",
    wavelength: float = REFERENCE_WAVELENGTH_NM,
    plan: SamplePlan | None = None,
) -> tuple[PropertyDataset, dict[str, object]]:
    """Build the transparency dataset (percent) from a spectra file.

    Samples are joined to the plan by label; the bias column is the
    pure-air reference. Returns the dataset plus per-sample optical
    summaries (including plan-excluded, optical-only samples).
    """
    plan = plan or paper_sample_plan()
    series = read_spectra_file(path)
    if bias_label not in series:
        raise MissingBiasColumn(f"spectra file has no {bias_label!r} column")
    from .optics import transmission_at

    bias = TransmissionSpectrum(bias_label, thickness_mm, tuple(series.pop(bias_label)))
    t_bias = transmission_at(bias, wavelength)
    summaries: dict[str, object] = {}
    rows = []
    skipped: list[str] = []
    for label, points in series.items():
        spectrum = TransmissionSpectrum(label, thickness_mm, tuple(points))
        summary = summarize(spectrum, t_bias, wavelength)
        summaries[label] = summary
        excluded = plan.is_excluded(label)
        if excluded is not None:
            skipped.append(label)
            continue
        try:
            comp = plan.composition(label)
        except KeyError:
            raise UnknownLabel(label) from None
        rows.append((comp, summary.t_unbiased * 100.0))
    dataset = PropertyDataset(property_name="transparency", units="percent", rows=tuple(rows))
    return dataset, {"summaries": summaries, "skipped": skipped, "bias": t_bias}


def ingest_hardness(path, plan: SamplePlan | None = None) -> tuple[PropertyDataset, dict]:
    """Build the hardness dataset (Shore 00) by averaging readings per label."""
    plan = plan or paper_sample_plan()
    path = Path(path)
    readings: dict[str, list[float]] = {}
    order: list[str] = []
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError(path, 1, None, "empty file") from None
        if [h.strip() for h in header[:2]] != ["label", "reading"]:
            raise ParseError(path, 1, None, "header must be label,reading")
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) < 2:
                raise ParseError(path, line_no, None, "expected label,reading")
            label = row[0].strip()
            value = _parse_float(row[1], path, line_no, 2)
            if label not in readings:
                readings[label] = []
                order.append(label)
            readings[label].append(value)
    rows = []
    counts = {}
    for label in order:
        if plan.is_excluded(label) is not None:
            raise UnknownLabel(label)
        try:
            comp = plan.composition(label)
        except KeyError:
            raise UnknownLabel(label) from None
        values = readings[label]
        rows.append((comp, sum(values) / len(values)))
        counts[label] = len(values)
    dataset = PropertyDataset(property_name="hardness", units="shore00", rows=tuple(rows))
    return dataset, {"reading_counts": counts}


def read_curve_file(path) -> "StressStrainCurve":
    """Parse one stress-strain leg: '# mode:' metadata row, then strain,stress_kpa."""
    from .analysis import StressStrainCurve

    path = Path(path)
    mode = "tension"
    points = []
    header_seen = False
    for line_no, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            if stripped[1:].strip().lower().startswith("mode:"):
                mode = stripped.split(":", 1)[1].strip().lower()
            continue
        if not header_seen:
            if [c.strip() for c in stripped.split(",")[:2]] != ["strain", "stress_kpa"]:
                raise ParseError(path, line_no, None, "header must be strain,stress_kpa")
            header_seen = True
            continue
        cells = stripped.split(",")
        if len(cells) < 2:
            raise ParseError(path, line_no, None, "expected strain,stress_kpa")
        points.append(
            (_parse_float(cells[0], path, line_no, 1), _parse_float(cells[1], path, line_no, 2))
        )
    if not header_seen:
        raise ParseError(path, 1, None, "missing strain,stress_kpa header")
    return StressStrainCurve(tuple(points), mode=mode)


# ---------------------------------------------------------------------------
# exports


def provenance_lines(inputs: dict[str, str]) -> list[str]:
    lines = [f"# generated-by: {TOOL}"]
    for name, digest in inputs.items():
        lines.append(f"# input {name}: {digest}")
    return lines


def window_export_text(window: OperatingWindow, inputs: dict[str, str] | None = None) -> str:
    """Tabular window export: rank, composition, desirability, predictions."""
    out = _stdio.StringIO()
    for line in provenance_lines(inputs or {}):
        out.write(line + "\n")
    out.write("rank,x1,x2,x3,desirability,y1,y2\n")
    for m in window.members:
        c = m.composition
        out.write(
            f"{m.rank},{c.x1},{c.x2},{c.x3},"
            f"{m.desirability:.6f},{m.predictions[0]:.4f},{m.predictions[1]:.4f}\n"
        )
    return out.getvalue()


def fps_export_text(cloud, inputs: dict[str, str] | None = None) -> str:
    """Flat FPS export: one row per lattice composition with both predictions."""
    out = _stdio.StringIO()
    for line in provenance_lines(inputs or {}):
        out.write(line + "\n")
    out.write("x1,x2,x3,y1,y2\n")
    for i, comp in enumerate(cloud.compositions):
        out.write(
            f"{comp.x1},{comp.x2},{comp.x3},{cloud.y1[i]:.4f},{cloud.y2[i]:.4f}\n"
        )
    return out.getvalue()


# ---------------------------------------------------------------------------
# project


@dataclass
class Project:
    """Named datasets, models and configs over one bounds definition."""

    bounds: ComponentBounds = field(default_factory=ComponentBounds)
    datasets: dict[str, PropertyDataset] = field(default_factory=dict)
    models: dict[str, ScheffeModel] = field(default_factory=dict)
    configs: dict[str, DesirabilityConfig] = field(default_factory=dict)
    notes: str = ""

    def model_pair(self) -> tuple[ScheffeModel, ScheffeModel]:
        try:
            return (self.models["transparency"], self.models["hardness"])
        except KeyError as missing:
            raise ValidationError(f"project has no model named {missing}") from None


def data_path(name: str):
    """Path to a bundled data file."""
    return resources.files("elastomix.data").joinpath(name)


def default_project() -> Project:
    """Project preloaded with the bundled datasets and published models."""
    project = Project(notes="bundled reference project")
    for name in ("transparency", "hardness"):
        record = json.loads(data_path(f"model_{name}.json").read_text(encoding="utf-8"))
        project.models[name] = model_from_record(record)
    with resources.as_file(data_path("spectra_3mm.csv")) as p:
        transparency, _ = ingest_spectra(p)
    with resources.as_file(data_path("hardness_readings.csv")) as p:
        hardness, _ = ingest_hardness(p)
    project.datasets["transparency"] = transparency
    project.datasets["hardness"] = hardness
    return project


def bounds_to_record(bounds: ComponentBounds) -> dict:
    return {
        "format": "elastomix.bounds/1",
        "lower": [float(v) for v in bounds.lower],
        "upper": [float(v) for v in bounds.upper],
    }


def bounds_from_record(record: dict) -> ComponentBounds:
    if record.get("format") != "elastomix.bounds/1":
        raise ValidationError(f"not a bounds record: format={record.get('format')!r}")
    return ComponentBounds(
        lower=tuple(float(v) for v in record["lower"]),
        upper=tuple(float(v) for v in record["upper"]),
    )


def load_project(root) -> Project:
    """Load a project directory: bounds.json plus models/datasets/configs/*.json."""
    root = Path(root)
    project = Project()
    bounds_path = root / "bounds.json"
    if bounds_path.is_file():
        project.bounds = bounds_from_record(load_record(bounds_path))
    for sub, loader, store in (
        ("models", model_from_record, project.models),
        ("datasets", lambda r: dataset_from_record(r, project.bounds), project.datasets),
        ("configs", config_from_record, project.configs),
    ):
        directory = root / sub
        if not directory.is_dir():
            continue
        for path in sorted(directory.glob("*.json")):
            record = load_record(path)
            store[path.stem] = loader(record)
    return project


def save_project(project: Project, root) -> None:
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    save_record(bounds_to_record(project.bounds), root / "bounds.json")
    for sub, records in (
        ("models", {k: model_to_record(m) for k, m in project.models.items()}),
        ("datasets", {k: dataset_to_record(d) for k, d in project.datasets.items()}),
        ("configs", {k: config_to_record(c) for k, c in project.configs.items()}),
    ):
        directory = root / sub
        directory.mkdir(parents=True, exist_ok=True)
        for name, record in records.items():
            save_record(record, directory / f"{name}.json")
