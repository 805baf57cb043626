"""Command-line surface tying the pipeline together.

Subcommands cover the forward path (ingest -> fit -> anova -> prune) and
the inverse path (fps -> optimize -> window -> report), plus prediction,
correlation summaries and the read-only API server. Every artifact is
written deterministically with a provenance header; exit codes are
0 success, 2 validation error, 3 I/O error, 4 infeasible target.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__, io
from .analysis import error_report, linear_fit
from .desirability import (
    DesirabilityConfig,
    GUIDELINES,
    empirical_criterion,
    guideline_config,
    optimize,
    scale_criterion,
)
from .errors import ElastomixError, IngestError, InfeasibleError, ValidationError
from .fps import build_fps
from .mixture import paper_sample_plan, ternary_xy, validate_composition
from .models import anova_partial_f, fit_ols, predict, prune_terms, TermSet
from .window import WindowSpec, optimal_window

EXIT_VALIDATION = 2
EXIT_IO = 3
EXIT_INFEASIBLE = 4


def _load_project(args) -> io.Project:
    if getattr(args, "project", None):
        return io.load_project(args.project)
    return io.default_project()


def _write(path: str | None, text: str, label: str) -> None:
    if path:
        Path(path).write_text(text, encoding="utf-8")
        print(f"{label} -> {path}")
    else:
        sys.stdout.write(text)


def _model_inputs(project: io.Project) -> dict[str, str]:
    return {
        name: io.digest_text(io.canonical_text(io.model_to_record(model)))
        for name, model in sorted(project.models.items())
    }


def cmd_plan(args) -> int:
    plan = paper_sample_plan()
    lines = ["label,x1,x2,x3"]
    for entry in plan.entries:
        c = entry.composition
        lines.append(f"{entry.label},{c.x1},{c.x2},{c.x3}")
    text = "\n".join(io.provenance_lines({}) + lines) + "\n"
    _write(args.out, text, "sample plan")
    for ex in plan.exclusions:
        print(f"excluded {ex.label} {ex.point} [{ex.reason}]: {ex.note}")
    return 0


def cmd_ingest(args) -> int:
    if args.kind == "spectra":
        dataset, info = io.ingest_spectra(
            args.file,
            thickness_mm=args.thickness_mm,
            bias_label=args.bias_label,
            wavelength=args.wavelength,
        )
        print(
            f"ingested {len(dataset)} transparency rows at {args.wavelength:g} nm "
            f"(bias {info['bias']:.4f}; skipped: {', '.join(info['skipped']) or 'none'})"
        )
    else:
        dataset, info = io.ingest_hardness(args.file)
        counts = info["reading_counts"]
        print(
            f"ingested {len(dataset)} hardness rows "
            f"({min(counts.values())}-{max(counts.values())} readings per sample)"
        )
    record = io.dataset_to_record(dataset)
    _write(args.out, io.canonical_text(record), f"{dataset.property_name} dataset")
    return 0


def _dataset_from_args(args, project):
    if args.dataset in project.datasets:
        return project.datasets[args.dataset]
    record = io.load_record(args.dataset)
    return io.dataset_from_record(record)


def cmd_fit(args) -> int:
    project = _load_project(args)
    dataset = _dataset_from_args(args, project)
    terms = TermSet() if args.terms == "full" else TermSet.from_names(args.terms.split(","))
    model = fit_ols(dataset, terms)
    report = anova_partial_f(dataset, model)
    s = model.fit_stats
    print(f"fit {dataset.property_name}: n={s.n} k={s.k}")
    print(f"  rmse={s.rmse:.3f} r2={s.r2:.3f} adj_r2={s.adj_r2:.3f} aic={s.aic:.3f} bic={s.bic:.3f}")
    for term in model.terms.names():
        f_stat, p = report.terms[term]
        print(f"  {term:7s} beta={model.coefficient(term):9.3f}  F={f_stat:9.3f}  p={p:.4f}")
    if args.out:
        io.save_record(io.model_to_record(model), args.out)
        print(f"model -> {args.out}")
    return 0


def cmd_anova(args) -> int:
    project = _load_project(args)
    dataset = _dataset_from_args(args, project)
    terms = TermSet() if args.terms == "full" else TermSet.from_names(args.terms.split(","))
    model = fit_ols(dataset, terms)
    report = anova_partial_f(dataset, model)
    print("term,F,p")
    for term in model.terms.names():
        f_stat, p = report.terms[term]
        print(f"{term},{f_stat:.3f},{p:.4f}")
    return 0


def cmd_prune(args) -> int:
    project = _load_project(args)
    dataset = _dataset_from_args(args, project)
    keep = tuple(args.keep.split(",")) if args.keep else ()
    model = prune_terms(dataset, p_threshold=args.p_threshold, keep=keep)
    s = model.fit_stats
    print(f"pruned {dataset.property_name}: terms {', '.join(model.terms.names())}")
    print(f"  rmse={s.rmse:.3f} r2={s.r2:.3f} adj_r2={s.adj_r2:.3f} aic={s.aic:.3f} bic={s.bic:.3f}")
    if args.out:
        io.save_record(io.model_to_record(model), args.out)
        print(f"model -> {args.out}")
    return 0


def cmd_predict(args) -> int:
    project = _load_project(args)
    comp = validate_composition(tuple(args.x))
    record = {"x": list(comp.as_tuple()), "ternary_xy": list(ternary_xy(comp)), "predictions": {}}
    for name, model in sorted(project.models.items()):
        record["predictions"][name] = predict(model, comp)
    sys.stdout.write(io.canonical_text(record))
    return 0


def _criteria_from_args(args, project) -> DesirabilityConfig:
    if args.config:
        return io.config_from_record(io.load_record(args.config))
    targets = (args.t1, args.t2)
    weights = (args.w1, args.w2)
    if args.guideline:
        if args.bounds_mode == "empirical":
            kinds = GUIDELINES[args.guideline][:2]
            m1, m2 = project.model_pair()
            crits = []
            for model, kind, target in zip((m1, m2), kinds, targets):
                crits.append(empirical_criterion(model, kind, target if kind == "NTB" else None))
            return DesirabilityConfig(crits[0], crits[1], weights)
        return guideline_config(args.guideline, targets, weights)
    kinds = (args.k1, args.k2)
    crits = []
    for prop, kind, target in zip(("transparency", "hardness"), kinds, targets):
        crits.append(scale_criterion(prop, kind, target if kind == "NTB" else None))
    return DesirabilityConfig(crits[0], crits[1], weights)


def cmd_optimize(args) -> int:
    project = _load_project(args)
    model_1, model_2 = project.model_pair()
    config = _criteria_from_args(args, project)
    solution = optimize(model_1, model_2, config, project.bounds)
    record = {
        "composition": list(solution.composition.as_tuple()),
        "continuous_point": [round(v, 6) for v in solution.continuous_point],
        "desirability": solution.desirability,
        "predictions": {
            model_1.property_name: solution.predictions[0],
            model_2.property_name: solution.predictions[1],
        },
        "provenance": _model_inputs(project),
    }
    _write(args.out, io.canonical_text(record), "solution")
    return 0


def cmd_window(args) -> int:
    project = _load_project(args)
    model_1, model_2 = project.model_pair()
    config = _criteria_from_args(args, project)
    spec = WindowSpec(delta_x=args.dx, delta_y=args.dy, property_cut=args.property_cut)
    window = optimal_window(model_1, model_2, config, spec, project.bounds)
    if args.top:
        from .window import OperatingWindow

        window = OperatingWindow(anchor=window.anchor, members=window.top(args.top))
    text = io.window_export_text(window, _model_inputs(project))
    _write(args.out, text, f"window ({len(window.members)} members)")
    return 0


def cmd_fps(args) -> int:
    project = _load_project(args)
    model_1, model_2 = project.model_pair()
    cloud = build_fps(model_1, model_2, project.bounds)
    text = io.fps_export_text(cloud, _model_inputs(project))
    _write(args.out, text, f"fps cloud ({len(cloud)} points)")
    if args.svg:
        from .render import fps_svg

        Path(args.svg).write_text(fps_svg(cloud), encoding="utf-8")
        print(f"fps figure -> {args.svg}")
    return 0


def cmd_report(args) -> int:
    path = args.file or io.data_path("inverse_design_validation.csv")
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    header = lines[0].split(",")
    expected = ["design", "rank", "property", "target", "predicted", "measured"]
    if header != expected:
        print(f"error: header must be {','.join(expected)}", file=sys.stderr)
        return EXIT_VALIDATION
    out = ["design,rank,property,target,predicted,measured,error1,error1_pct,error2,error2_pct"]
    for line in lines[1:]:
        if not line.strip():
            continue
        design, rank, prop, t, p, r = line.split(",")
        rec = error_report(float(t), float(p), float(r), prop)
        out.append(
            f"{design},{rank},{prop},{t},{p},{r},"
            f"{rec.error1_abs:.2f},{rec.error1_pct * 100:.1f},"
            f"{rec.error2_abs:.2f},{rec.error2_pct * 100:.1f}"
        )
    text = "\n".join(io.provenance_lines({"rows": io.digest_file(path)}) + out) + "\n"
    _write(args.out, text, "error report")
    return 0


def cmd_correlate(args) -> int:
    path = args.file or io.data_path("material_properties.csv")
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    header = lines[0].split(",")
    cols = {name: [] for name in header[1:]}
    for line in lines[1:]:
        parts = line.split(",")
        for name, token in zip(header[1:], parts[1:]):
            cols[name].append(float(token))
    x, y = args.x, args.y
    if x not in cols or y not in cols:
        print(f"error: columns must be among {sorted(cols)}", file=sys.stderr)
        return EXIT_VALIDATION
    slope, intercept, r2 = linear_fit(cols[x], cols[y])
    print(f"{y} ~ {slope:.4f} * {x} + {intercept:.4f}  (r2 = {r2:.3f}, n = {len(cols[x])})")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .server import create_app

    app = create_app(_load_project(args))
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elastomix",
        description="Inverse design of 3-component mixture elastomers.",
    )
    parser.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plan", help="emit the mixture sampling plan")
    p.add_argument("--out")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("ingest", help="ingest spectra or hardness files")
    p.add_argument("kind", choices=("spectra", "hardness"))
    p.add_argument("--file", required=True)
    p.add_argument("--out")
    p.add_argument("--thickness-mm", type=float, default=3.0)
    p.add_argument("--bias-label", default="air")
    p.add_argument("--wavelength", type=float, default=700.0)
    p.set_defaults(func=cmd_ingest)

    for name, func in (("fit", cmd_fit), ("anova", cmd_anova)):
        p = sub.add_parser(name, help=f"{name} a Scheffé model on a dataset")
        p.add_argument("--project")
        p.add_argument("--dataset", required=True, help="project dataset name or record path")
        p.add_argument("--terms", default="full", help="'full' or comma list, e.g. x1,x2,x3")
        if name == "fit":
            p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("prune", help="backward-eliminate high-p terms")
    p.add_argument("--project")
    p.add_argument("--dataset", required=True)
    p.add_argument("--p-threshold", type=float, default=0.45)
    p.add_argument("--keep", default="", help="comma list of terms never dropped")
    p.add_argument("--out")
    p.set_defaults(func=cmd_prune)

    p = sub.add_parser("predict", help="predict properties at a composition")
    p.add_argument("--project")
    p.add_argument("x", nargs=3, type=int, metavar=("X1", "X2", "X3"))
    p.set_defaults(func=cmd_predict)

    for name, func in (("optimize", cmd_optimize), ("window", cmd_window)):
        p = sub.add_parser(name, help=f"run inverse design {name}")
        p.add_argument("--project")
        p.add_argument("--config", help="desirability config record path")
        p.add_argument("--guideline", type=int, choices=range(1, 10))
        p.add_argument("--k1", choices=("NTB", "LTB", "STB"), default="NTB")
        p.add_argument("--k2", choices=("NTB", "LTB", "STB"), default="NTB")
        p.add_argument("--t1", type=float)
        p.add_argument("--t2", type=float)
        p.add_argument("--w1", type=float, default=0.5)
        p.add_argument("--w2", type=float, default=0.5)
        p.add_argument("--bounds-mode", choices=("scale", "empirical"), default="scale")
        p.add_argument("--out")
        if name == "window":
            p.add_argument("--dx", type=float, default=3.0)
            p.add_argument("--dy", type=float, default=3.0)
            p.add_argument("--top", type=int, default=0, help="keep only the best N rows")
            p.add_argument("--property-cut", action="store_true")
        p.set_defaults(func=func)

    p = sub.add_parser("fps", help="export the feasible property space")
    p.add_argument("--project")
    p.add_argument("--out")
    p.add_argument("--svg", help="also write a static SVG figure")
    p.set_defaults(func=cmd_fps)

    p = sub.add_parser("report", help="inverse-design error accounting")
    p.add_argument("--file", help="rows of design,rank,property,target,predicted,measured")
    p.add_argument("--out")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("correlate", help="linear correlation between two material properties")
    p.add_argument("--file")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("serve", help="start the read-only API server")
    p.add_argument("--project")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8080)
    p.set_defaults(func=cmd_serve)

    return parser


TOOL_VERSION = f"%(prog)s {__version__}"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (IngestError, OSError) as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ValidationError, ElastomixError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
