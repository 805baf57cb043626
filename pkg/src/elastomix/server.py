"""Read-only API server exposing the models and inverse-design operations.

Stateless: every response is a pure function of the loaded project and
the request. Responses are rendered with the same canonical JSON writer
the CLI uses, so identical inputs yield byte-identical payloads on both
surfaces. User errors map to structured 400/404 responses, never 500.
The endpoint schema is documented in docs/api.md.
"""

from __future__ import annotations

from fastapi import FastAPI, Request, Response
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import io
from .desirability import (
    Criterion,
    DesirabilityConfig,
    GUIDELINES,
    optimize,
    scale_criterion,
)
from .errors import ElastomixError, UnknownModel
from .fps import build_fps, component_map, feasibility
from .mixture import ternary_xy, validate_composition
from .models import predict
from .window import WindowSpec, optimal_window


class CriterionBody(BaseModel):
    kind: str
    target: float | None = None
    lower: float | None = None
    upper: float | None = None
    exponent: float = 1.0


class ConfigBody(BaseModel):
    transparency: CriterionBody
    hardness: CriterionBody
    weights: tuple[float, float] = (0.5, 0.5)


class PredictBody(BaseModel):
    x: tuple[int, int, int]


class WindowBody(ConfigBody):
    delta_x: float = 3.0
    delta_y: float = 3.0


class FeasibilityBody(BaseModel):
    target: tuple[float, float]
    tolerance: tuple[float, float] = (2.0, 2.0)


def _criterion(body: CriterionBody, property_name: str) -> Criterion:
    if body.lower is None or body.upper is None:
        crit = scale_criterion(property_name, body.kind,
                               body.target if body.kind == "NTB" else None, body.exponent)
        lower = body.lower if body.lower is not None else crit.lower
        upper = body.upper if body.upper is not None else crit.upper
        return Criterion(kind=body.kind, lower=lower, upper=upper,
                         target=crit.target, exponent=body.exponent)
    return Criterion(
        kind=body.kind, lower=body.lower, upper=body.upper,
        target=body.target if body.kind == "NTB" else None, exponent=body.exponent,
    )


def _config(body: ConfigBody) -> DesirabilityConfig:
    return DesirabilityConfig(
        criterion_1=_criterion(body.transparency, "transparency"),
        criterion_2=_criterion(body.hardness, "hardness"),
        weights=body.weights,
    )


def _canonical(record: dict) -> Response:
    return Response(content=io.canonical_text(record), media_type="application/json")


def _solution_record(solution, model_1, model_2, project) -> dict:
    return {
        "composition": list(solution.composition.as_tuple()),
        "continuous_point": [round(v, 6) for v in solution.continuous_point],
        "desirability": solution.desirability,
        "predictions": {
            model_1.property_name: solution.predictions[0],
            model_2.property_name: solution.predictions[1],
        },
        "provenance": _model_inputs(project),
    }


def _model_inputs(project: io.Project) -> dict[str, str]:
    return {
        name: io.digest_text(io.canonical_text(io.model_to_record(model)))
        for name, model in sorted(project.models.items())
    }


def create_app(project: io.Project | None = None) -> FastAPI:
    project = project or io.default_project()
    model_1, model_2 = project.model_pair()
    cloud = build_fps(model_1, model_2, project.bounds)  # immutable snapshot

    app = FastAPI(title="elastomix", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(ElastomixError)
    async def _domain_error(request: Request, exc: ElastomixError):
        status = 404 if isinstance(exc, UnknownModel) else 400
        field = getattr(exc, "component", None) or getattr(exc, "label", None)
        return JSONResponse(
            status_code=status,
            content={"error": {"code": exc.code, "message": str(exc), "field": field}},
        )

    @app.exception_handler(RequestValidationError)
    async def _request_error(request: Request, exc: RequestValidationError):
        first = exc.errors()[0] if exc.errors() else {}
        field = ".".join(str(p) for p in first.get("loc", ()) if p != "body") or None
        return JSONResponse(
            status_code=400,
            content={
                "error": {
                    "code": "invalid_request",
                    "message": first.get("msg", "invalid request"),
                    "field": field,
                }
            },
        )

    @app.get("/models")
    def models() -> Response:
        record = {
            "models": [io.model_to_record(m) for _, m in sorted(project.models.items())]
        }
        return _canonical(record)

    @app.get("/models/{name}")
    def model_by_name(name: str) -> Response:
        if name not in project.models:
            raise UnknownModel(f"no model named {name!r}")
        return _canonical(io.model_to_record(project.models[name]))

    @app.post("/predict")
    def predict_endpoint(body: PredictBody) -> Response:
        comp = validate_composition(body.x, project.bounds)
        record = {
            "x": list(comp.as_tuple()),
            "ternary_xy": list(ternary_xy(comp)),
            "predictions": {
                name: predict(model, comp) for name, model in sorted(project.models.items())
            },
        }
        return _canonical(record)

    @app.get("/fps")
    def fps_endpoint(grid: int = 12) -> Response:
        maps = {}
        edges = None
        for index, name in enumerate(("x1", "x2", "x3")):
            cm = component_map(cloud, index, (grid, grid))
            edges = cm
            maps[name] = {
                "mean": [
                    [None if cm.is_empty(i, j) else float(cm.mean[i, j]) for j in range(grid)]
                    for i in range(grid)
                ],
                "count": [[int(c) for c in row] for row in cm.count],
            }
        record = {
            "points": [
                {
                    "x1": comp.x1, "x2": comp.x2, "x3": comp.x3,
                    "y1": float(cloud.y1[i]), "y2": float(cloud.y2[i]),
                }
                for i, comp in enumerate(cloud.compositions)
            ],
            "y1_range": list(cloud.y1_range),
            "y2_range": list(cloud.y2_range),
            "grid_edges": {
                "y1": [float(v) for v in edges.y1_edges],
                "y2": [float(v) for v in edges.y2_edges],
            },
            "component_maps": maps,
        }
        return _canonical(record)

    @app.post("/optimize")
    def optimize_endpoint(body: ConfigBody) -> Response:
        config = _config(body)
        solution = optimize(model_1, model_2, config, project.bounds)
        return _canonical(_solution_record(solution, model_1, model_2, project))

    @app.post("/window")
    def window_endpoint(body: WindowBody) -> Response:
        config = _config(body)
        spec = WindowSpec(delta_x=body.delta_x, delta_y=body.delta_y)
        window = optimal_window(model_1, model_2, config, spec, project.bounds)
        record = {
            "anchor": _solution_record(window.anchor, model_1, model_2, project),
            "members": [
                {
                    "rank": m.rank,
                    "label": m.label,
                    "composition": list(m.composition.as_tuple()),
                    "desirability": m.desirability,
                    "predictions": {
                        model_1.property_name: m.predictions[0],
                        model_2.property_name: m.predictions[1],
                    },
                }
                for m in window.members
            ],
            "export_csv": io.window_export_text(window, _model_inputs(project)),
        }
        return _canonical(record)

    @app.post("/feasibility")
    def feasibility_endpoint(body: FeasibilityBody) -> Response:
        verdict = feasibility(cloud, body.target, body.tolerance)
        nearest = verdict.nearest
        record = {
            "feasible": verdict.feasible,
            "distance": verdict.distance,
            "nearest": {
                "composition": list(nearest.source.as_tuple()),
                "y1": nearest.y1,
                "y2": nearest.y2,
            },
        }
        return _canonical(record)

    @app.get("/guidelines")
    def guidelines() -> Response:
        record = {
            "guidelines": [
                {
                    "id": gid,
                    "transparency": kinds[0],
                    "hardness": kinds[1],
                    "tailors": kinds[2],
                    "application": kinds[3],
                }
                for gid, kinds in sorted(GUIDELINES.items())
            ]
        }
        return _canonical(record)

    return app
