"""HTTP JSON API under /api/v1.

Thin wrapper over the shared engine: request models validate shape, the
engine produces the same dicts the CLI prints.  Error mapping: malformed
bodies are 400 with field-level messages, unknown scenarios are 404, and
domain or configuration errors surface as 422, never 500.
"""

from __future__ import annotations

from fastapi import FastAPI, Query, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .config import EngineConfig
from .engine import DEFAULT_PROFILE_POINTS, Engine
from .errors import ConfigError, DomainError, UnknownScenarioError
from .runlog import RunLog, record_from_plan

API_PREFIX = "/api/v1"


class PlanRequest(BaseModel):
    scenario: str
    limit_msv: float
    altitudes: list[float] | None = None
    continuous: bool = False


class PremiumRequest(BaseModel):
    limit_msv: float
    mode: str = "exact"
    years: int = 10_000
    seed: int = 0
    exposure_fraction: float = 1.0


class WhatIfRequest(BaseModel):
    scenario: str
    limit_msv: float
    altitude_km: float


def create_app(engine: Engine, run_log: RunLog) -> FastAPI:
    app = FastAPI(title="aeroshield", version="0.1.0")

    @app.exception_handler(RequestValidationError)
    async def _invalid_body(request: Request, exc: RequestValidationError):
        fields = [
            {
                "field": ".".join(str(part) for part in err["loc"] if part != "body"),
                "message": err["msg"],
            }
            for err in exc.errors()
        ]
        return JSONResponse(status_code=400, content={"error": "invalid request", "fields": fields})

    @app.exception_handler(UnknownScenarioError)
    async def _unknown_scenario(request: Request, exc: UnknownScenarioError):
        return JSONResponse(status_code=404, content={"error": str(exc)})

    @app.exception_handler(DomainError)
    async def _domain_error(request: Request, exc: DomainError):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.exception_handler(ConfigError)
    async def _config_error(request: Request, exc: ConfigError):
        return JSONResponse(status_code=422, content={"error": str(exc)})

    @app.get(API_PREFIX + "/scenarios")
    def scenarios():
        return engine.scenarios_report()

    @app.get(API_PREFIX + "/dose-profile")
    def dose_profile(
        scenario: str,
        points: int = Query(default=DEFAULT_PROFILE_POINTS, ge=2, le=5000),
    ):
        return engine.profile_report(scenario, points)

    @app.post(API_PREFIX + "/plan")
    def plan(body: PlanRequest):
        report = engine.plan_report(body.scenario, body.limit_msv, body.altitudes, body.continuous)
        run_log.append(record_from_plan(report, report["config_hash"]))
        return report

    @app.post(API_PREFIX + "/premium")
    def premium(body: PremiumRequest):
        return engine.premium_report(
            body.limit_msv,
            body.mode,
            years=body.years,
            seed=body.seed,
            exposure_fraction=body.exposure_fraction,
        )

    @app.post(API_PREFIX + "/what-if")
    def what_if(body: WhatIfRequest):
        return engine.what_if(body.scenario, body.limit_msv, body.altitude_km)

    return app


def serve_http(
    config: EngineConfig,
    port: int,
    host: str = "127.0.0.1",
    run_log: RunLog | None = None,
) -> None:
    """Build the app and serve it; the run log must be writable at startup."""
    import uvicorn

    from .runlog import DEFAULT_LOG_FILENAME

    log = run_log or RunLog(DEFAULT_LOG_FILENAME)
    log.ensure_writable()
    uvicorn.run(create_app(Engine(config), log), host=host, port=port)
