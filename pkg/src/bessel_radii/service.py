"""HTTP front end: pydantic request/response models around the core package.

The CLI talks to this app (in-process by default, over the wire with
--server); the JSON responses round every float to 15 significant digits so
identical requests serialize identically.
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse, PlainTextResponse
from pydantic import BaseModel, Field

from . import __version__
from .bessel import Order
from .errors import BesselRadiiError, InvalidOrder, PreconditionViolated
from .figures import figure_csv, sweep_csv, zeros_csv
from .functional import (
    Family,
    FunctionalParams,
    default_radius_tol,
    radius_alpha_convexity,
)
from .verify import GridEntry, GridSpec, run_verification
from .zeros import ZeroKind

app = FastAPI(title="bessel-radii", version=__version__)


def _sig15(x: float) -> float:
    return float(format(x, ".15g"))


@app.exception_handler(BesselRadiiError)
async def _domain_error(request, exc: BesselRadiiError):
    return JSONResponse(status_code=422, content={"detail": str(exc)})


class RadiusRequest(BaseModel):
    family: Literal["f", "g", "h"]
    nu: float
    alpha: float = Field(ge=0)
    beta: float = Field(ge=0, lt=1)
    tol: Optional[float] = Field(default=None, gt=0)


class RadiusResponse(BaseModel):
    family: str
    nu: float
    alpha: float
    beta: float
    radius: float
    cap: float
    residual: float
    iterations: int


class FigureRequest(BaseModel):
    figure_id: Literal[1, 2, 3]
    r_points: int = Field(default=200, ge=2, le=100_000)


class ZerosRequest(BaseModel):
    kind: Literal["j", "jprime", "dini_g", "dini_h"]
    nu: float
    count: int = Field(ge=1, le=2000)
    zero_tol: float = Field(default=1e-12, gt=0)


class SweepRequest(BaseModel):
    family: Literal["f", "g", "h"]
    nu: float
    beta: float = Field(ge=0, lt=1)
    alphas: list[float] = Field(min_length=1)
    tol: Optional[float] = Field(default=None, gt=0)


class VerifyGridEntry(BaseModel):
    family: Literal["f", "g", "h"]
    nu: float
    beta: float = Field(ge=0, lt=1)
    alphas: list[float] = Field(min_length=1)


class VerifyRequest(BaseModel):
    entries: Optional[list[VerifyGridEntry]] = None
    interlacing_nus: Optional[list[float]] = None
    count: int = Field(default=10, ge=1, le=50)
    samples: int = Field(default=512, ge=64, le=8192)
    lemma_trials: int = Field(default=10_000, ge=1)
    dual_r_points: int = Field(default=20, ge=2)


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok", "version": __version__}


@app.post("/radius", response_model=RadiusResponse)
def radius(req: RadiusRequest) -> RadiusResponse:
    family = Family(req.family)
    params = FunctionalParams(req.alpha, req.beta)
    res = radius_alpha_convexity(
        family, Order(req.nu), params, req.tol if req.tol else default_radius_tol()
    )
    return RadiusResponse(
        family=req.family,
        nu=_sig15(req.nu),
        alpha=_sig15(req.alpha),
        beta=_sig15(req.beta),
        radius=_sig15(res.radius),
        cap=_sig15(res.domain_cap_value),
        residual=_sig15(res.residual),
        iterations=res.iterations,
    )


@app.post("/figure")
def figure(req: FigureRequest) -> PlainTextResponse:
    return PlainTextResponse(figure_csv(req.figure_id, req.r_points), media_type="text/csv")


@app.post("/zeros")
def zeros(req: ZerosRequest) -> PlainTextResponse:
    csv = zeros_csv(ZeroKind(req.kind), Order(req.nu), req.count, req.zero_tol)
    return PlainTextResponse(csv, media_type="text/csv")


@app.post("/sweep")
def sweep(req: SweepRequest) -> PlainTextResponse:
    csv = sweep_csv(
        Family(req.family), Order(req.nu), req.beta, tuple(req.alphas), req.tol
    )
    return PlainTextResponse(csv, media_type="text/csv")


@app.post("/verify")
def verify(req: VerifyRequest) -> JSONResponse:
    kwargs: dict = {
        "count": req.count,
        "samples": req.samples,
        "lemma_trials": req.lemma_trials,
        "dual_r_points": req.dual_r_points,
    }
    if req.entries is not None:
        kwargs["entries"] = tuple(
            GridEntry(Family(e.family), e.nu, e.beta, tuple(e.alphas))
            for e in req.entries
        )
    if req.interlacing_nus is not None:
        kwargs["interlacing_nus"] = tuple(req.interlacing_nus)
    report = run_verification(GridSpec(**kwargs))
    return JSONResponse(status_code=200, content=report.to_dict())
