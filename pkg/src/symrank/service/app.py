"""FastAPI service exposing the toolkit, one POST endpoint per operation.

The run_* handlers hold the actual orchestration and are plain
functions of the request models; the CLI calls them in-process and the
HTTP layer is a thin wrapper.  Domain errors map to 400 with a "kind"
discriminator: validation | budget | construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

import symrank
from symrank.codes import (SymCode, code_from_json, code_to_json,
                           min_distance, verify_report)
from symrank.counting import (ball_bounds, ball_size, density_upper_bound,
                              is_prime_power, packing_radius,
                              prime_power_decomposition,
                              quasi_perfect_verdict, singleton_max_dim,
                              sphere_bounds, sphere_size)
from symrank.errors import BudgetExceeded, ConstructionError
from symrank.gf import build_base_field
from symrank.linpoly import build_punctured_code, build_schmidt_code
from symrank.matspace import rank_census, sym_dim
from symrank.service.schemas import (BoundCheckModel, BuildRequest,
                                     BuildResponse, CodeModel, CountRequest,
                                     CountResponse, CountRow, DensityRequest,
                                     DensityResponse, DensityRow,
                                     OracleRequest, OracleResponse, OracleRow,
                                     RatioModel, VerifyRequest, VerifyResponse)

__all__ = ["app", "run_count", "run_oracle", "run_build", "run_verify",
           "run_density"]


def _ratio_model(r: Fraction) -> RatioModel:
    f = Fraction(r)
    return RatioModel(num=str(f.numerator), den=str(f.denominator))


def _ratio_str(r: Fraction) -> str:
    f = Fraction(r)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _require_qm(q: int, m: int) -> None:
    if not is_prime_power(q):
        raise ValueError(f"field order {q} is not a prime power")
    if m < 1:
        raise ValueError(f"matrix order {m} must be >= 1")


# ---------------------------------------------------------------------------
# handlers


def run_count(req: CountRequest) -> CountResponse:
    """Sphere/ball table with the power-of-q sandwich at every radius."""
    _require_qm(req.q, req.m)
    t_max = req.m if req.t_max is None else req.t_max
    if not 0 <= t_max <= req.m:
        raise ValueError(f"t_max {t_max} out of range 0..{req.m}")
    rows = []
    for t in range(t_max + 1):
        s = sphere_size(req.q, req.m, t)
        b = ball_size(req.q, req.m, t)
        sb = sphere_bounds(req.q, req.m, t)
        bb = ball_bounds(req.q, req.m, t)
        ok = sb.contains(s) and bb.contains(b)
        rows.append(CountRow(
            t=t, sphere=str(s), ball=str(b),
            sphere_lower=_ratio_str(sb.lower), sphere_upper=_ratio_str(sb.upper),
            ball_lower=_ratio_str(bb.lower), ball_upper=_ratio_str(bb.upper),
            within_bounds=ok))
    return CountResponse(q=req.q, m=req.m, rows=rows)


def run_oracle(req: OracleRequest) -> OracleResponse:
    """Brute-force rank census against the closed-form sphere sizes."""
    _require_qm(req.q, req.m)
    p, e = prime_power_decomposition(req.q)
    F = build_base_field(p, e)
    profile = rank_census(F, req.m, budget=req.ambient_budget)
    rows = []
    ok = True
    for t in range(req.m + 1):
        formula = sphere_size(req.q, req.m, t)
        census = profile.counts[t]
        match = census == formula
        ok = ok and match
        rows.append(OracleRow(t=t, census=str(census), formula=str(formula),
                              match=match))
    return OracleResponse(q=req.q, m=req.m, ok=ok, rows=rows)


def _build(q: int, m: int, d: int) -> tuple[SymCode, str]:
    if (m - d) % 2 == 0:
        return build_schmidt_code(q, m, d), "direct"
    return build_punctured_code(q, m, d), "punctured"


def run_build(req: BuildRequest) -> BuildResponse:
    """Construct the maximum code for (q, m, d) and measure it when the
    codeword budget allows."""
    _require_qm(req.q, req.m)
    if not 1 <= req.d <= req.m:
        raise ValueError(f"distance {req.d} out of range 1..{req.m}")
    C, how = _build(req.q, req.m, req.d)
    resp = BuildResponse(
        code=CodeModel(**code_to_json(C)),
        construction=how,
        dimension=C.k,
        cardinality=str(C.cardinality),
    )
    try:
        d_meas = min_distance(C, budget=req.codeword_budget)
        resp.min_distance = d_meas
        resp.is_mrd = C.k == singleton_max_dim(C.m, d_meas)
    except BudgetExceeded:
        resp.measurement_refused = True
    return resp


def run_verify(req: VerifyRequest) -> VerifyResponse:
    """Full verification report for a serialized code."""
    C = code_from_json(req.code.model_dump())
    rep = verify_report(C, checks=req.checks, radius=req.radius,
                        ambient_budget=req.ambient_budget,
                        codeword_budget=req.codeword_budget)
    return VerifyResponse(
        q=rep.q, m=rep.m, dimension=rep.dimension, d_design=rep.d_design,
        min_distance=rep.min_distance, is_mrd=rep.is_mrd,
        is_perfect=rep.is_perfect, packing_ok=rep.packing_ok,
        covering_ok=rep.covering_ok, covering_radius=rep.covering_radius,
        density=None if rep.density is None else _ratio_model(rep.density),
        bound_checks=[BoundCheckModel(name=c.name, satisfied=c.satisfied,
                                      slack=c.slack)
                      for c in rep.bound_checks],
        refusals=list(rep.refusals),
        all_passed=rep.all_passed)


def run_density(req: DensityRequest) -> DensityResponse:
    """Covering density of the maximum code for each m at fixed (q, d).

    Small codes are built and measured; past the codeword budget the
    density comes from the maximum cardinality q^singleton_max_dim and
    the row is flagged formulaic.
    """
    if not is_prime_power(req.q):
        raise ValueError(f"field order {req.q} is not a prime power")
    if not req.m_values:
        raise ValueError("no matrix orders given")
    rows = []
    t = packing_radius(req.d)
    for m in req.m_values:
        if not 1 <= req.d <= m:
            raise ValueError(f"distance {req.d} out of range 1..{m}")
        dim = singleton_max_dim(m, req.d)
        space = req.q ** sym_dim(m)
        if req.q ** dim <= req.codeword_budget:
            C, _ = _build(req.q, m, req.d)
            d_meas = min_distance(C, budget=req.codeword_budget)
            assert d_meas == req.d, "construction missed its design distance"
            dens = Fraction(C.cardinality * ball_size(req.q, m, t), space)
            source = "measured"
        else:
            dens = Fraction(req.q ** dim * ball_size(req.q, m, t), space)
            source = "formulaic"
        ub = density_upper_bound(req.q, m, req.d)
        rows.append(DensityRow(
            q=req.q, m=m, d=req.d, t=t, dimension=dim,
            density=_ratio_model(dens), density_float=float(dens),
            upper_bound=_ratio_model(ub), attains_upper=dens == ub,
            source=source))
    return DensityResponse(q=req.q, d=req.d,
                           verdict=quasi_perfect_verdict(req.d).value,
                           rows=rows)


# ---------------------------------------------------------------------------
# HTTP wiring


app = FastAPI(title="symrank", version=symrank.__version__)


@app.exception_handler(ValueError)
async def _validation_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400,
                        content={"kind": "validation", "detail": str(exc)})


@app.exception_handler(BudgetExceeded)
async def _budget_handler(request: Request, exc: BudgetExceeded):
    return JSONResponse(status_code=400,
                        content={"kind": "budget", "detail": str(exc),
                                 "what": exc.what, "size": exc.size,
                                 "budget": exc.budget})


@app.exception_handler(ConstructionError)
async def _construction_handler(request: Request, exc: ConstructionError):
    return JSONResponse(status_code=400,
                        content={"kind": "construction", "detail": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": symrank.__version__}


@app.post("/count", response_model=CountResponse)
def count_endpoint(req: CountRequest) -> CountResponse:
    return run_count(req)


@app.post("/oracle", response_model=OracleResponse)
def oracle_endpoint(req: OracleRequest) -> OracleResponse:
    return run_oracle(req)


@app.post("/build", response_model=BuildResponse)
def build_endpoint(req: BuildRequest) -> BuildResponse:
    return run_build(req)


@app.post("/verify", response_model=VerifyResponse)
def verify_endpoint(req: VerifyRequest) -> VerifyResponse:
    return run_verify(req)


@app.post("/density", response_model=DensityResponse)
def density_endpoint(req: DensityRequest) -> DensityResponse:
    return run_density(req)
