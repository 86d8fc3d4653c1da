"""Pydantic request/response models mirroring the JSON interchange formats.

Counts travel as decimal strings and ratios as num/den string pairs so
nothing is ever rounded; floats appear only in clearly marked courtesy
fields.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, Field as PField

from symrank.matspace import DEFAULT_AMBIENT_BUDGET
from symrank.codes import DEFAULT_CODEWORD_BUDGET


class FieldModel(BaseModel):
    p: int
    e: int = 1
    m: int = 1
    base_modulus: list[int] = PField(default_factory=list)
    ext_modulus: list[int] = PField(default_factory=list)


class MatrixModel(BaseModel):
    m: int
    upper: list[list[int]]


class CodeModel(BaseModel):
    field: FieldModel
    m: int
    d_design: Optional[int] = None
    basis: list[MatrixModel]


class RatioModel(BaseModel):
    num: str
    den: str


# --- count -----------------------------------------------------------------


class CountRequest(BaseModel):
    q: int
    m: int
    t_max: Optional[int] = None


class CountRow(BaseModel):
    t: int
    sphere: str
    ball: str
    sphere_lower: str
    sphere_upper: str
    ball_lower: str
    ball_upper: str
    within_bounds: bool


class CountResponse(BaseModel):
    q: int
    m: int
    rows: list[CountRow]


# --- oracle ------------------------------------------------------------------


class OracleRequest(BaseModel):
    q: int
    m: int
    ambient_budget: int = DEFAULT_AMBIENT_BUDGET


class OracleRow(BaseModel):
    t: int
    census: str
    formula: str
    match: bool


class OracleResponse(BaseModel):
    q: int
    m: int
    ok: bool
    rows: list[OracleRow]


# --- build ---------------------------------------------------------------------


class BuildRequest(BaseModel):
    q: int
    m: int
    d: int
    codeword_budget: int = DEFAULT_CODEWORD_BUDGET


class BuildResponse(BaseModel):
    code: CodeModel
    construction: Literal["direct", "punctured"]
    dimension: int
    cardinality: str
    min_distance: Optional[int] = None
    is_mrd: Optional[bool] = None
    measurement_refused: bool = False


# --- verify -----------------------------------------------------------------


class VerifyRequest(BaseModel):
    code: CodeModel
    checks: Optional[list[str]] = None
    radius: Optional[int] = None
    ambient_budget: int = DEFAULT_AMBIENT_BUDGET
    codeword_budget: int = DEFAULT_CODEWORD_BUDGET


class BoundCheckModel(BaseModel):
    name: str
    satisfied: bool
    slack: str


class VerifyResponse(BaseModel):
    q: int
    m: int
    dimension: int
    d_design: Optional[int]
    min_distance: Optional[int]
    is_mrd: Optional[bool]
    is_perfect: Optional[bool]
    packing_ok: Optional[bool]
    covering_ok: Optional[bool]
    covering_radius: Optional[int]
    density: Optional[RatioModel]
    bound_checks: list[BoundCheckModel]
    refusals: list[str]
    all_passed: bool


# --- density ----------------------------------------------------------------


class DensityRequest(BaseModel):
    q: int
    m_values: list[int]
    d: int
    ambient_budget: int = DEFAULT_AMBIENT_BUDGET
    codeword_budget: int = DEFAULT_CODEWORD_BUDGET


class DensityRow(BaseModel):
    q: int
    m: int
    d: int
    t: int
    dimension: int
    density: RatioModel
    density_float: float
    upper_bound: RatioModel
    attains_upper: bool
    source: Literal["measured", "formulaic"]


class DensityResponse(BaseModel):
    q: int
    d: int
    verdict: str
    rows: list[DensityRow]
