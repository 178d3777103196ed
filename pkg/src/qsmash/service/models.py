"""Request and response shapes for the HTTP service.

Element payloads carry both the canonical text form and a structured
`terms` list (one record per monomial with integer coefficient arrays,
constant term first), so clients never have to re-parse the text.
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class Problem(BaseModel):
    message: str
    column: Optional[int] = None


class HealthResponse(BaseModel):
    status: str
    version: str


class NormalizeRequest(BaseModel):
    text: str
    algebra: str = "A"  # "A", a quotient preset, or "preset(param)"


class NormalizeResponse(BaseModel):
    algebra: str
    text: str
    terms: List[dict]


class VerifyRequest(BaseModel):
    suite: str = "all"


class CheckRow(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: List[CheckRow]


class AutApplyRequest(BaseModel):
    aut: str
    text: str


class AutPairRequest(BaseModel):
    first: str
    second: str


class AutRequest(BaseModel):
    aut: str


class AutResponse(BaseModel):
    literal: str


class ActRequest(BaseModel):
    module: str
    word: str
    start: str  # "(i,m)" for weight modules, an integer for the others


class VectorEntry(BaseModel):
    label: str
    coeff: str
    numerator: List[int]
    denominator: List[int]


class ActResponse(BaseModel):
    module: str
    start: str
    vector: List[VectorEntry]


class CenterRequest(BaseModel):
    algebra: str = "A"
    degree: int = Field(3, ge=0, le=6)


class CenterResponse(BaseModel):
    algebra: str
    degree: int
    dimension: int
    basis: List[str]


class GwaCheckRequest(BaseModel):
    triples: int = Field(100, ge=1, le=2000)
    pairs: int = Field(200, ge=1, le=5000)
    seed: int = 20260413
