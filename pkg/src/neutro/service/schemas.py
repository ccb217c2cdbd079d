"""Request and response models for the HTTP service.

Triples travel as [t, i, f] arrays inside payloads that mirror the file
formats (sets, events, tables, concepts), and as {"t", "i", "f"} objects
when a single value is the whole answer.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

Triple3 = tuple[float, float, float]


class TripleResponse(BaseModel):
    t: float
    i: float
    f: float


class EvalRequest(BaseModel):
    expression: str
    bindings: dict[str, Triple3] = Field(default_factory=dict)
    percent: bool = False


class CanonicalRequest(BaseModel):
    expression: str
    percent: bool = False


class CanonicalResponse(BaseModel):
    canonical: str


class TableRowIn(BaseModel):
    name: str
    s: float
    u: float | None = None


class TableRowOut(BaseModel):
    name: str
    s: float
    u: float


class TableResponse(BaseModel):
    rows: list[TableRowOut]


class ClassifyRequest(BaseModel):
    s: float
    i: float
    u: float
    table: list[TableRowIn] | None = None


class ClassifyResponse(BaseModel):
    model: str
    distance: float
    interval: tuple[float, float]


class SetPayload(BaseModel):
    universe: list[str]
    membership: dict[str, Triple3] = Field(default_factory=dict)


class SetRequest(BaseModel):
    set: SetPayload


class SetPairRequest(BaseModel):
    left: SetPayload
    right: SetPayload


class SetResponse(BaseModel):
    set: SetPayload
    warnings: list[str] = Field(default_factory=list)


class PairSide(BaseModel):
    element: str
    value: Triple3


class ProductPair(BaseModel):
    left: PairSide
    right: PairSide


class ProductResponse(BaseModel):
    pairs: list[ProductPair]
    warnings: list[str] = Field(default_factory=list)


class EventsPayload(BaseModel):
    events: dict[str, Triple3] = Field(default_factory=dict)


class ChanceRequest(BaseModel):
    events: dict[str, Triple3] = Field(default_factory=dict)
    name: str


class ChanceResponse(BaseModel):
    t: float
    i: float
    f: float
    bound: tuple[float, float]


ConnectorName = Literal["not", "and", "or", "xor", "implies", "iff", "nand", "nor"]


class CombineRequest(BaseModel):
    events: dict[str, Triple3] = Field(default_factory=dict)
    kind: ConnectorName
    a: str
    b: str | None = None


class ResolveRequest(BaseModel):
    accepted: float
    rejected: float
    pending: float
    theta: float


class ResolveResponse(BaseModel):
    accepted: float
    rejected: float


class SummaryRequest(BaseModel):
    events: dict[str, Triple3] = Field(default_factory=dict)


class SummaryResponse(BaseModel):
    count: int
    mean: TripleResponse
    minima: Triple3
    maxima: Triple3


class TopoBinaryRequest(BaseModel):
    p: float
    q: float


class TopoUnaryRequest(BaseModel):
    p: float


class TopoResponse(BaseModel):
    kind: Literal["empty", "open", "whole"]
    parameter: float
    closed: bool = False


class IsoCheckRequest(BaseModel):
    step: float = 0.01


class IsoCheckResponse(BaseModel):
    step: float
    cases: int
    union_deviation: float
    intersect_deviation: float
    complement_deviation: float
    max_deviation: float
    tolerance: float
    passed: bool


class ConceptsRequest(BaseModel):
    attributes: list[str]
    A: list[str]
    AntiA: list[str]


class LawCheckOut(BaseModel):
    name: str
    holds: bool
    detail: str


class ConceptsResponse(BaseModel):
    non: list[str]
    neut: list[str]
    laws: list[LawCheckOut]
    all_hold: bool


class SweepRequest(BaseModel):
    step: float = Field(default=0.01, gt=0.0, le=0.5)
    seed: int = 0
    connector_cases: int = Field(default=100_000, ge=1, le=1_000_000)
    set_cases: int = Field(default=1_000, ge=1, le=100_000)
    sample_cases: int = Field(default=2_000, ge=1, le=100_000)


class PropertyOut(BaseModel):
    name: str
    cases: int
    max_deviation: float
    tolerance: float
    passed: bool
    counterexample: str | None = None


class SweepResponse(BaseModel):
    step: float
    seed: int
    all_passed: bool
    total_cases: int
    results: list[PropertyOut]


class HealthResponse(BaseModel):
    status: Literal["ok"]
