"""HTTP surface over the computation engine.

Every endpoint is stateless: the request carries all inputs (expressions,
bindings, payloads), the response carries the full answer.  Domain errors
surface as 422 with a structured detail: {"kind", "message", "position"?}.
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import concepts as concepts_mod
from .. import orientation as orientation_mod
from .. import probability as probability_mod
from .. import sets as sets_mod
from .. import topology as topology_mod
from ..connectors import ConnectorKind
from ..errors import NeutroError
from ..expressions import evaluate, format_expr, parse_text
from ..sweep import run_sweep
from ..values import from_percent, make_triple, true_bound
from . import schemas

app = FastAPI(title="neutro", description="Triple-valued computation engine")


@app.exception_handler(NeutroError)
def _domain_error(request, exc: NeutroError):
    message = getattr(exc, "message", None) or str(exc)
    detail: dict = {"kind": type(exc).__name__, "message": message}
    position = getattr(exc, "position", None)
    if position is not None:
        detail["position"] = position
    return JSONResponse(status_code=422, content={"detail": detail})


def _triple_out(value) -> schemas.TripleResponse:
    return schemas.TripleResponse(t=value.t, i=value.i, f=value.f)


def _build_env(bindings: dict, percent: bool) -> dict:
    build = from_percent if percent else make_triple
    return {name: build(*components) for name, components in bindings.items()}


@app.get("/health", response_model=schemas.HealthResponse)
def health() -> schemas.HealthResponse:
    return schemas.HealthResponse(status="ok")


@app.post("/expressions/eval", response_model=schemas.TripleResponse)
def expressions_eval(request: schemas.EvalRequest) -> schemas.TripleResponse:
    env = _build_env(request.bindings, request.percent)
    expr = parse_text(request.expression, percent=request.percent)
    return _triple_out(evaluate(expr, env))


@app.post("/expressions/canonical", response_model=schemas.CanonicalResponse)
def expressions_canonical(
    request: schemas.CanonicalRequest,
) -> schemas.CanonicalResponse:
    expr = parse_text(request.expression, percent=request.percent)
    return schemas.CanonicalResponse(canonical=format_expr(expr))


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify(request: schemas.ClassifyRequest) -> schemas.ClassifyResponse:
    if request.table is None:
        table = orientation_mod.builtin_table()
    else:
        table = orientation_mod.table_from_payload(
            {"rows": [row.model_dump(exclude_none=True) for row in request.table]}
        )
    assessment = orientation_mod.SystemAssessment(
        s=request.s, i=request.i, u=request.u
    )
    outcome = orientation_mod.classify(assessment, table)
    return schemas.ClassifyResponse(
        model=outcome.model, distance=outcome.distance, interval=outcome.interval
    )


@app.get("/orientation/table", response_model=schemas.TableResponse)
def orientation_table() -> schemas.TableResponse:
    return schemas.TableResponse(
        rows=[
            schemas.TableRowOut(name=row.name, s=row.s, u=row.u)
            for row in orientation_mod.builtin_table().rows
        ]
    )


def _load_set(payload: schemas.SetPayload):
    return sets_mod.load_set(payload.model_dump())


def _set_out(result, warnings: list[str]) -> schemas.SetResponse:
    return schemas.SetResponse(
        set=schemas.SetPayload(**sets_mod.dump_set(result)), warnings=warnings
    )


@app.post("/sets/complement", response_model=schemas.SetResponse)
def sets_complement(request: schemas.SetRequest) -> schemas.SetResponse:
    m, warnings = _load_set(request.set)
    return _set_out(sets_mod.set_complement(m), warnings)


def _load_pair(request: schemas.SetPairRequest):
    left, warn_left = _load_set(request.left)
    right, warn_right = _load_set(request.right)
    prefixed = [f"left: {w}" for w in warn_left] + [f"right: {w}" for w in warn_right]
    return left, right, prefixed


@app.post("/sets/union", response_model=schemas.SetResponse)
def sets_union(request: schemas.SetPairRequest) -> schemas.SetResponse:
    left, right, warnings = _load_pair(request)
    return _set_out(sets_mod.set_union(left, right), warnings)


@app.post("/sets/intersect", response_model=schemas.SetResponse)
def sets_intersect(request: schemas.SetPairRequest) -> schemas.SetResponse:
    left, right, warnings = _load_pair(request)
    return _set_out(sets_mod.set_intersect(left, right), warnings)


@app.post("/sets/difference", response_model=schemas.SetResponse)
def sets_difference(request: schemas.SetPairRequest) -> schemas.SetResponse:
    left, right, warnings = _load_pair(request)
    return _set_out(sets_mod.set_difference(left, right), warnings)


@app.post("/sets/product", response_model=schemas.ProductResponse)
def sets_product(request: schemas.SetPairRequest) -> schemas.ProductResponse:
    left, right, warnings = _load_pair(request)
    pairs = [
        schemas.ProductPair(
            left=schemas.PairSide(element=x, value=mx.as_tuple()),
            right=schemas.PairSide(element=y, value=ny.as_tuple()),
        )
        for (x, mx), (y, ny) in sets_mod.set_product(left, right)
    ]
    return schemas.ProductResponse(pairs=pairs, warnings=warnings)


@app.post("/probability/chance", response_model=schemas.ChanceResponse)
def probability_chance(request: schemas.ChanceRequest) -> schemas.ChanceResponse:
    space = probability_mod.load_events({"events": request.events})
    value = probability_mod.event_chance(space, request.name)
    return schemas.ChanceResponse(
        t=value.t, i=value.i, f=value.f, bound=true_bound(value)
    )


@app.post("/probability/combine", response_model=schemas.TripleResponse)
def probability_combine(request: schemas.CombineRequest) -> schemas.TripleResponse:
    space = probability_mod.load_events({"events": request.events})
    value = probability_mod.combine_events(
        space, ConnectorKind(request.kind), request.a, request.b
    )
    return _triple_out(value)


@app.post("/probability/resolve", response_model=schemas.ResolveResponse)
def probability_resolve(request: schemas.ResolveRequest) -> schemas.ResolveResponse:
    pool = probability_mod.PendingPool(
        accepted=request.accepted, rejected=request.rejected, pending=request.pending
    )
    resolved = probability_mod.resolve_pending(pool, request.theta)
    return schemas.ResolveResponse(
        accepted=resolved.accepted, rejected=resolved.rejected
    )


@app.post("/probability/summary", response_model=schemas.SummaryResponse)
def probability_summary(request: schemas.SummaryRequest) -> schemas.SummaryResponse:
    space = probability_mod.load_events({"events": request.events})
    summary = probability_mod.summarize(space)
    return schemas.SummaryResponse(
        count=summary.count,
        mean=_triple_out(summary.mean),
        minima=summary.minima,
        maxima=summary.maxima,
    )


def _topo_out(result, closed: bool = False) -> schemas.TopoResponse:
    return schemas.TopoResponse(
        kind=result.kind.value, parameter=result.parameter, closed=closed
    )


@app.post("/topology/union", response_model=schemas.TopoResponse)
def topology_union(request: schemas.TopoBinaryRequest) -> schemas.TopoResponse:
    result = topology_mod.topo_union(
        topology_mod.from_parameter(request.p), topology_mod.from_parameter(request.q)
    )
    return _topo_out(result)


@app.post("/topology/intersect", response_model=schemas.TopoResponse)
def topology_intersect(request: schemas.TopoBinaryRequest) -> schemas.TopoResponse:
    result = topology_mod.topo_intersect(
        topology_mod.from_parameter(request.p), topology_mod.from_parameter(request.q)
    )
    return _topo_out(result)


@app.post("/topology/complement", response_model=schemas.TopoResponse)
def topology_complement(request: schemas.TopoUnaryRequest) -> schemas.TopoResponse:
    outcome = topology_mod.topo_complement(topology_mod.from_parameter(request.p))
    return _topo_out(outcome.result, closed=outcome.closed)


@app.post("/topology/iso-check", response_model=schemas.IsoCheckResponse)
def topology_iso_check(request: schemas.IsoCheckRequest) -> schemas.IsoCheckResponse:
    report = topology_mod.iso_check(request.step)
    return schemas.IsoCheckResponse(
        step=report.step,
        cases=report.cases,
        union_deviation=report.union_deviation,
        intersect_deviation=report.intersect_deviation,
        complement_deviation=report.complement_deviation,
        max_deviation=report.max_deviation,
        tolerance=report.tolerance,
        passed=report.passed,
    )


@app.post("/concepts/check", response_model=schemas.ConceptsResponse)
def concepts_check(request: schemas.ConceptsRequest) -> schemas.ConceptsResponse:
    universe = concepts_mod.load_concepts(request.model_dump())
    report = concepts_mod.verify_laws(universe)
    return schemas.ConceptsResponse(
        non=list(concepts_mod.non_of(universe)),
        neut=list(concepts_mod.neut_of(universe)),
        laws=[
            schemas.LawCheckOut(name=c.name, holds=c.holds, detail=c.detail)
            for c in report.checks
        ],
        all_hold=report.all_hold,
    )


@app.post("/properties/sweep", response_model=schemas.SweepResponse)
def properties_sweep(request: schemas.SweepRequest) -> schemas.SweepResponse:
    report = run_sweep(
        request.step,
        request.seed,
        connector_cases=request.connector_cases,
        set_cases=request.set_cases,
        sample_cases=request.sample_cases,
    )
    return schemas.SweepResponse(
        step=report.step,
        seed=report.seed,
        all_passed=report.all_passed,
        total_cases=report.total_cases,
        results=[
            schemas.PropertyOut(
                name=r.name,
                cases=r.cases,
                max_deviation=r.max_deviation,
                tolerance=r.tolerance,
                passed=r.passed,
                counterexample=r.counterexample,
            )
            for r in report.results
        ],
    )
