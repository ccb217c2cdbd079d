"""Grid and randomized verification of the engine's algebraic properties.

Each property runs over the unit grid (step configurable) or a seeded random
sample, records the worst deviation seen, and compares it against the
property's own tolerance.  The report is deterministic for a given
(step, seed) pair; random case counts are fixed parameters, not functions of
the step.  Exact properties carry tolerance 0; identities that hold only up
to float rounding carry 1e-12 (1e-15 for the double-negation involution,
which binary64 cannot reproduce bit-exactly below t = 0.5).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .connectors import (
    ConnectorKind,
    apply_binary,
    apply_nary,
    eval_kernel,
    negate,
    parabola_analysis,
)
from .errors import NeutroError, OutOfRange
from .sets import (
    NeutrosophicSet,
    Universe,
    set_complement,
    set_difference,
    set_intersect,
    set_union,
)
from .topology import (
    from_parameter,
    iso_check,
    topo_intersect,
    topo_union,
)
from .values import NeutrosophicTriple, make_triple

_EXACT = 0.0
_CLOSE = 1e-12
_INVOLUTION_TOL = 1e-15
_LIMIT_THRESHOLD = 1e-9
_NORMALIZATION_TOL = 1e-9
_VERTEX_TOL = 1e-3


@dataclass(frozen=True)
class PropertyResult:
    name: str
    cases: int
    max_deviation: float
    tolerance: float
    passed: bool
    counterexample: str | None


@dataclass(frozen=True)
class SweepReport:
    step: float
    seed: int
    results: tuple[PropertyResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def total_cases(self) -> int:
        return sum(r.cases for r in self.results)


class _Tracker:
    """Accumulates worst deviation and the first offending case."""

    def __init__(self, tolerance: float):
        self.tolerance = tolerance
        self.cases = 0
        self.max_deviation = 0.0
        self.counterexample: str | None = None

    def record(self, deviation: float, case: object = None) -> None:
        self.cases += 1
        if deviation > self.max_deviation:
            self.max_deviation = deviation
        if deviation > self.tolerance and self.counterexample is None:
            self.counterexample = repr(case)

    def fail(self, case: object) -> None:
        self.record(float("inf"), case)

    def result(self, name: str) -> PropertyResult:
        return PropertyResult(
            name=name,
            cases=self.cases,
            max_deviation=self.max_deviation,
            tolerance=self.tolerance,
            passed=self.max_deviation <= self.tolerance,
            counterexample=self.counterexample,
        )


def _grid(step: float) -> list[float]:
    count = int(1.0 / step + 1e-9)
    points = [min(1.0, k * step) for k in range(count + 1)]
    if points[-1] != 1.0:
        points.append(1.0)
    return points


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _random_triple(rng: random.Random) -> NeutrosophicTriple:
    t = rng.random()
    i = rng.random() * (1.0 - t)
    return make_triple(t, i, (1.0 - t) - i)


def _random_set(rng: random.Random, universe: Universe) -> NeutrosophicSet:
    return NeutrosophicSet(universe, {x: _random_triple(rng) for x in universe})


def _conjunction_upper_bound(grid: list[float]) -> PropertyResult:
    track = _Tracker(_EXACT)
    for p in grid:
        for q in grid:
            t = eval_kernel(ConnectorKind.CONJUNCTION, p, q)
            track.record(max(0.0, t - min(p, q)), ("p", p, "q", q, "t", t))
    return track.result("conjunction-upper-bound")


def _weak_disjunction_lower_bound(grid: list[float]) -> PropertyResult:
    track = _Tracker(_EXACT)
    for p in grid:
        for q in grid:
            t = eval_kernel(ConnectorKind.WEAK_DISJUNCTION, p, q)
            track.record(max(0.0, max(p, q) - t), ("p", p, "q", q, "t", t))
    return track.result("weak-disjunction-lower-bound")


def _iterated_conjunction_vanishes(grid: list[float]) -> PropertyResult:
    track = _Tracker(_LIMIT_THRESHOLD)
    for p in grid:
        if p > 0.9:
            continue
        t = p
        for _ in range(199):
            t = eval_kernel(ConnectorKind.CONJUNCTION, t, p)
        track.record(t, ("p", p, "t200", t))
    return track.result("iterated-conjunction-vanishes")


def _iterated_disjunction_saturates(grid: list[float]) -> PropertyResult:
    track = _Tracker(_LIMIT_THRESHOLD)
    for p in grid:
        if p < 0.1:
            continue
        t = p
        for _ in range(199):
            t = eval_kernel(ConnectorKind.WEAK_DISJUNCTION, t, p)
        track.record(1.0 - t, ("p", p, "t200", t))
    return track.result("iterated-disjunction-saturates")


def _implication_limit_table(grid: list[float]) -> PropertyResult:
    track = _Tracker(_CLOSE)
    imp = ConnectorKind.IMPLICATION
    for v in grid:
        track.record(abs(eval_kernel(imp, 0.0, v) - 1.0), ("I(0,q)", v))
        track.record(abs(eval_kernel(imp, v, 1.0) - 1.0), ("I(p,1)", v))
        track.record(abs(eval_kernel(imp, 1.0, v) - v), ("I(1,q)", v))
        track.record(abs(eval_kernel(imp, v, 0.0) - (1.0 - v)), ("I(p,0)", v))
    return track.result("implication-limit-table")


def _equivalence_symmetry(grid: list[float]) -> PropertyResult:
    track = _Tracker(_CLOSE)
    eq = ConnectorKind.EQUIVALENCE
    for p in grid:
        for q in grid:
            base = eval_kernel(eq, p, q)
            track.record(abs(base - eval_kernel(eq, q, p)), ("swap", p, q))
            track.record(
                abs(base - eval_kernel(eq, 1.0 - p, 1.0 - q)), ("mirror", p, q)
            )
    return track.result("equivalence-symmetry")


def _equivalence_corners(grid: list[float]) -> PropertyResult:
    track = _Tracker(_CLOSE)
    eq = ConnectorKind.EQUIVALENCE
    track.record(abs(eval_kernel(eq, 0.0, 0.0) - 1.0), "E(0,0)")
    track.record(abs(eval_kernel(eq, 1.0, 1.0) - 1.0), "E(1,1)")
    track.record(abs(eval_kernel(eq, 0.0, 1.0)), "E(0,1)")
    track.record(abs(eval_kernel(eq, 1.0, 0.0)), "E(1,0)")
    for q in grid:
        track.record(abs(eval_kernel(eq, 0.0, q) - (1.0 - q)), ("E(0,q)", q))
        track.record(abs(eval_kernel(eq, 1.0, q) - q), ("E(1,q)", q))
    return track.result("equivalence-corners")


def _equivalence_parabola_match(grid: list[float]) -> PropertyResult:
    track = _Tracker(_CLOSE)
    eq = ConnectorKind.EQUIVALENCE
    for k in range(1, 10):
        q = k / 10.0
        curve = parabola_analysis(q)
        for p in grid:
            track.record(
                abs(eval_kernel(eq, p, q) - curve.evaluate(p)), ("q", q, "p", p)
            )
    return track.result("equivalence-parabola-match")


def _equivalence_parabola_vertex() -> PropertyResult:
    track = _Tracker(_VERTEX_TOL)
    eq = ConnectorKind.EQUIVALENCE
    for k in range(1, 10):
        q = k / 10.0
        curve = parabola_analysis(q)
        best_p, best_value = 0.0, eval_kernel(eq, 0.0, q)
        for j in range(1, 10001):
            p = j / 10000.0
            value = eval_kernel(eq, p, q)
            if value > best_value:
                best_p, best_value = p, value
        track.record(abs(best_p - curve.p_max), ("q", q, "argmax", best_p))
    return track.result("equivalence-parabola-vertex")


def _sheffer_peirce_composition(grid: list[float]) -> PropertyResult:
    track = _Tracker(_CLOSE)
    for p in grid:
        for q in grid:
            sheffer = eval_kernel(ConnectorKind.SHEFFER, p, q)
            via_d1 = eval_kernel(ConnectorKind.WEAK_DISJUNCTION, 1.0 - p, 1.0 - q)
            track.record(abs(sheffer - via_d1), ("sheffer", p, q))
            peirce = eval_kernel(ConnectorKind.PEIRCE, p, q)
            via_c = eval_kernel(ConnectorKind.CONJUNCTION, 1.0 - p, 1.0 - q)
            track.record(abs(peirce - via_c), ("peirce", p, q))
    return track.result("sheffer-peirce-composition")


def _negation_t_involution(grid: list[float], seed: int) -> PropertyResult:
    track = _Tracker(_INVOLUTION_TOL)
    rng = _rng(seed, "negation-t-involution")
    for p in grid:
        i = 0.5 * (1.0 - p)
        v = make_triple(p, i, (1.0 - p) - i)
        track.record(abs(negate(negate(v)).t - v.t), ("grid t", p))
    for _ in range(2000):
        v = _random_triple(rng)
        track.record(abs(negate(negate(v)).t - v.t), ("random t", v.t))
    return track.result("negation-t-involution")


def _strong_disjunction_closure(grid: list[float]) -> PropertyResult:
    track = _Tracker(_EXACT)
    for p in grid:
        for q in grid:
            t = eval_kernel(ConnectorKind.STRONG_DISJUNCTION, p, q)
            track.record(max(0.0, max(t - 1.0, -t)), ("p", p, "q", q, "t", t))
    return track.result("strong-disjunction-closure")


def _connector_normalization_closure(seed: int, cases: int) -> PropertyResult:
    track = _Tracker(_NORMALIZATION_TOL)
    rng = _rng(seed, "connector-normalization-closure")
    kinds = list(ConnectorKind)
    for n in range(cases):
        kind = kinds[n % len(kinds)]
        a = _random_triple(rng)
        try:
            if kind is ConnectorKind.NEGATION:
                out = negate(a)
                case = (kind.value, a.as_tuple())
            else:
                b = _random_triple(rng)
                out = apply_binary(kind, a, b)
                case = (kind.value, a.as_tuple(), b.as_tuple())
        except NeutroError as exc:
            track.fail((kind.value, str(exc)))
            continue
        excursion = max(
            0.0,
            *(max(c - 1.0, -c) for c in out.as_tuple()),
        )
        track.record(max(excursion, abs(sum(out.as_tuple()) - 1.0)), case)
    return track.result("connector-normalization-closure")


def _nary_fold_matches_power(seed: int) -> PropertyResult:
    track = _Tracker(_CLOSE)
    rng = _rng(seed, "nary-fold-power")
    for _ in range(200):
        v = _random_triple(rng)
        n = rng.randrange(1, 6)
        folded = apply_nary(ConnectorKind.CONJUNCTION, [v] * n)
        expected = v.t
        for _ in range(n - 1):
            expected = expected * v.t
        track.record(abs(folded.t - expected), ("t", v.t, "n", n))
    return track.result("nary-fold-power")


def _set_difference_identity(seed: int, cases: int) -> PropertyResult:
    track = _Tracker(_CLOSE)
    rng = _rng(seed, "set-difference-identity")
    universe = Universe(("a", "b", "c", "d"))
    for _ in range(cases):
        m = _random_set(rng, universe)
        n = _random_set(rng, universe)
        direct = set_difference(m, n)
        composed = set_intersect(m, set_complement(n))
        for x in universe:
            for lhs, rhs in zip(direct[x].as_tuple(), composed[x].as_tuple()):
                track.record(abs(lhs - rhs), ("element", x, "m", m[x].as_tuple()))
    return track.result("set-difference-identity")


def _set_operation_normalization(seed: int, cases: int) -> PropertyResult:
    track = _Tracker(_NORMALIZATION_TOL)
    rng = _rng(seed, "set-operation-normalization")
    universe = Universe(("a", "b", "c", "d"))
    for _ in range(cases):
        m = _random_set(rng, universe)
        n = _random_set(rng, universe)
        try:
            for out in (
                set_complement(m),
                set_intersect(m, n),
                set_union(m, n),
                set_difference(m, n),
            ):
                for x in universe:
                    track.record(abs(sum(out[x].as_tuple()) - 1.0), ("element", x))
        except NeutroError as exc:
            track.fail(str(exc))
    return track.result("set-operation-normalization")


def _set_commutativity(seed: int, cases: int) -> PropertyResult:
    track = _Tracker(_EXACT)
    rng = _rng(seed, "set-commutativity")
    universe = Universe(("a", "b", "c", "d"))
    for _ in range(cases):
        m = _random_set(rng, universe)
        n = _random_set(rng, universe)
        for op in (set_intersect, set_union):
            ab, ba = op(m, n), op(n, m)
            for x in universe:
                for lhs, rhs in zip(ab[x].as_tuple(), ba[x].as_tuple()):
                    track.record(abs(lhs - rhs), (op.__name__, x))
    return track.result("set-commutativity")


def _set_t_associativity(seed: int, cases: int) -> PropertyResult:
    track = _Tracker(_CLOSE)
    rng = _rng(seed, "set-t-associativity")
    universe = Universe(("a", "b", "c", "d"))
    for _ in range(cases):
        m = _random_set(rng, universe)
        n = _random_set(rng, universe)
        p = _random_set(rng, universe)
        for op in (set_intersect, set_union):
            left = op(op(m, n), p)
            right = op(m, op(n, p))
            for x in universe:
                track.record(abs(left[x].t - right[x].t), (op.__name__, x))
    return track.result("set-t-associativity")


def _topology_closure(grid: list[float]) -> PropertyResult:
    track = _Tracker(_EXACT)
    members = [from_parameter(p) for p in grid]
    for a in members:
        for b in members:
            for out in (topo_union(a, b), topo_intersect(a, b)):
                p = out.parameter
                track.record(max(0.0, max(p - 1.0, -p)), (a.parameter, b.parameter))
    return track.result("topology-closure")


def _topology_commutativity_associativity(
    grid: list[float], seed: int, cases: int
) -> PropertyResult:
    track = _Tracker(_CLOSE)
    members = [from_parameter(p) for p in grid]
    for a in members:
        for b in members:
            for op in (topo_union, topo_intersect):
                track.record(
                    abs(op(a, b).parameter - op(b, a).parameter),
                    (op.__name__, a.parameter, b.parameter),
                )
    rng = _rng(seed, "topology-associativity")
    for _ in range(cases):
        a, b, c = (from_parameter(rng.random()) for _ in range(3))
        for op in (topo_union, topo_intersect):
            track.record(
                abs(op(op(a, b), c).parameter - op(a, op(b, c)).parameter),
                (op.__name__, a.parameter, b.parameter, c.parameter),
            )
    return track.result("topology-commutativity-associativity")


def _topology_homomorphism(step: float) -> PropertyResult:
    report = iso_check(step)
    track = _Tracker(report.tolerance)
    track.cases = report.cases
    track.max_deviation = report.max_deviation
    if not report.passed:
        track.counterexample = (
            f"union={report.union_deviation!r} intersect={report.intersect_deviation!r} "
            f"complement={report.complement_deviation!r}"
        )
    return track.result("topology-homomorphism")


def run_sweep(
    step: float = 0.01,
    seed: int = 0,
    *,
    connector_cases: int = 100_000,
    set_cases: int = 1_000,
    sample_cases: int = 2_000,
) -> SweepReport:
    """Run every property at the given grid step and seed."""
    if not (0.0 < step <= 0.5):
        raise OutOfRange(f"grid step {step!r} outside (0, 0.5]")
    grid = _grid(step)
    results = (
        _conjunction_upper_bound(grid),
        _weak_disjunction_lower_bound(grid),
        _iterated_conjunction_vanishes(grid),
        _iterated_disjunction_saturates(grid),
        _implication_limit_table(grid),
        _equivalence_symmetry(grid),
        _equivalence_corners(grid),
        _equivalence_parabola_match(grid),
        _equivalence_parabola_vertex(),
        _sheffer_peirce_composition(grid),
        _negation_t_involution(grid, seed),
        _strong_disjunction_closure(grid),
        _connector_normalization_closure(seed, connector_cases),
        _nary_fold_matches_power(seed),
        _set_difference_identity(seed, set_cases),
        _set_operation_normalization(seed, max(1, set_cases // 4)),
        _set_commutativity(seed, max(1, set_cases // 4)),
        _set_t_associativity(seed, max(1, set_cases // 4)),
        _topology_closure(grid),
        _topology_commutativity_associativity(grid, seed, sample_cases),
        _topology_homomorphism(step),
    )
    return SweepReport(step=step, seed=seed, results=results)


def render_report(report: SweepReport) -> str:
    """Stable text rendering: one line per property plus a summary line."""
    lines = []
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(
            f"[{status}] {r.name}: cases={r.cases} "
            f"max_deviation={r.max_deviation:.3e} tolerance={r.tolerance:.0e}"
        )
        if r.counterexample is not None:
            lines.append(f"       counterexample: {r.counterexample}")
    verdict = "all properties pass" if report.all_passed else "FAILURES PRESENT"
    lines.append(
        f"checked {len(report.results)} properties, {report.total_cases} cases "
        f"(step={report.step:g}, seed={report.seed}): {verdict}"
    )
    return "\n".join(lines)
