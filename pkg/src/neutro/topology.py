"""A one-parameter family of open sets on the unit interval.

The family holds the empty set, the whole interval, and half-open sets
Open(p) with parameter p in (0, 1].  Union and intersection act on the
parameters through the weak-disjunction and conjunction kernels
(p + q - pq and pq), and the complement through negation (1 - p) with a
closed tag; Open(1) is a member distinct from the whole interval.
:func:`iso_check` measures how exactly the parameter arithmetic mirrors
the scalar connectors across a grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import OutOfRange

ISO_TOLERANCE = 1e-12


class TopoKind(Enum):
    EMPTY = "empty"
    OPEN = "open"
    WHOLE = "whole"


@dataclass(frozen=True)
class TopoSet:
    """Tagged member of the family; ``p`` is canonical (0 when empty, 1 when whole)."""

    kind: TopoKind
    p: float = 0.0

    def __post_init__(self) -> None:
        if self.kind is TopoKind.EMPTY:
            object.__setattr__(self, "p", 0.0)
        elif self.kind is TopoKind.WHOLE:
            object.__setattr__(self, "p", 1.0)
        elif not (0.0 < self.p <= 1.0):
            raise OutOfRange(f"open-set parameter {self.p!r} outside (0, 1]")

    @property
    def parameter(self) -> float:
        return self.p


def empty() -> TopoSet:
    return TopoSet(TopoKind.EMPTY)


def whole() -> TopoSet:
    return TopoSet(TopoKind.WHOLE)


def open_set(p: float) -> TopoSet:
    return TopoSet(TopoKind.OPEN, p)


def from_parameter(p: float) -> TopoSet:
    """Open set of parameter p; p = 0 canonically gives the empty set."""
    if not (0.0 <= p <= 1.0):
        raise OutOfRange(f"parameter {p!r} outside [0, 1]")
    if p == 0.0:
        return empty()
    return open_set(p)


@dataclass(frozen=True)
class ComplementResult:
    """Complement of a family member; complements are closed sets."""

    result: TopoSet
    closed: bool


def topo_union(a: TopoSet, b: TopoSet) -> TopoSet:
    if a.kind is TopoKind.WHOLE or b.kind is TopoKind.WHOLE:
        return whole()
    if a.kind is TopoKind.EMPTY:
        return b
    if b.kind is TopoKind.EMPTY:
        return a
    d = a.p + b.p - a.p * b.p
    return open_set(min(1.0, max(0.0, d)))


def topo_intersect(a: TopoSet, b: TopoSet) -> TopoSet:
    if a.kind is TopoKind.EMPTY or b.kind is TopoKind.EMPTY:
        return empty()
    if a.kind is TopoKind.WHOLE:
        return b
    if b.kind is TopoKind.WHOLE:
        return a
    return from_parameter(min(1.0, a.p * b.p))


def topo_complement(a: TopoSet) -> ComplementResult:
    if a.kind is TopoKind.EMPTY:
        return ComplementResult(whole(), closed=True)
    if a.kind is TopoKind.WHOLE:
        return ComplementResult(empty(), closed=True)
    return ComplementResult(from_parameter(1.0 - a.p), closed=True)


@dataclass(frozen=True)
class IsoReport:
    """Grid comparison of parameter arithmetic against the scalar kernels."""

    step: float
    cases: int
    union_deviation: float
    intersect_deviation: float
    complement_deviation: float
    max_deviation: float
    tolerance: float
    passed: bool


def _grid(step: float) -> list[float]:
    count = int(1.0 / step + 1e-9)
    points = [min(1.0, k * step) for k in range(count + 1)]
    if points[-1] != 1.0:
        points.append(1.0)
    return points


def iso_check(step: float = 0.01) -> IsoReport:
    """Check that union, intersection, and complement act on parameters
    exactly like weak disjunction, conjunction, and negation.

    Grid members come from :func:`from_parameter` (so 0 is the empty set),
    with the whole interval added as an extra case.
    """
    if not (0.0 < step <= 1.0):
        raise OutOfRange(f"grid step {step!r} outside (0, 1]")
    members = [from_parameter(p) for p in _grid(step)]
    members.append(whole())
    cases = 0
    union_dev = 0.0
    intersect_dev = 0.0
    complement_dev = 0.0
    for a in members:
        complement_dev = max(
            complement_dev,
            abs(topo_complement(a).result.parameter - (1.0 - a.parameter)),
        )
        cases += 1
        for b in members:
            pa, pb = a.parameter, b.parameter
            union_dev = max(
                union_dev,
                abs(topo_union(a, b).parameter - (pa + pb - pa * pb)),
            )
            intersect_dev = max(
                intersect_dev,
                abs(topo_intersect(a, b).parameter - pa * pb),
            )
            cases += 2
    max_dev = max(union_dev, intersect_dev, complement_dev)
    return IsoReport(
        step=step,
        cases=cases,
        union_deviation=union_dev,
        intersect_deviation=intersect_dev,
        complement_deviation=complement_dev,
        max_deviation=max_dev,
        tolerance=ISO_TOLERANCE,
        passed=max_dev <= ISO_TOLERANCE,
    )
