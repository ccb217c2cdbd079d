"""Event spaces with triple-valued chances.

An event space is a flat map from event names to triples.  Connectors combine
named events exactly as they combine propositions; a pending pool tracks
accepted / rejected / undecided mass and resolves the undecided part by a
split fraction theta.

Payload form: ``{"events": {"rain": [0.5, 0.2, 0.3], ...}}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .connectors import ConnectorKind, apply_binary, negate
from .errors import (
    EmptyInput,
    EmptySpace,
    InvariantViolation,
    NotNormalized,
    OutOfRange,
    UnknownEvent,
)
from .values import EPS_NORM, NeutrosophicTriple, make_triple


@dataclass(frozen=True)
class EventSpace:
    """Named events and their chance triples."""

    events: Mapping[str, NeutrosophicTriple]

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", dict(self.events))

    def __len__(self) -> int:
        return len(self.events)

    def __contains__(self, name: object) -> bool:
        return name in self.events


@dataclass(frozen=True)
class PendingPool:
    """Mass split into accepted, rejected, and still-pending parts."""

    accepted: float
    rejected: float
    pending: float

    def __post_init__(self) -> None:
        for label, value in (
            ("accepted", self.accepted),
            ("rejected", self.rejected),
            ("pending", self.pending),
        ):
            if not (-EPS_NORM <= value <= 1.0 + EPS_NORM):
                raise OutOfRange(f"{label} fraction {value!r} outside [0, 1]")
        total = self.accepted + self.rejected + self.pending
        if abs(total - 1.0) > EPS_NORM:
            raise NotNormalized(f"pool fractions sum to {total!r}, expected 1")


@dataclass(frozen=True)
class ResolvedPool:
    """Final accepted and rejected fractions once nothing is pending."""

    accepted: float
    rejected: float


@dataclass(frozen=True)
class SpaceSummary:
    """Componentwise statistics over every event in a space."""

    count: int
    mean: NeutrosophicTriple
    minima: tuple[float, float, float]
    maxima: tuple[float, float, float]


def event_chance(space: EventSpace, name: str) -> NeutrosophicTriple:
    """Chance triple of a named event."""
    try:
        return space.events[name]
    except KeyError:
        raise UnknownEvent(name)


def combine_events(
    space: EventSpace,
    kind: ConnectorKind,
    name_a: str,
    name_b: str | None = None,
) -> NeutrosophicTriple:
    """Apply a connector to one or two named events."""
    a = event_chance(space, name_a)
    if kind is ConnectorKind.NEGATION:
        if name_b is not None:
            raise InvariantViolation("negation combines a single event")
        return negate(a)
    if name_b is None:
        raise EmptyInput(f"{kind.value} needs a second event name")
    return apply_binary(kind, a, event_chance(space, name_b))


def resolve_pending(pool: PendingPool, theta: float) -> ResolvedPool:
    """Split the pending mass: a fraction theta joins accepted, the rest rejected."""
    if not (0.0 <= theta <= 1.0):
        raise OutOfRange(f"theta {theta!r} outside [0, 1]")
    return ResolvedPool(
        accepted=pool.accepted + theta * pool.pending,
        rejected=pool.rejected + (1.0 - theta) * pool.pending,
    )


def summarize(space: EventSpace) -> SpaceSummary:
    """Componentwise mean, min, and max over all events, plus the count."""
    if not space.events:
        raise EmptySpace("cannot summarize an event space with no events")
    triples = list(space.events.values())
    count = len(triples)
    mean = make_triple(
        sum(v.t for v in triples) / count,
        sum(v.i for v in triples) / count,
        sum(v.f for v in triples) / count,
    )
    minima = (
        min(v.t for v in triples),
        min(v.i for v in triples),
        min(v.f for v in triples),
    )
    maxima = (
        max(v.t for v in triples),
        max(v.i for v in triples),
        max(v.f for v in triples),
    )
    return SpaceSummary(count=count, mean=mean, minima=minima, maxima=maxima)


def load_events(payload: Mapping) -> EventSpace:
    """Build an event space from its payload form."""
    if not isinstance(payload, Mapping):
        raise InvariantViolation("events payload must be an object")
    raw = payload.get("events")
    if not isinstance(raw, Mapping):
        raise InvariantViolation("events payload needs an 'events' object")
    events: dict[str, NeutrosophicTriple] = {}
    for name, entry in raw.items():
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise InvariantViolation(f"event {name!r} must map to a [t, i, f] array")
        events[str(name)] = make_triple(*(float(c) for c in entry))
    return EventSpace(events)


def dump_events(space: EventSpace) -> dict:
    """Payload form of an event space."""
    return {
        "events": {name: [v.t, v.i, v.f] for name, v in space.events.items()}
    }
