"""Sets over a finite universe with a triple-valued membership per element.

Set operations work elementwise through the logical connectors: complement is
negation, intersection is conjunction, union is weak disjunction.  Difference
uses the kernel d(x, y) = x * (1 - y) per component and renormalizes; it
agrees with intersecting against the complement up to float noise, because
the complement's rescale factor cancels in renormalization.

Payload form (JSON-compatible dicts)::

    {"universe": ["a", "b"], "membership": {"a": [0.5, 0.3, 0.2], ...}}

Elements missing from ``membership`` default to (0, 0, 1) with a warning;
membership keys outside the universe are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .connectors import ConnectorKind, apply_binary, negate
from .errors import InvariantViolation, UniverseMismatch
from .values import NeutrosophicTriple, RawTriple, make_triple, renormalize


@dataclass(frozen=True)
class Universe:
    """Ordered, distinct, nonempty element identifiers."""

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.elements:
            raise InvariantViolation("universe must not be empty")
        if len(set(self.elements)) != len(self.elements):
            raise InvariantViolation("universe elements must be distinct")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, item: object) -> bool:
        return item in self.elements


@dataclass(frozen=True)
class NeutrosophicSet:
    """Total map from universe elements to triples."""

    universe: Universe
    membership: Mapping[str, NeutrosophicTriple]

    def __post_init__(self) -> None:
        missing = [x for x in self.universe if x not in self.membership]
        if missing:
            raise InvariantViolation(f"membership missing elements: {missing}")
        extra = [x for x in self.membership if x not in self.universe]
        if extra:
            raise InvariantViolation(f"membership keys outside universe: {extra}")
        object.__setattr__(
            self, "membership", {x: self.membership[x] for x in self.universe}
        )

    def __getitem__(self, element: str) -> NeutrosophicTriple:
        return self.membership[element]


def _require_same_universe(m: NeutrosophicSet, n: NeutrosophicSet) -> None:
    if m.universe != n.universe:
        raise UniverseMismatch(
            f"sets are over different universes: "
            f"{m.universe.elements} vs {n.universe.elements}"
        )


def set_complement(m: NeutrosophicSet) -> NeutrosophicSet:
    return NeutrosophicSet(m.universe, {x: negate(m[x]) for x in m.universe})


def set_intersect(m: NeutrosophicSet, n: NeutrosophicSet) -> NeutrosophicSet:
    _require_same_universe(m, n)
    return NeutrosophicSet(
        m.universe,
        {x: apply_binary(ConnectorKind.CONJUNCTION, m[x], n[x]) for x in m.universe},
    )


def set_union(m: NeutrosophicSet, n: NeutrosophicSet) -> NeutrosophicSet:
    _require_same_universe(m, n)
    return NeutrosophicSet(
        m.universe,
        {
            x: apply_binary(ConnectorKind.WEAK_DISJUNCTION, m[x], n[x])
            for x in m.universe
        },
    )


def set_difference(m: NeutrosophicSet, n: NeutrosophicSet) -> NeutrosophicSet:
    _require_same_universe(m, n)
    result = {}
    for x in m.universe:
        a, b = m[x], n[x]
        result[x] = renormalize(
            RawTriple(a.t * (1.0 - b.t), a.i * (1.0 - b.i), a.f * (1.0 - b.f))
        )
    return NeutrosophicSet(m.universe, result)


def set_product(
    m: NeutrosophicSet, n: NeutrosophicSet
) -> list[tuple[tuple[str, NeutrosophicTriple], tuple[str, NeutrosophicTriple]]]:
    """Cartesian product: pairs ((x, m[x]), (y, n[y])) in universe order."""
    return [((x, m[x]), (y, n[y])) for x in m.universe for y in n.universe]


def load_set(payload: Mapping) -> tuple[NeutrosophicSet, list[str]]:
    """Build a set from its payload form; returns the set plus default warnings."""
    if not isinstance(payload, Mapping):
        raise InvariantViolation("set payload must be an object")
    universe_items = payload.get("universe")
    if not isinstance(universe_items, (list, tuple)):
        raise InvariantViolation("set payload needs a 'universe' array")
    universe = Universe(tuple(str(x) for x in universe_items))
    raw_membership = payload.get("membership", {})
    if not isinstance(raw_membership, Mapping):
        raise InvariantViolation("'membership' must be an object")
    extra = [x for x in raw_membership if x not in universe]
    if extra:
        raise InvariantViolation(f"membership keys outside universe: {extra}")
    membership: dict[str, NeutrosophicTriple] = {}
    warnings: list[str] = []
    for x in universe:
        if x in raw_membership:
            entry = raw_membership[x]
            if not isinstance(entry, (list, tuple)) or len(entry) != 3:
                raise InvariantViolation(
                    f"membership for {x!r} must be a [t, i, f] array"
                )
            membership[x] = make_triple(*(float(c) for c in entry))
        else:
            membership[x] = make_triple(0.0, 0.0, 1.0)
            warnings.append(f"element {x!r} has no membership entry; defaulted to (0,0,1)")
    return NeutrosophicSet(universe, membership), warnings


def dump_set(m: NeutrosophicSet) -> dict:
    """Payload form of a set, elements in universe order."""
    return {
        "universe": list(m.universe.elements),
        "membership": {x: [m[x].t, m[x].i, m[x].f] for x in m.universe},
    }
