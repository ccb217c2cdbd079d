"""Crisp concept algebra over a finite attribute universe.

A concept is a subset A of the attributes, together with its declared
opposite Anti-A.  Everything that is not A is Non-A; what is neither A nor
Anti-A is the neutral zone Neut-A.  The three regions A, Neut-A, Anti-A
partition the attributes, and :func:`verify_laws` checks every law of that
structure on a given universe.

Payload form: ``{"attributes": [...], "A": [...], "AntiA": [...]}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InvariantViolation


@dataclass(frozen=True)
class ConceptUniverse:
    """Attributes plus a concept A and its declared opposite Anti-A."""

    attributes: tuple[str, ...]
    a: frozenset[str]
    anti_a: frozenset[str]

    def __post_init__(self) -> None:
        if len(set(self.attributes)) != len(self.attributes):
            raise InvariantViolation("attributes must be distinct")
        pool = set(self.attributes)
        stray_a = self.a - pool
        if stray_a:
            raise InvariantViolation(f"A contains unknown attributes: {sorted(stray_a)}")
        stray_anti = self.anti_a - pool
        if stray_anti:
            raise InvariantViolation(
                f"AntiA contains unknown attributes: {sorted(stray_anti)}"
            )
        overlap = self.a & self.anti_a
        if overlap:
            raise InvariantViolation(f"A and AntiA overlap: {sorted(overlap)}")


def non_of(u: ConceptUniverse) -> tuple[str, ...]:
    """Everything outside A, in attribute order."""
    return tuple(x for x in u.attributes if x not in u.a)


def neut_of(u: ConceptUniverse) -> tuple[str, ...]:
    """Everything in neither A nor Anti-A, in attribute order."""
    return tuple(x for x in u.attributes if x not in u.a and x not in u.anti_a)


@dataclass(frozen=True)
class LawCheck:
    name: str
    holds: bool
    detail: str


@dataclass(frozen=True)
class LawReport:
    checks: tuple[LawCheck, ...]

    @property
    def all_hold(self) -> bool:
        return all(check.holds for check in self.checks)


def verify_laws(u: ConceptUniverse) -> LawReport:
    """Check every law of the A / Anti-A / Neut-A / Non-A structure."""
    a = u.a
    anti = u.anti_a
    non = frozenset(non_of(u))
    neut = frozenset(neut_of(u))
    swapped = ConceptUniverse(u.attributes, anti, a)
    neut_swapped = frozenset(neut_of(swapped))

    def check(name: str, holds: bool, detail: str) -> LawCheck:
        return LawCheck(name=name, holds=bool(holds), detail=detail)

    checks = (
        check(
            "neut-swap-invariance",
            neut == neut_swapped,
            "the neutral zone does not change when A and AntiA swap roles",
        ),
        check(
            "non-contains-anti",
            anti <= non,
            "everything declared opposite to A lies outside A",
        ),
        check(
            "non-contains-neut",
            neut <= non,
            "the neutral zone lies outside A",
        ),
        check(
            "a-disjoint-anti",
            not (a & anti),
            "A and AntiA share no attribute",
        ),
        check(
            "a-disjoint-non",
            not (a & non),
            "A and its outside share no attribute",
        ),
        check(
            "partition-pairwise-disjoint",
            not (a & neut) and not (a & anti) and not (neut & anti),
            "A, NeutA, and AntiA are pairwise disjoint",
        ),
        check(
            "partition-covers",
            (a | neut | anti) == frozenset(u.attributes),
            "A, NeutA, and AntiA together cover all attributes",
        ),
    )
    return LawReport(checks=checks)


def load_concepts(payload: Mapping) -> ConceptUniverse:
    """Build a concept universe from its payload form."""
    if not isinstance(payload, Mapping):
        raise InvariantViolation("concepts payload must be an object")
    attributes = payload.get("attributes")
    if not isinstance(attributes, (list, tuple)):
        raise InvariantViolation("concepts payload needs an 'attributes' array")
    for key in ("A", "AntiA"):
        if not isinstance(payload.get(key), (list, tuple)):
            raise InvariantViolation(f"concepts payload needs an {key!r} array")
    return ConceptUniverse(
        attributes=tuple(str(x) for x in attributes),
        a=frozenset(str(x) for x in payload["A"]),
        anti_a=frozenset(str(x) for x in payload["AntiA"]),
    )
