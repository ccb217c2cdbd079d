"""Classifying a system against an orientation table.

A table row is a reference mix of supportive mass s and unsupportive mass
u = 100 - s, in percent.  The builtin table spans seven reference mixes from
full support down to full opposition.  A system assessment (s, i, u) is
matched to the row whose s lies nearest; ties go to the row with higher s.
The reported stability interval [s, s + i] shows where the system's support
could land once its indeterminate mass resolves.

Payload form: ``{"rows": [{"name": "M1", "s": 100}, ...]}`` (u optional,
derived as 100 - s when absent).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Mapping

from .errors import InvariantViolation, NotNormalized, OutOfRange, ParseError
from .values import EPS_NORM

_PERCENT_EPS = 100.0 * EPS_NORM


def _check_percent(label: str, value: float) -> None:
    if not (-_PERCENT_EPS <= value <= 100.0 + _PERCENT_EPS):
        raise OutOfRange(f"{label} {value!r} outside [0, 100]")


@dataclass(frozen=True)
class TableRow:
    """One reference mix; s and u are percents summing to 100."""

    name: str
    s: float
    u: float

    def __post_init__(self) -> None:
        if not self.name:
            raise InvariantViolation("table row needs a name")
        _check_percent("s", self.s)
        _check_percent("u", self.u)
        if abs(self.s + self.u - 100.0) > _PERCENT_EPS:
            raise NotNormalized(f"row {self.name!r}: s + u = {self.s + self.u!r}, expected 100")


@dataclass(frozen=True)
class OrientationTable:
    rows: tuple[TableRow, ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise InvariantViolation("orientation table must not be empty")
        names = [row.name for row in self.rows]
        if len(set(names)) != len(names):
            raise InvariantViolation("table row names must be unique")
        for prev, nxt in zip(self.rows, self.rows[1:]):
            if not (prev.s > nxt.s):
                raise InvariantViolation(
                    f"rows must have strictly decreasing s: "
                    f"{prev.name!r} ({prev.s:g}) before {nxt.name!r} ({nxt.s:g})"
                )


@dataclass(frozen=True)
class SystemAssessment:
    """Observed percent mix: supportive s, indeterminate i, unsupportive u."""

    s: float
    i: float
    u: float

    def __post_init__(self) -> None:
        for label, value in (("s", self.s), ("i", self.i), ("u", self.u)):
            _check_percent(label, value)
        total = self.s + self.i + self.u
        if abs(total - 100.0) > _PERCENT_EPS:
            raise NotNormalized(f"assessment sums to {total!r}, expected 100")


@dataclass(frozen=True)
class Classification:
    model: str
    distance: float
    interval: tuple[float, float]


def builtin_table() -> OrientationTable:
    """The seven builtin reference mixes."""
    return OrientationTable(
        rows=(
            TableRow("M1", 100.0, 0.0),
            TableRow("M2", 95.0, 5.0),
            TableRow("M3", 65.0, 35.0),
            TableRow("M4", 50.0, 50.0),
            TableRow("M5", 35.0, 65.0),
            TableRow("M6", 5.0, 95.0),
            TableRow("M7", 0.0, 100.0),
        )
    )


def classify(
    assessment: SystemAssessment, table: OrientationTable | None = None
) -> Classification:
    """Match an assessment to the nearest row by supportive mass.

    Rows are ordered by decreasing s, so keeping the first row at minimal
    distance breaks ties toward higher s.
    """
    table = table or builtin_table()
    best = table.rows[0]
    best_distance = abs(assessment.s - best.s)
    for row in table.rows[1:]:
        distance = abs(assessment.s - row.s)
        if distance < best_distance:
            best, best_distance = row, distance
    return Classification(
        model=best.name,
        distance=best_distance,
        interval=(assessment.s, assessment.s + assessment.i),
    )


def table_from_payload(payload: Mapping) -> OrientationTable:
    """Build a table from its payload form; u defaults to 100 - s."""
    if not isinstance(payload, Mapping):
        raise InvariantViolation("table payload must be an object")
    raw_rows = payload.get("rows")
    if not isinstance(raw_rows, (list, tuple)) :
        raise InvariantViolation("table payload needs a 'rows' array")
    rows = []
    for entry in raw_rows:
        if not isinstance(entry, Mapping) or "name" not in entry or "s" not in entry:
            raise InvariantViolation("each row needs at least 'name' and 's'")
        s = float(entry["s"])
        u = float(entry["u"]) if "u" in entry else 100.0 - s
        rows.append(TableRow(name=str(entry["name"]), s=s, u=u))
    return OrientationTable(tuple(rows))


def load_table(path: str | os.PathLike) -> OrientationTable:
    """Read a table payload from a JSON file."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in table file: {exc.msg}", exc.pos) from exc
    return table_from_payload(payload)
