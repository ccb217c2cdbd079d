"""Exception hierarchy shared by the whole engine.

Every error raised on bad input derives from :class:`NeutroError`, so callers
(the CLI, the HTTP service) can distinguish domain rejections from genuine
bugs with a single except clause.  Errors that point at a location in source
text carry a 0-based ``position``.
"""

from __future__ import annotations


class NeutroError(Exception):
    """Base class for all domain errors raised by this package."""


class OutOfRange(NeutroError, ValueError):
    """A component or parameter lies outside its permitted interval."""


class NotNormalized(NeutroError, ValueError):
    """Triple components do not sum to 1 within tolerance."""


class EmptyInput(NeutroError, ValueError):
    """An operation that needs at least one operand received none."""


class DegenerateQ(NeutroError, ValueError):
    """Parabola analysis requested at q = 0 or q = 1, where the curve degenerates."""


class PositionedError(NeutroError, ValueError):
    """Error tied to a 0-based offset in an input string."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} (at offset {self.position})"


class LexError(PositionedError):
    """Input text contains a character sequence that is not a valid token."""


class ParseError(PositionedError):
    """Token stream does not match the expression grammar."""


class UnboundAtom(NeutroError, KeyError):
    """Evaluation met an atom with no binding in the environment."""

    def __init__(self, name: str, position: int | None = None):
        super().__init__(name)
        self.name = name
        self.message = f"unbound atom {name!r}"
        self.position = position

    def __str__(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} (at offset {self.position})"


class UniverseMismatch(NeutroError, ValueError):
    """A binary set operation received sets over different universes."""


class UnknownEvent(NeutroError, KeyError):
    """An event name is absent from the event space."""

    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"unknown event {self.name!r}"


class EmptySpace(NeutroError, ValueError):
    """A summary was requested over an event space with no events."""


class InvariantViolation(NeutroError, ValueError):
    """Structured input breaks a declared invariant (ordering, disjointness, coverage)."""
