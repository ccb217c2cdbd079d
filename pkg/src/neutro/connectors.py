"""Logical connectors over triples.

Each connector is driven by a scalar kernel on [0, 1].  A binary connector
applies its kernel to the t components, the i components, and the f components
independently, then renormalizes the raw result (see :func:`values.renormalize`).
The t component of the outcome is therefore exactly the kernel applied to the
operand t components; renormalization only redistributes i and f.

Kernels:

    negation            1 - x
    conjunction         x * y
    weak disjunction    x + y - x*y
    strong disjunction  x*(1-y) + y*(1-x) - x*y*(1-x)*(1-y)
    implication         1 - x + x*y
    equivalence         (1 - x + x*y) * (1 - y + x*y)
    sheffer             1 - x*y
    peirce              (1 - x) * (1 - y)

For a fixed second argument q, the equivalence kernel in p is the downward
parabola e_q(p) = (q^2 - q) p^2 + (-q^2 + 3q - 1) p + (1 - q);
:func:`parabola_analysis` exposes its coefficients and clamped vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import DegenerateQ, EmptyInput, OutOfRange
from .values import EPS_NORM, NeutrosophicTriple, RawTriple, renormalize


class ConnectorKind(Enum):
    """The eight connectors; values double as wire names."""

    NEGATION = "not"
    CONJUNCTION = "and"
    WEAK_DISJUNCTION = "or"
    STRONG_DISJUNCTION = "xor"
    IMPLICATION = "implies"
    EQUIVALENCE = "iff"
    SHEFFER = "nand"
    PEIRCE = "nor"


def _negation(x: float) -> float:
    return 1.0 - x


def _conjunction(x: float, y: float) -> float:
    return x * y


def _weak_disjunction(x: float, y: float) -> float:
    # Evaluated as hi + lo*(1 - hi), not x + y - x*y: same polynomial, but
    # rounding can never pull the result below max(x, y) or above 1.
    hi, lo = (x, y) if x >= y else (y, x)
    return hi + lo * (1.0 - hi)


def _strong_disjunction(x: float, y: float) -> float:
    # x(1-y) + y(1-x) - xy(1-x)(1-y) is weak disjunction of u = x(1-y)
    # and v = y(1-x), since uv equals the last term; composing keeps the
    # result inside [0, 1] at the bit level.
    return _weak_disjunction(x * (1.0 - y), y * (1.0 - x))


def _implication(x: float, y: float) -> float:
    return 1.0 - x + x * y


def _equivalence(x: float, y: float) -> float:
    return (1.0 - x + x * y) * (1.0 - y + x * y)


def _sheffer(x: float, y: float) -> float:
    return 1.0 - x * y


def _peirce(x: float, y: float) -> float:
    return (1.0 - x) * (1.0 - y)


_BINARY_KERNELS = {
    ConnectorKind.CONJUNCTION: _conjunction,
    ConnectorKind.WEAK_DISJUNCTION: _weak_disjunction,
    ConnectorKind.STRONG_DISJUNCTION: _strong_disjunction,
    ConnectorKind.IMPLICATION: _implication,
    ConnectorKind.EQUIVALENCE: _equivalence,
    ConnectorKind.SHEFFER: _sheffer,
    ConnectorKind.PEIRCE: _peirce,
}

# Kinds whose kernels are associative enough to fold over many operands.
FOLDABLE_KINDS = (
    ConnectorKind.CONJUNCTION,
    ConnectorKind.WEAK_DISJUNCTION,
    ConnectorKind.STRONG_DISJUNCTION,
)


def _check_unit(label: str, x: float) -> None:
    if not (-EPS_NORM <= x <= 1.0 + EPS_NORM):
        raise OutOfRange(f"kernel argument {label}={x!r} outside [0, 1]")


def eval_kernel(kind: ConnectorKind, x: float, y: float | None = None) -> float:
    """Apply the scalar kernel of ``kind`` to arguments in [0, 1]."""
    _check_unit("x", x)
    if kind is ConnectorKind.NEGATION:
        if y is not None:
            raise ValueError("negation kernel is unary")
        return _negation(x)
    if y is None:
        raise ValueError(f"{kind.value} kernel needs a second argument")
    _check_unit("y", y)
    return _BINARY_KERNELS[kind](x, y)


def negate(a: NeutrosophicTriple) -> NeutrosophicTriple:
    """Componentwise negation followed by renormalization."""
    return renormalize(RawTriple(1.0 - a.t, 1.0 - a.i, 1.0 - a.f))


def apply_binary(
    kind: ConnectorKind, a: NeutrosophicTriple, b: NeutrosophicTriple
) -> NeutrosophicTriple:
    """Apply a binary connector componentwise, then renormalize.

    The t component of the result equals the kernel on (a.t, b.t) exactly.
    """
    kernel = _BINARY_KERNELS.get(kind)
    if kernel is None:
        raise ValueError("apply_binary does not accept the unary negation; use negate")
    return renormalize(
        RawTriple(kernel(a.t, b.t), kernel(a.i, b.i), kernel(a.f, b.f))
    )


def apply_nary(
    kind: ConnectorKind, operands: Iterable[NeutrosophicTriple]
) -> NeutrosophicTriple:
    """Fold a foldable connector over one or more operands.

    The kernel folds left to right on the raw components; renormalization
    happens once at the end, not per step.  A singleton input simply comes
    back renormalized.
    """
    if kind not in FOLDABLE_KINDS:
        raise ValueError(f"{kind.value} does not fold over n operands")
    kernel = _BINARY_KERNELS[kind]
    items = list(operands)
    if not items:
        raise EmptyInput("apply_nary needs at least one operand")
    raw_t, raw_i, raw_f = items[0].t, items[0].i, items[0].f
    for item in items[1:]:
        raw_t = kernel(raw_t, item.t)
        raw_i = kernel(raw_i, item.i)
        raw_f = kernel(raw_f, item.f)
    return renormalize(RawTriple(raw_t, raw_i, raw_f))


@dataclass(frozen=True)
class ParabolaAnalysis:
    """Coefficients and clamped vertex of the equivalence parabola e_q(p)."""

    q: float
    a: float
    b: float
    c: float
    p_max_raw: float
    p_max: float

    def evaluate(self, p: float) -> float:
        """Value of e_q at p; matches the equivalence kernel E(p, q)."""
        return self.a * p * p + self.b * p + self.c


def parabola_analysis(q: float) -> ParabolaAnalysis:
    """Analyze the equivalence kernel as a parabola in its first argument.

    The curve is concave for q strictly inside (0, 1); at the endpoints it
    degenerates to a line, so those are rejected.  The vertex -b / 2a is
    reported both raw and clamped to [0, 1].
    """
    if not (0.0 < q < 1.0):
        raise DegenerateQ(f"parabola degenerates at q={q!r}; need 0 < q < 1")
    a = q * q - q
    b = -q * q + 3.0 * q - 1.0
    c = 1.0 - q
    p_max_raw = -b / (2.0 * a)
    p_max = min(1.0, max(0.0, p_max_raw))
    return ParabolaAnalysis(q=q, a=a, b=b, c=c, p_max_raw=p_max_raw, p_max=p_max)
