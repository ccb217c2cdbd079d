"""Triple-valued computation engine.

Values carry three masses (truth, indeterminacy, falsity) summing to 1.
The package provides the logical connectors over such values, sets and
event spaces built on them, a parameterized open-set family, a crisp
concept algebra, an orientation-table classifier, an expression language,
and a property sweep that verifies the algebra's laws.  An HTTP service
(``neutro.service``) and a CLI (``neu``) expose the engine.
"""

from .connectors import (
    ConnectorKind,
    ParabolaAnalysis,
    apply_binary,
    apply_nary,
    eval_kernel,
    negate,
    parabola_analysis,
)
from .errors import (
    DegenerateQ,
    EmptyInput,
    EmptySpace,
    InvariantViolation,
    LexError,
    NeutroError,
    NotNormalized,
    OutOfRange,
    ParseError,
    UnboundAtom,
    UniverseMismatch,
    UnknownEvent,
)
from .expressions import evaluate, format_expr, parse, parse_text, tokenize
from .values import (
    EPS_DEGEN,
    EPS_NORM,
    NeutrosophicTriple,
    RawTriple,
    from_percent,
    make_triple,
    renormalize,
    true_bound,
)

__all__ = [
    "ConnectorKind",
    "DegenerateQ",
    "EPS_DEGEN",
    "EPS_NORM",
    "EmptyInput",
    "EmptySpace",
    "InvariantViolation",
    "LexError",
    "NeutroError",
    "NeutrosophicTriple",
    "NotNormalized",
    "OutOfRange",
    "ParabolaAnalysis",
    "ParseError",
    "RawTriple",
    "UnboundAtom",
    "UniverseMismatch",
    "UnknownEvent",
    "apply_binary",
    "apply_nary",
    "eval_kernel",
    "evaluate",
    "format_expr",
    "from_percent",
    "make_triple",
    "negate",
    "parabola_analysis",
    "parse",
    "parse_text",
    "renormalize",
    "tokenize",
    "true_bound",
]

__version__ = "0.1.0"
