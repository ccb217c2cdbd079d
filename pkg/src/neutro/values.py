"""Triple-valued degrees: truth, indeterminacy, falsity.

A value is a triple (t, i, f) of floats in [0, 1] summing to 1.  The triple is
stored exactly as given; validation allows float noise up to ``EPS_NORM`` in
both the bounds and the sum.  Percent input (components out of 100) is an I/O
convention only and is converted on the way in.

Connectors first compute raw per-component values that generally do not sum
to 1; :func:`renormalize` restores the invariant by rescaling the i and f
components so they absorb exactly the mass left over by t.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotNormalized, OutOfRange

# Validation tolerance for component bounds and the sum-to-one check.
EPS_NORM = 1e-9
# Threshold below which a raw i + f mass is treated as zero during renormalization.
EPS_DEGEN = 1e-12


def _check_component(label: str, value: float, upper: float = 1.0) -> None:
    if not (-EPS_NORM <= value <= upper + EPS_NORM):
        raise OutOfRange(f"{label} component {value!r} outside [0, {upper:g}]")


@dataclass(frozen=True)
class NeutrosophicTriple:
    """Normalized (t, i, f) value; components sum to 1 within EPS_NORM."""

    t: float
    i: float
    f: float

    def __post_init__(self) -> None:
        for label, value in (("t", self.t), ("i", self.i), ("f", self.f)):
            _check_component(label, value)
        total = self.t + self.i + self.f
        if abs(total - 1.0) > EPS_NORM:
            raise NotNormalized(f"components sum to {total!r}, expected 1")

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.t, self.i, self.f)


@dataclass(frozen=True)
class RawTriple:
    """Unnormalized per-component result of a connector, before renormalization."""

    t: float
    i: float
    f: float

    def __post_init__(self) -> None:
        for label, value in (("t", self.t), ("i", self.i), ("f", self.f)):
            _check_component(label, value)


def make_triple(t: float, i: float, f: float) -> NeutrosophicTriple:
    """Validating constructor; stores the components exactly as given."""
    return NeutrosophicTriple(float(t), float(i), float(f))


def from_percent(t: float, i: float, f: float) -> NeutrosophicTriple:
    """Build a triple from percent components (out of 100, summing to 100)."""
    for label, value in (("t", t), ("i", i), ("f", f)):
        _check_component(label, float(value), upper=100.0)
    return make_triple(float(t) / 100.0, float(i) / 100.0, float(f) / 100.0)


def renormalize(raw: RawTriple) -> NeutrosophicTriple:
    """Rescale i and f so the triple sums to 1, keeping t exactly.

    The scale factor is W = (1 - t) / (i + f), so i and f keep their ratio
    while absorbing all mass not claimed by t.  When i + f vanishes (below
    EPS_DEGEN) there is nothing to scale: the leftover 1 - t, if any, goes to
    indeterminacy, giving (t, 1 - t, 0); a raw (1, 0, 0) stays (1, 0, 0).
    """
    mass = raw.i + raw.f
    if mass < EPS_DEGEN:
        leftover = 1.0 - raw.t
        if leftover < EPS_DEGEN:
            return NeutrosophicTriple(1.0, 0.0, 0.0)
        return NeutrosophicTriple(raw.t, leftover, 0.0)
    scale = (1.0 - raw.t) / mass
    # i*scale <= 1 - t analytically, but two rounding steps can overshoot 1.0
    # by one ulp when t is near 0 and one of i, f carries almost all the mass.
    return NeutrosophicTriple(
        raw.t, min(raw.i * scale, 1.0), min(raw.f * scale, 1.0)
    )


def true_bound(value: NeutrosophicTriple) -> tuple[float, float]:
    """Chance interval [t, t + i]: truth plus however much indeterminacy may resolve."""
    return (value.t, value.t + value.i)
