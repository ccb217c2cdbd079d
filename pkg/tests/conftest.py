from __future__ import annotations

import httpx
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from neutro.values import NeutrosophicTriple, make_triple

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


@st.composite
def triples(draw) -> NeutrosophicTriple:
    """Valid normalized triples, corners included."""
    corner = draw(st.integers(min_value=0, max_value=9))
    if corner == 0:
        return draw(
            st.sampled_from(
                [
                    make_triple(1.0, 0.0, 0.0),
                    make_triple(0.0, 1.0, 0.0),
                    make_triple(0.0, 0.0, 1.0),
                    make_triple(0.5, 0.5, 0.0),
                    make_triple(0.5, 0.0, 0.5),
                    make_triple(0.0, 0.5, 0.5),
                ]
            )
        )
    t = draw(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    share = draw(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))
    i = share * (1.0 - t)
    f = 1.0 - t - i
    if f < 0.0:
        i += f
        f = 0.0
    return make_triple(t, i, f)


@st.composite
def unit_floats(draw) -> float:
    return draw(st.floats(min_value=0.0, max_value=1.0, allow_nan=False))


def assert_close_triple(value, expected, tol: float = 1e-12) -> None:
    got = value.as_tuple() if hasattr(value, "as_tuple") else tuple(value)
    want = expected.as_tuple() if hasattr(expected, "as_tuple") else tuple(expected)
    for g, w in zip(got, want):
        assert abs(g - float(w)) <= tol, f"{got} != {want} within {tol}"


@pytest.fixture(scope="session")
def client():
    """HTTP client bound to the service in process, no socket involved."""
    from neutro.cli import _InProcessTransport
    from neutro.service.app import app

    with httpx.Client(
        base_url="http://testserver", transport=_InProcessTransport(app)
    ) as c:
        yield c
