import numpy as np
import pytest

pytest.importorskip("hypothesis")
import hypothesis as h
import hypothesis.strategies as st

from src.modules.evolve.propagator import potential_exponential

entries = st.floats(min_value=-2.0, max_value=2.0, allow_nan=False, allow_infinity=False)


@st.composite
def trace_free(draw):
    a, b, c, d, e, f = (draw(entries) for _ in range(6))
    return np.array([[a + 1j * b, c + 1j * d], [e + 1j * f, -(a + 1j * b)]])


@h.settings(deadline=None, max_examples=100)
@h.given(trace_free())
def test_exponential_has_unit_determinant(generator):
    out = potential_exponential(generator[None, :, :])[0]
    assert np.linalg.det(out) == pytest.approx(1.0, abs=1e-9)


@h.settings(deadline=None, max_examples=100)
@h.given(trace_free())
def test_inverse_is_exponential_of_negative(generator):
    forward = potential_exponential(generator[None, :, :])[0]
    backward = potential_exponential(-generator[None, :, :])[0]
    assert np.allclose(forward @ backward, np.eye(2), atol=1e-9)
