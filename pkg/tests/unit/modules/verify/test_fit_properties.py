import numpy as np
import pytest

pytest.importorskip("hypothesis")
import hypothesis as h
import hypothesis.strategies as st

from src.modules.verify.fits import FitModel, decay_fit

exponents = st.floats(min_value=-3.0, max_value=-0.1, allow_nan=False, allow_infinity=False)
prefactors = st.floats(min_value=0.1, max_value=10.0, allow_nan=False, allow_infinity=False)


@h.settings(deadline=None, max_examples=50)
@h.given(exponents, prefactors)
def test_power_law_recovered(p, a):
    times = np.linspace(5.0, 80.0, 40)
    fit = decay_fit(times, a * times ** p)
    assert fit.exponent == pytest.approx(p, abs=1e-8)
    assert fit.prefactor == pytest.approx(a, rel=1e-8)


@h.settings(deadline=None, max_examples=50)
@h.given(st.floats(min_value=0.1, max_value=3.0), prefactors)
def test_exponential_rate_recovered(beta, a):
    times = np.linspace(5.0, 20.0, 16)
    fit = decay_fit(times, a * np.exp(-beta * times), model=FitModel.EXP)
    assert fit.rate == pytest.approx(beta, abs=1e-8)


@h.settings(deadline=None, max_examples=30)
@h.given(exponents, st.integers(min_value=0, max_value=2 ** 32 - 1))
def test_sign_of_samples_is_ignored(p, seed):
    times = np.linspace(5.0, 80.0, 40)
    signs = np.random.default_rng(seed).choice([-1.0, 1.0], size=times.size)
    fit = decay_fit(times, signs * times ** p)
    assert fit.exponent == pytest.approx(p, abs=1e-8)
