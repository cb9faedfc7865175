import numpy as np

from ..core.fields import SpinorField
from ..jost.data import ScatteringData
from .frequency import FrequencyPair

_NORMALISATION = 1.0 / np.sqrt(2.0 * np.pi)


def _check(u: FrequencyPair, data: ScatteringData) -> None:
    if u.lattice != data.lattice:
        raise ValueError("frequency data and scattering table use different lattices")


def _synthesise(kernel: np.ndarray, u: FrequencyPair, data: ScatteringData) -> SpinorField:
    """(1/sqrt(2 pi)) sum_k dk [K u1 + sigma1 K u2] for a kernel table K of shape (n_k, n_x, 2)."""
    _check(u, data)
    first = np.tensordot(u.values[:, 0], kernel, axes=(0, 0))
    second = np.tensordot(u.values[:, 1], kernel[..., ::-1], axes=(0, 0))
    return SpinorField(data.grid, _NORMALISATION * data.lattice.delta_k * (first + second))


def forward_Ghat(u: FrequencyPair, data: ScatteringData) -> SpinorField:
    """Synthesis with the kernel G(x, -k) / s(-k)."""
    return _synthesise(data.kernel_G, u, data)


def forward_Fhat(u: FrequencyPair, data: ScatteringData) -> SpinorField:
    """Synthesis with the kernel F(x, k) / s(k)."""
    return _synthesise(data.kernel_F, u, data)


def _analyse(table: np.ndarray, f: SpinorField, data: ScatteringData) -> FrequencyPair:
    """(1/sqrt(2 pi)) sum_x h [e^t f ; (sigma1 e)^t f] per k, without conjugation."""
    if f.grid != data.grid:
        raise ValueError("field and scattering table use different grids")
    first = np.einsum("kxi,xi->k", table, f.values)
    second = np.einsum("kxi,xi->k", table[..., ::-1], f.values)
    values = _NORMALISATION * data.grid.h * np.stack([first, second], axis=-1)
    return FrequencyPair(data.lattice, values)


def adjoint_Fstar(f: SpinorField, data: ScatteringData) -> FrequencyPair:
    """Analysis against F(x, -k)."""
    return _analyse(data.lattice.reflect(data.jost_F), f, data)


def adjoint_Gstar(f: SpinorField, data: ScatteringData) -> FrequencyPair:
    """Analysis against G(x, k)."""
    return _analyse(data.jost_G, f, data)


def inverse_Ghat(f: SpinorField, data: ScatteringData) -> FrequencyPair:
    """sigma3 F* sigma3, the left inverse of G-hat."""
    return adjoint_Fstar(f.sigma3(), data).sigma3()


def inverse_Fhat(f: SpinorField, data: ScatteringData) -> FrequencyPair:
    """sigma3 G* sigma3, the left inverse of F-hat."""
    return adjoint_Gstar(f.sigma3(), data).sigma3()


def distorted_basis(data: ScatteringData) -> np.ndarray:
    """e_+(x, k): F(x, k) for k > 0 and G(x, |k|) for k < 0, shape (n_k, n_x, 2)."""
    positive = data.lattice.positive()
    mirrored_G = data.lattice.reflect(data.jost_G)
    return np.where(positive[:, None, None], data.jost_F, mirrored_G)


def projection_Pe(f: SpinorField, data: ScatteringData) -> SpinorField:
    """Projection onto the essential spectrum by the distorted-basis expansion."""
    if f.grid != data.grid:
        raise ValueError("field and scattering table use different grids")
    basis = distorted_basis(data)
    h = data.grid.h
    conj = np.conj(basis)
    plus = h * (np.einsum("kx,x->k", conj[..., 0], f.first) - np.einsum("kx,x->k", conj[..., 1], f.second))
    minus = h * (np.einsum("kx,x->k", conj[..., 1], f.first) - np.einsum("kx,x->k", conj[..., 0], f.second))
    weight = data.lattice.delta_k / (2.0 * np.pi)
    values = np.tensordot(plus, basis, axes=(0, 0)) - np.tensordot(minus, basis[..., ::-1], axes=(0, 0))
    return f.with_values(weight * values)
