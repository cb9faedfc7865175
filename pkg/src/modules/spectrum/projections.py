import numpy as np

from ..core.fields import SpinorField
from ..core.norms import sigma3_pairing
from ..dft.transforms import projection_Pe
from .discrete import DiscreteSpectrum
from .errors import GramSingular


def sigma3_gram(basis) -> np.ndarray:
    """A[m, n] = <u_m, sigma3 u_n>."""
    return np.array([[sigma3_pairing(u, v) for v in basis] for u in basis])


def discrete_coefficients(f: SpinorField, basis, max_condition: float = 1e10) -> np.ndarray:
    """c with f - sum c_m u_m sigma3-orthogonal to every u_n."""
    if not basis:
        return np.zeros(0, dtype=np.complex128)
    gram = sigma3_gram(basis)
    condition = np.linalg.cond(gram)
    if not np.isfinite(condition) or condition > max_condition:
        raise GramSingular(float(condition))
    rhs = np.array([sigma3_pairing(f, v) for v in basis])
    return np.linalg.solve(gram.T, rhs)


def projection_Pd(f: SpinorField, spectrum: DiscreteSpectrum, max_condition: float = 1e10) -> SpinorField:
    """sigma3-orthogonal projection onto the span of the discrete (generalized) eigenvectors."""
    basis = spectrum.basis()
    if not basis:
        return SpinorField.zeros(f.grid)
    coefficients = discrete_coefficients(f, basis, max_condition)
    values = sum(c * u.values for c, u in zip(coefficients, basis))
    return f.with_values(values)


__all__ = ['sigma3_gram', 'discrete_coefficients', 'projection_Pd', 'projection_Pe']
