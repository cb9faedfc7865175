from typing import List, Sequence, Tuple
import numpy as np

from ..core.fields import SpinorField
from ..core.grid import Grid1D, KLattice
from ..dft.flat import flat_F0
from ..dft.frequency import FrequencyPair, gaussian_packet

Notches = Tuple[Sequence[float], Sequence[float]]

# wide enough that the notched field stays localized within a few units
NOTCH_WIDTH = 1.5


def notch_factor(k: np.ndarray, centres: Sequence[float], width: float = NOTCH_WIDTH) -> np.ndarray:
    """prod_c (1 - exp(-((k - c) / width)^2)), a smooth factor with a double zero at each centre."""
    factor = np.ones_like(k, dtype=float)
    for centre in centres:
        factor *= 1.0 - np.exp(-((k - centre) / width) ** 2)
    return factor


def random_profile(lattice: KLattice, rng: np.random.Generator, packets: int = 2,
                   k_spread: float = 2.0, position_spread: float = 3.0,
                   notches: Notches = ((), ()), notch_width: float = NOTCH_WIDTH) -> FrequencyPair:
    """Sum of a few complex Gaussian packets per component, band-limited well inside the lattice.

    ``notches`` lists, per component, frequencies where the profile is made
    to vanish, e.g. the threshold frequencies of generic potentials.
    """
    k_spread = min(k_spread, lattice.k_max / 4.0)
    values = np.zeros((lattice.n, 2), dtype=np.complex128)
    for component in range(2):
        for _ in range(packets):
            amplitude = complex(rng.normal(), rng.normal()) / np.sqrt(2.0 * packets)
            values[:, component] += gaussian_packet(
                lattice,
                center=float(rng.uniform(-k_spread, k_spread)),
                width=float(rng.uniform(0.3, 1.0)),
                position=float(rng.uniform(-position_spread, position_spread)),
                amplitude=amplitude,
            )
        values[:, component] *= notch_factor(lattice.samples, notches[component], notch_width)
    return FrequencyPair(lattice, values)


def random_field(grid: Grid1D, lattice: KLattice, rng: np.random.Generator, **kwargs) -> SpinorField:
    """Localized band-limited field F0(u) of a random profile."""
    return flat_F0(random_profile(lattice, rng, **kwargs), grid)


def profile_bank(lattice: KLattice, rng: np.random.Generator, size: int, **kwargs) -> List[FrequencyPair]:
    return [random_profile(lattice, rng, **kwargs) for _ in range(size)]
