from dataclasses import dataclass
from typing import Optional
import numpy as np
from scipy.linalg import get_lapack_funcs, lu_factor, lu_solve

from ..core.errors import GridError
from ..core.grid import Grid1D
from ..core.tracks import SolitonTrack, stationary_potential
from .errors import ResidualTooLarge, SingularSystem

# eighth-order centred second difference
_FD8 = np.array([-1 / 560, 8 / 315, -1 / 5, 8 / 5, -205 / 72, 8 / 5, -1 / 5, 8 / 315, -1 / 560])


@dataclass(frozen=True)
class JostSettings:
    """Numerical knobs of the Jost solver and the coefficient fit."""
    k_floor: float = 0.05
    support_tol: float = 1e-12
    quadrature_refine: int = 1
    tol_residual: float = 1e-3
    max_condition: float = 1e12
    max_fit_condition: float = 1e8
    match_envelope: float = 1e-10
    match_stations: int = 32


@dataclass(frozen=True)
class JostColumns:
    """F(x, k) and G(x, k) on the full grid for one wavenumber."""
    k: float
    F: np.ndarray
    G: np.ndarray
    condition: float
    residual: float


def fd8_second_derivative(values: np.ndarray, h: float) -> np.ndarray:
    """Second derivative on the interior nodes [4, n - 4) along axis 0."""
    n = values.shape[0]
    out = np.zeros((n - 8,) + values.shape[1:], dtype=values.dtype)
    for offset, weight in enumerate(_FD8):
        out += weight * values[offset:n - 8 + offset]
    return out / (h * h)


def _kink_corrections(k: float, kappa: float, h: float) -> tuple:
    """Diagonal weights making the lattice sums of both Green's kernels exact."""
    c1 = 1.0 / k ** 2 - (h / (2.0 * k)) / np.tan(k * h / 2.0)
    c2 = 1.0 / kappa ** 2 - (h / (2.0 * kappa)) / np.tanh(kappa * h / 2.0)
    return c1, c2


class JostSolver:
    """Lippmann-Schwinger solver for the Jost solutions of one potential at rest.

    The integral equation only involves the potential's support, so the
    dense Nystrom system is assembled on that window (optionally refined)
    and the solution is continued to the whole grid through the same
    quadrature formula.
    """

    def __init__(self, track: SolitonTrack, grid: Grid1D, settings: Optional[JostSettings] = None):
        self.track = track
        self.grid = grid
        self.settings = settings or JostSettings()
        self.omega = track.omega
        self._window: Optional[slice] = None
        if track.profile.is_zero:
            return

        radius = track.profile.support_radius(self.settings.support_tol)
        x = grid.x
        if radius + 4 * grid.h >= min(-grid.x_min, grid.x_max):
            raise GridError(f"potential support radius {radius:.3g} reaches the box boundary")
        inside = np.nonzero(np.abs(x) <= radius + grid.h)[0]
        first, last = int(inside[0]), int(inside[-1])
        refine = max(1, int(self.settings.quadrature_refine))
        self.h_nodes = grid.h / refine
        self.nodes = x[first] + self.h_nodes * np.arange((last - first) * refine + 1)
        self._window = slice(first, last + 1)
        self._refine = refine
        potential = stationary_potential(track, self.nodes)
        self._u = potential[:, 0, 0]
        self._w = potential[:, 1, 0]
        self._node_distance = np.abs(self.nodes[:, None] - self.nodes[None, :])
        self._grid_distance = np.abs(x[:, None] - self.nodes[None, :])
        self._sup_potential = float(np.max(np.hypot(self._u, self._w))) * np.sqrt(2.0)

    @property
    def window_size(self) -> int:
        return 0 if self._window is None else len(self.nodes)

    def solve(self, k: float) -> JostColumns:
        """Both Jost solutions at wavenumber k from a single factorisation.

        F has the incoming wave e^{ikx} on the left; G has e^{-ikx} coming
        from the right.
        """
        if k == 0.0:
            raise ValueError("Jost solutions are not normalised at k = 0")
        x = self.grid.x
        incoming = np.stack([np.exp(1j * k * x), np.exp(-1j * k * x)], axis=-1)
        if self._window is None:
            F = np.zeros((self.grid.n_x, 2), dtype=np.complex128)
            G = np.zeros_like(F)
            F[:, 0] = incoming[:, 0]
            G[:, 0] = incoming[:, 1]
            return JostColumns(k=k, F=F, G=G, condition=1.0, residual=0.0)

        n = len(self.nodes)
        h = self.h_nodes
        kappa = np.sqrt(k * k + 2.0 * self.omega)
        c1, c2 = _kink_corrections(k, kappa, h)
        k1 = h * np.exp(1j * k * self._node_distance) / (2j * k)
        k2 = h * np.exp(-kappa * self._node_distance) / (2.0 * kappa)
        k1[np.diag_indices(n)] += c1
        k2[np.diag_indices(n)] += c2

        u, w = self._u, self._w
        matrix = np.eye(2 * n, dtype=np.complex128)
        matrix[:n, :n] -= k1 * u[None, :]
        matrix[:n, n:] += k1 * w[None, :]
        matrix[n:, :n] -= k2 * w[None, :]
        matrix[n:, n:] += k2 * u[None, :]

        anorm = np.linalg.norm(matrix, 1)
        lu, piv = lu_factor(matrix, check_finite=False)
        gecon, = get_lapack_funcs(("gecon",), (lu,))
        rcond, _ = gecon(lu, anorm, norm="1")
        condition = np.inf if rcond == 0.0 else 1.0 / rcond
        if condition > self.settings.max_condition:
            raise SingularSystem(k, condition)

        rhs = np.zeros((2 * n, 2), dtype=np.complex128)
        rhs[:n, 0] = np.exp(1j * k * self.nodes)
        rhs[:n, 1] = np.exp(-1j * k * self.nodes)
        solution = lu_solve((lu, piv), rhs, check_finite=False)
        f1, f2 = solution[:n], solution[n:]
        q1 = u[:, None] * f1 - w[:, None] * f2
        q2 = w[:, None] * f1 - u[:, None] * f2

        first_full = incoming + (h * np.exp(1j * k * self._grid_distance) / (2j * k)) @ q1
        second_full = (h * np.exp(-kappa * self._grid_distance) / (2.0 * kappa)) @ q2
        on_nodes = slice(0, None, self._refine)
        first_full[self._window] = f1[on_nodes]
        second_full[self._window] = f2[on_nodes]

        residual = max(self._residual(f1[:, j], f2[:, j], k) for j in (0, 1))
        if residual > self.settings.tol_residual:
            raise ResidualTooLarge(k, residual, self.settings.tol_residual)

        F = np.stack([first_full[:, 0], second_full[:, 0]], axis=-1)
        G = np.stack([first_full[:, 1], second_full[:, 1]], axis=-1)
        return JostColumns(k=k, F=F, G=G, condition=float(condition), residual=float(residual))

    def _residual(self, f1: np.ndarray, f2: np.ndarray, k: float) -> float:
        """Relative residual of (H - k^2 - omega) f on the interior quadrature nodes."""
        if len(f1) < 12:
            return 0.0
        energy = k * k + self.omega
        d1 = fd8_second_derivative(f1, self.h_nodes)
        d2 = fd8_second_derivative(f2, self.h_nodes)
        inner = slice(4, len(f1) - 4)
        a1, a2 = f1[inner], f2[inner]
        u, w = self._u[inner], self._w[inner]
        r1 = -d1 + self.omega * a1 + u * a1 - w * a2 - energy * a1
        r2 = d2 - self.omega * a2 + w * a1 - u * a2 - energy * a2
        scale = (energy + self._sup_potential) * np.sqrt(np.sum(np.abs(a1) ** 2 + np.abs(a2) ** 2))
        if scale == 0.0:
            return 0.0
        return float(np.sqrt(np.sum(np.abs(r1) ** 2 + np.abs(r2) ** 2)) / scale)
