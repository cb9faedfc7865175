from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional
import numpy as np

from ..core.fields import SpinorField
from ..core.grid import Grid1D, KLattice
from ..core.tracks import SolitonTrack
from ..logging.base import BaseLogger
from .cache.base import TableStore
from .coefficients import extract_coefficients, matching_radius, station_indices
from .data import ScatteringData, table_hash
from .solver import JostColumns, JostSettings, JostSolver


def solve_jost(track: SolitonTrack, grid: Grid1D, k: float, which: str = "F",
               settings: Optional[JostSettings] = None) -> SpinorField:
    """Single Jost solution F(x, k) or G(x, k) as a SpinorField."""
    columns = JostSolver(track.at_rest(), grid, settings).solve(k)
    if which.upper() == "F":
        return SpinorField(grid, columns.F)
    if which.upper() == "G":
        return SpinorField(grid, columns.G)
    raise ValueError(f"which must be 'F' or 'G', got {which!r}")


def build_scattering_data(track: SolitonTrack, grid: Grid1D, lattice: KLattice,
                          settings: Optional[JostSettings] = None,
                          logger: Optional[BaseLogger] = None,
                          store: Optional[TableStore] = None,
                          threads: int = 1) -> ScatteringData:
    """Solve every lattice wavenumber and assemble the scattering table of one track.

    Only the profile and omega matter; the track's motion is applied later
    by the Galilei map.
    """
    settings = settings or JostSettings()
    rest = track.at_rest()
    content_hash = table_hash(rest, grid, lattice, settings.k_floor, settings.support_tol,
                              settings.quadrature_refine)
    if store is not None:
        cached = store.load(content_hash, rest, grid, lattice)
        if cached is not None:
            if logger:
                logger.log_debug(f"scattering table {content_hash} loaded from cache")
            return cached

    solver = JostSolver(rest, grid, settings)
    if logger:
        logger.log_stage("jost", f"omega={rest.omega:g} profile={rest.profile.kind.value} "
                                 f"n_k={lattice.n} window={solver.window_size}")

    k_samples = lattice.samples
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        columns: List[JostColumns] = list(pool.map(solver.solve, k_samples))

    left, right = station_indices(grid, matching_radius(rest.profile, grid, settings.match_envelope),
                                  settings.match_stations)
    s = np.empty(lattice.n, dtype=np.complex128)
    r = np.empty(lattice.n, dtype=np.complex128)
    for index, column in enumerate(columns):
        s[index], r[index] = extract_coefficients(column.F, grid, column.k, left, right,
                                                  settings.max_fit_condition)

    data = ScatteringData(
        track=rest,
        grid=grid,
        lattice=lattice,
        s=s,
        r=r,
        jost_F=np.stack([c.F for c in columns]),
        jost_G=np.stack([c.G for c in columns]),
        k_floor=settings.k_floor,
        residuals=np.array([c.residual for c in columns]),
        content_hash=content_hash,
    )
    if logger:
        logger.log_debug(f"max eigen-equation residual {float(data.residuals.max()):.3e}, "
                         f"max condition {max(c.condition for c in columns):.3e}")
    if store is not None:
        store.save(data)
    return data
