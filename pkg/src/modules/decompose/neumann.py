from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple
import numpy as np

from ..core.tracks import ModelConfig
from ..dft.frequency import FrequencyPair
from ..freeflow.profiles import boost, unboost
from ..hardy.signal import HalfLineSignal
from ..jost.data import ScatteringData
from ..logging.base import BaseLogger
from .bmaps import LEFT, RIGHT, BMaps, from_half_line, half_line
from .errors import NotContracting


def _size(a: Sequence[FrequencyPair]) -> float:
    return float(np.sqrt(sum(x.norm() ** 2 for x in a)))


@dataclass
class HardySystemState:
    """Interface unknowns of the Hardy system with their right-hand side.

    Interface i sits at the cut between tracks i and i + 1. ``right[i]`` holds
    the part of the gap profile whose field lies right of the cut and
    ``left[i]`` the part left of it; each is stored as a half-line signal
    centred ``margin`` beyond the cut so that the smooth window tails keep
    their tag. Whatever the projection cannot place on its half-line, from
    the finite lattice cutting the tails of the windows, is kept in
    ``right_spill`` and ``left_spill`` so that tagging never loses content.
    """
    config: ModelConfig
    data: Tuple[ScatteringData, ...]
    rhs: BMaps
    margin: float
    right: List[HalfLineSignal] = field(default_factory=list)
    left: List[HalfLineSignal] = field(default_factory=list)
    right_spill: List[FrequencyPair] = field(default_factory=list)
    left_spill: List[FrequencyPair] = field(default_factory=list)
    history: List[float] = field(default_factory=list)

    @property
    def interfaces(self) -> int:
        return self.config.m - 1

    def right_anchor(self, index: int) -> float:
        return float(self.rhs.cuts[index]) - self.margin

    def left_anchor(self, index: int) -> float:
        return float(self.rhs.cuts[index]) + self.margin

    def profiles(self) -> Tuple[List[FrequencyPair], List[FrequencyPair]]:
        rights = [from_half_line(s, self.right_anchor(i)) + self.right_spill[i] for i, s in enumerate(self.right)]
        lefts = [from_half_line(s, self.left_anchor(i)) + self.left_spill[i] for i, s in enumerate(self.left)]
        return rights, lefts

    def gap_profile(self, index: int) -> FrequencyPair:
        rights, lefts = self.profiles()
        return rights[index] + lefts[index]

    def tag(self, rights: Sequence[FrequencyPair], lefts: Sequence[FrequencyPair]) -> None:
        """Store new unknowns, re-projecting each onto its half-line and keeping the remainder."""
        self.right = [half_line(u, self.right_anchor(i), RIGHT) for i, u in enumerate(rights)]
        self.left = [half_line(u, self.left_anchor(i), LEFT) for i, u in enumerate(lefts)]
        self.right_spill = [
            u - from_half_line(s, self.right_anchor(i)) for i, (u, s) in enumerate(zip(rights, self.right))
        ]
        self.left_spill = [
            u - from_half_line(s, self.left_anchor(i)) for i, (u, s) in enumerate(zip(lefts, self.left))
        ]

    def leakage(self) -> float:
        """Fraction of the stored norm that sits off its half-line."""
        rights, lefts = self.profiles()
        total = _size(rights + lefts)
        return _size(self.right_spill + self.left_spill) / total if total > 0.0 else 0.0

    def norm(self) -> float:
        rights, lefts = self.profiles()
        return _size(rights + lefts)


def initial_state(config: ModelConfig, data: Sequence[ScatteringData], rhs: BMaps,
                  margin: Optional[float] = None) -> HardySystemState:
    margin = 4.0 * rhs.eps if margin is None else margin
    state = HardySystemState(config=config, data=tuple(data), rhs=rhs, margin=margin)
    lattice = data[0].lattice
    zeros = [FrequencyPair.zeros(lattice)] * state.interfaces
    state.tag(zeros, zeros)
    return state


def _weighted(u: FrequencyPair, weight: np.ndarray) -> FrequencyPair:
    return u.with_values(u.values * weight[:, None])


def sweep(state: HardySystemState, rights: Sequence[FrequencyPair], lefts: Sequence[FrequencyPair],
          include_rhs: bool = True) -> Tuple[List[FrequencyPair], List[FrequencyPair]]:
    """One Jacobi application of g -> h + M g.

    Track j feeds the right part of interface j through r(-k) times the
    reflected boosted left part plus s(-k) times the boosted right part of
    interface j - 1, and the left part of interface j - 1 through s(k) times
    the boosted left part of interface j plus r(k) times the reflected right
    part of interface j - 1.
    """
    config = state.config
    m = config.m
    new_rights, new_lefts = [], []
    for j in range(m - 1):
        track, data = config.tracks[j], state.data[j]
        total = state.rhs.g_side[j] if include_rhs else FrequencyPair.zeros(data.lattice)
        reflected = boost(lefts[j], track, data).reflect()
        total = total + _weighted(reflected, data.lattice.reflect(data.r))
        if j >= 1:
            total = total + _weighted(boost(rights[j - 1], track, data), data.lattice.reflect(data.s))
        new_rights.append(unboost(total, track, data))
    for j in range(1, m):
        track, data = config.tracks[j], state.data[j]
        total = state.rhs.f_side[j] if include_rhs else FrequencyPair.zeros(data.lattice)
        if j <= m - 2:
            total = total + _weighted(boost(lefts[j], track, data), data.s)
        reflected = boost(rights[j - 1], track, data).reflect()
        total = total + _weighted(reflected, data.r)
        new_lefts.append(unboost(total, track, data))
    return new_rights, new_lefts


def _distance(a: Sequence[FrequencyPair], b: Sequence[FrequencyPair]) -> float:
    return float(np.sqrt(sum((x - y).norm() ** 2 for x, y in zip(a, b))))


@dataclass(frozen=True)
class NeumannResult:
    state: HardySystemState
    iterations: int
    rho: float
    residual: float
    converged: bool
    leakage: float = 0.0


def neumann_solve(state: HardySystemState, tol: float = 1e-8, max_iter: int = 200, rho_max: float = 0.95,
                  patience: int = 5, logger: Optional[BaseLogger] = None) -> NeumannResult:
    """Fixed-point iteration g <- h + M g with half-line re-projection after every iterate.

    The contraction factor is the geometric mean of the last two update
    ratios, which also covers couplings that alternate between the two
    sides of an interface.
    """
    if state.interfaces == 0:
        return NeumannResult(state=state, iterations=0, rho=0.0, residual=0.0, converged=True, leakage=0.0)
    rights, lefts = state.profiles()
    h_rights, h_lefts = sweep(state, [0 * u for u in rights], [0 * u for u in lefts])
    scale = max(_size(h_rights + h_lefts), 1e-300)
    updates: List[float] = []
    rho, streak, converged = 0.0, 0, False
    iteration = 0
    for iteration in range(1, max_iter + 1):
        new_rights, new_lefts = sweep(state, rights, lefts)
        state.tag(new_rights, new_lefts)
        new_rights, new_lefts = state.profiles()
        update = _distance(new_rights + new_lefts, rights + lefts)
        rights, lefts = new_rights, new_lefts
        updates.append(update)
        state.history.append(update / scale)
        if len(updates) >= 3 and updates[-3] > 0.0:
            rho = float(np.sqrt(updates[-1] / updates[-3]))
            streak = streak + 1 if rho >= rho_max else 0
            if streak >= patience:
                raise NotContracting(rho, iteration)
        if update <= tol * scale:
            converged = True
            break
    check_rights, check_lefts = sweep(state, rights, lefts)
    residual = _distance(check_rights + check_lefts, rights + lefts) / scale
    if logger:
        logger.log_info(
            f"Neumann iteration: {iteration} sweeps, rho={rho:.3f}, residual={residual:.2e}, "
            f"leakage={state.leakage():.2e}"
            + ("" if converged else " (not converged)")
        )
    return NeumannResult(state=state, iterations=iteration, rho=rho, residual=residual, converged=converged,
                         leakage=state.leakage())


def loop_gain(config: ModelConfig, data: Sequence[ScatteringData], samples: int = 2001) -> float:
    """sup over lab frequencies of |r_j(v_j/2 - p)| |r_{j+1}(p - v_{j+1}/2)|, the gain of one reflection cycle."""
    worst = 0.0
    k_max = data[0].lattice.k_max
    p = np.linspace(-k_max, k_max, samples)
    for j in range(config.m - 1):
        here, there = config.tracks[j], config.tracks[j + 1]
        gain = np.abs(data[j].r_at(here.v / 2.0 - p)) * np.abs(data[j + 1].r_at(p - there.v / 2.0))
        worst = max(worst, float(gain.max()))
    return worst
