from enum import Enum
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..core.errors import CtmError
from ..core.grid import Grid1D, KLattice
from ..core.profiles import PotentialProfile, ProfileKind
from ..core.tracks import ModelConfig, SolitonTrack
from ..decompose.decomposition import DecompositionSettings, PcMethod
from ..dft.frequency import FrequencyPair, gaussian_packet
from ..evolve.propagator import StepSettings
from ..jost.solver import JostSettings
from ..spectrum.discrete import EigenSettings
from ..spectrum.operator import Stencil
from ..verify.report.base import ReportSinkType


class StrictModel(BaseModel):
    # silent typos in tolerances would invalidate acceptance runs
    model_config = ConfigDict(extra="forbid")


class ProfileConfig(StrictModel):
    kind: ProfileKind = ProfileKind.ZERO
    u_amplitude: float = 0.0
    w_amplitude: float = 0.0
    width: float = Field(1.0, gt=0)


class TrackConfig(StrictModel):
    omega: float = Field(gt=0)
    v: float = 0.0
    y: float = 0.0
    gamma: float = 0.0
    profile: ProfileConfig = ProfileConfig()

    def to_track(self) -> SolitonTrack:
        profile = PotentialProfile(
            kind=self.profile.kind,
            u_amplitude=self.profile.u_amplitude,
            w_amplitude=self.profile.w_amplitude,
            width=self.profile.width,
            omega=self.omega,
        )
        return SolitonTrack(omega=self.omega, v=self.v, y=self.y, gamma=self.gamma, profile=profile)


class TolerancesConfig(StrictModel):
    residual: float = Field(1e-3, gt=0)
    unitarity: float = Field(1e-6, gt=0)
    neumann: float = Field(1e-8, gt=0)
    decomposition: float = Field(1e-3, gt=0)
    rho_max: float = Field(0.95, gt=0, lt=1)
    s_min: float = Field(1e-3, gt=0)
    growth: float = Field(0.1, gt=0)
    gap: float = Field(1e-3, gt=0)


class NumericsConfig(StrictModel):
    x_min: float = -120.0
    x_max: float = 120.0
    n_x: int = 4096
    k_max: float = Field(32.0, gt=0)
    n_k: Optional[int] = None
    k_floor: float = Field(0.05, gt=0)
    dt: float = Field(1e-3, gt=0)
    # largest frequency the time stepper has to resolve; sets the CFL bound
    k_resolve: float = Field(8.0, gt=0)
    t_final: float = Field(2.0, gt=0)
    sponge: bool = False
    eps: float = Field(1.0, gt=0)
    stencil: Stencil = Stencil.FOURIER
    eigen_nodes: int = Field(1024, gt=0)
    tolerances: TolerancesConfig = TolerancesConfig()

    @model_validator(mode='after')
    def validate_grid(self) -> 'NumericsConfig':
        try:
            self.grid().lattice(self.k_max, self.n_k)
        except CtmError as e:
            raise ValueError(str(e))
        return self

    def grid(self) -> Grid1D:
        return Grid1D(self.x_min, self.x_max, self.n_x)

    def lattice(self) -> KLattice:
        return self.grid().lattice(self.k_max, self.n_k)


class OutputConfig(StrictModel):
    sinks: List[ReportSinkType] = [ReportSinkType.JSON]
    cache_dir: Optional[str] = None
    job_name: str = "ctm"


class PacketConfig(StrictModel):
    """One Gaussian packet amplitude * exp(-(k - center)^2 / 2 width^2 - i k position)."""
    center: float = 0.0
    width: float = Field(1.0, gt=0)
    position: float = 0.0
    amplitude: float = 1.0
    phase: float = 0.0
    component: int = Field(1, ge=1, le=2)


class FreeflowConfig(StrictModel):
    packets: List[PacketConfig] = []
    times: List[float] = [0.0, 0.5, 1.0, 1.5, 2.0]

    def profile(self, lattice: KLattice) -> Optional[FrequencyPair]:
        if not self.packets:
            return None
        values = np.zeros((lattice.n, 2), dtype=np.complex128)
        for packet in self.packets:
            amplitude = packet.amplitude * np.exp(1j * packet.phase)
            values[:, packet.component - 1] += gaussian_packet(
                lattice, packet.center, packet.width, packet.position, amplitude
            )
        return FrequencyPair(lattice, values)


class InitKind(str, Enum):
    S0_PROFILE = "s0_profile"
    BOOSTED_MODE = "boosted_mode"
    FIELD_FILE = "field_file"


class EvolveConfig(StrictModel):
    init: InitKind = InitKind.S0_PROFILE
    track: int = Field(0, ge=0)
    mode: int = Field(0, ge=0)
    field_file: Optional[str] = None
    records: int = Field(21, ge=2)

    @model_validator(mode='after')
    def validate_init(self) -> 'EvolveConfig':
        if self.init == InitKind.FIELD_FILE and not self.field_file:
            raise ValueError("field_file is required when init is 'field_file'")
        return self


class DecomposeConfig(StrictModel):
    field_file: Optional[str] = None
    method: PcMethod = PcMethod.HARDY


class VerifyConfig(StrictModel):
    seeds: List[int] = [0]
    checks: Optional[List[str]] = None
    bank_size: int = Field(10, ge=1)


class RunConfig(StrictModel):
    """Top-level configuration document shared by every subcommand."""
    tracks: List[TrackConfig] = Field(min_length=1)
    l_sep: float = Field(0.0, ge=0)
    c_sep: float = Field(0.0, ge=0)
    numerics: NumericsConfig = NumericsConfig()
    output: OutputConfig = OutputConfig()
    freeflow: FreeflowConfig = FreeflowConfig()
    evolve: EvolveConfig = EvolveConfig()
    decompose: DecomposeConfig = DecomposeConfig()
    verify: VerifyConfig = VerifyConfig()

    @model_validator(mode='after')
    def validate_model(self) -> 'RunConfig':
        try:
            model = self.to_model()
            model.check_box(self.numerics.grid())
        except CtmError as e:
            raise ValueError(str(e))
        if self.evolve.init == InitKind.BOOSTED_MODE and self.evolve.track >= len(self.tracks):
            raise ValueError(f"evolve.track={self.evolve.track} but only {len(self.tracks)} tracks are configured")
        return self

    def to_model(self) -> ModelConfig:
        return ModelConfig(
            tracks=tuple(track.to_track() for track in self.tracks),
            l_sep=self.l_sep,
            c_sep=self.c_sep,
            t_final=self.numerics.t_final,
            dt=self.numerics.dt,
        )

    def jost_settings(self) -> JostSettings:
        return JostSettings(k_floor=self.numerics.k_floor, tol_residual=self.numerics.tolerances.residual)

    def eigen_settings(self) -> EigenSettings:
        return EigenSettings(max_nodes=self.numerics.eigen_nodes, stencil=self.numerics.stencil,
                             tol_gap=self.numerics.tolerances.gap)

    def step_settings(self) -> StepSettings:
        return StepSettings(dt=self.numerics.dt, k_max=self.numerics.k_resolve, sponge=self.numerics.sponge,
                            growth_limit=self.numerics.tolerances.growth)

    def decomposition_settings(self, threads: Optional[int] = None) -> DecompositionSettings:
        tolerances = self.numerics.tolerances
        return DecompositionSettings(
            eps=self.numerics.eps,
            tol_neumann=tolerances.neumann,
            rho_max=tolerances.rho_max,
            tol_decomp=tolerances.decomposition,
            s_min=tolerances.s_min,
            threads=threads,
        )

    def record_times(self) -> List[float]:
        return [float(t) for t in np.linspace(0.0, self.numerics.t_final, self.evolve.records)]
