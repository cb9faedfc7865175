from dataclasses import replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ...core.norms import l2_norm
from ...evolve.discrete import boosted_mode, spectrum_modes
from ...evolve.propagator import SplitStepPropagator
from ...evolve.scattering import build_T
from ...evolve.trajectory import Trajectory
from ...freeflow.profiles import recurse_profiles
from ...logging.base import BaseLogger
from ...verify.traces import orthogonality_trace, trace_ratios
from ..config import InitKind
from ..errors import ConfigError
from ..fieldio import read_field
from .freeflow import FreeflowCommand


class EvolveCommand(FreeflowCommand):
    """Run the full multichannel flow from one of three initial data and record its norms."""
    name = "evolve"

    def __init__(self, logger: BaseLogger, config_path: Union[str, Path], out_dir: Union[str, Path],
                 seed: Optional[int] = None, threads: Optional[int] = None,
                 field_file: Optional[Union[str, Path]] = None):
        super().__init__(logger, config_path, out_dir, seed, threads)
        self.field_file = field_file

    def _from_profile(self, times: List[float]) -> Trajectory:
        tolerances = self.config.numerics.tolerances
        family = self.upstream("freeflow", recurse_profiles, self.seed_profile(), self.model,
                               self.scattering_data(), tolerances.s_min)
        run = self.upstream("evolve", build_T, family, times, self.config.step_settings(),
                            self.spectra(), 1.0, self.logger)
        self.write_csv("evolve/deviation.csv", [
            {"t": t, "deviation": d, "relative": d / max(run.initial_size, 1e-300)}
            for t, d in zip(times, run.deviations)
        ])
        self.write_json("evolve/deviation.json", {
            "initial_size": run.initial_size,
            "correction": run.correction,
            "rate": run.rate,
            "max_relative": max(run.relative_deviations),
        })
        return run.trajectory

    def _from_mode(self, times: List[float]) -> Trajectory:
        settings = self.config.evolve
        track = self.model.tracks[settings.track]
        modes = spectrum_modes(self.spectra()[settings.track])
        if settings.mode >= len(modes):
            raise ConfigError(
                f"evolve.mode={settings.mode} but track {settings.track} has {len(modes)} discrete modes"
            )
        mode = modes[settings.mode]
        psi0 = boosted_mode(track, mode, 0.0)
        # growth of an unstable mode is part of the prediction, not a numerical failure
        unchecked = replace(self.config.step_settings(), growth_limit=None)
        fields = self.upstream("evolve", SplitStepPropagator(self.model, self.grid, unchecked, self.logger).evolve,
                               psi0, 0.0, times)
        rows = []
        for t, psi in zip(times, fields):
            predicted = boosted_mode(track, mode, t)
            gap = l2_norm(psi - predicted)
            rows.append({"t": t, "remainder": gap, "relative": gap / max(l2_norm(predicted), 1e-300)})
        self.write_csv("evolve/mode_remainder.csv", rows)
        return Trajectory.from_fields(self.model, times, fields, self.config.numerics.eps)

    def _from_field(self, times: List[float]) -> Trajectory:
        path = self.field_file or self.config.evolve.field_file
        if not path:
            raise ConfigError("no initial field: pass --field or set evolve.field_file")
        psi0 = read_field(path, self.grid)
        propagator = SplitStepPropagator(self.model, self.grid, self.config.step_settings(), self.logger)
        fields = self.upstream("evolve", propagator.evolve, psi0, 0.0, times)
        return Trajectory.from_fields(self.model, times, fields, self.config.numerics.eps)

    def execute(self) -> Optional[str]:
        times = self.config.record_times()
        init = InitKind.FIELD_FILE if self.field_file else self.config.evolve.init
        if init == InitKind.S0_PROFILE:
            trajectory = self._from_profile(times)
        elif init == InitKind.BOOSTED_MODE:
            trajectory = self._from_mode(times)
        else:
            trajectory = self._from_field(times)

        series = orthogonality_trace(trajectory, self.spectra(), self.model)
        path = self.output_path("evolve/trajectory.csv")
        self.manifest.add(trajectory.to_csv(path), "table")
        self.write_field("evolve/final.ctmf", trajectory.final.field)
        summary: Dict[str, Any] = {
            "init": init.value,
            "t_final": trajectory.final.t,
            "final_norms": trajectory.final.norms.as_row(),
            "pairing_ratios": trace_ratios(series),
        }
        self.write_json("evolve/summary.json", summary)
        self.logger.log_table("evolve", {"init": init.value, "snapshots": len(trajectory.states),
                                         "final L2": f"{trajectory.final.norms.l2:.6g}"})
        return None
