from pathlib import Path
from typing import Optional, Union

import numpy as np

from ...core.norms import h1_norm, l2_norm
from ...dft.flat import flat_F0_adjoint
from ...dft.frequency import FrequencyPair
from ...freeflow.approximant import (
    coercivity_ratio,
    eval_S,
    localization_defect,
    residual_trace,
    transition_defect,
)
from ...freeflow.profiles import ProfileFamily, recurse_profiles, recursion_defect, threshold_frequencies
from ...logging.base import BaseLogger
from ...verify.bank import random_profile
from ..fieldio import read_field
from .base import BaseCommand


class FreeflowCommand(BaseCommand):
    """Build the profile family from a seed and sample the free-flow approximant S(t)phi."""
    name = "freeflow"

    def __init__(self, logger: BaseLogger, config_path: Union[str, Path], out_dir: Union[str, Path],
                 seed: Optional[int] = None, threads: Optional[int] = None,
                 phi_file: Optional[Union[str, Path]] = None):
        super().__init__(logger, config_path, out_dir, seed, threads)
        self.phi_file = phi_file

    def seed_profile(self) -> FrequencyPair:
        """Seed from a field file, then configured packets, then a random profile."""
        if self.phi_file:
            return flat_F0_adjoint(read_field(self.phi_file, self.grid), self.lattice)
        configured = self.config.freeflow.profile(self.lattice)
        if configured is not None:
            return configured
        self.logger.log_info(f"no packets configured; drawing a random profile (seed {self.seed or 0})")
        # no threshold classification here; every reflecting track counts as generic
        reflecting = [not track.profile.is_zero for track in self.model.tracks]
        return random_profile(self.lattice, self.rng(), notches=threshold_frequencies(self.model, reflecting))

    def _write_profiles(self, family: ProfileFamily):
        k = self.lattice.samples
        rows = []
        for i, kk in enumerate(k):
            row = {"k": float(kk)}
            for index, profile in enumerate(family.per_ell, 1):
                row[f"phi{index}_1_re"] = float(profile.values[i, 0].real)
                row[f"phi{index}_1_im"] = float(profile.values[i, 0].imag)
                row[f"phi{index}_2_re"] = float(profile.values[i, 1].real)
                row[f"phi{index}_2_im"] = float(profile.values[i, 1].imag)
            rows.append(row)
        self.write_csv("freeflow/profiles.csv", rows)

    def execute(self) -> Optional[str]:
        tolerances = self.config.numerics.tolerances
        family = self.upstream("freeflow", recurse_profiles, self.seed_profile(), self.model,
                               self.scattering_data(), tolerances.s_min)
        self._write_profiles(family)

        initial = eval_S(family, 0.0)
        self.write_field("freeflow/S0.ctmf", initial)
        for t in self.config.freeflow.times:
            self.write_field(f"freeflow/S_t{t:.3f}.ctmf", eval_S(family, float(t)))

        times = np.asarray(self.config.record_times())
        samples = residual_trace(family, times)
        self.write_csv("freeflow/residual.csv", [
            {"t": s.t, "residual": s.residual, "relative": s.relative, "size": s.size} for s in samples
        ])

        coercivity = coercivity_ratio(family)
        worst = max(s.residual for s in samples)
        self.write_json("freeflow/profiles.json", {
            "norms": family.norms(),
            "recursion_defect": recursion_defect(family, tolerances.s_min),
            "transition_defects": [transition_defect(family, index) for index in range(1, family.m)],
            "coercivity_ratio": coercivity,
            "initial_l2": l2_norm(initial),
            "initial_h1": h1_norm(initial),
            "localization_defects": localization_defect(family, 0.0, self.config.numerics.eps),
            "max_residual": worst,
        })
        self.logger.log_table("freeflow", {
            "tracks": family.m,
            "coercivity": f"{coercivity:.4g}",
            "max residual": f"{worst:.3e}",
        })
        return None
