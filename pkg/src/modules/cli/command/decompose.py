from pathlib import Path
from typing import Optional, Union

from ...core.norms import l2_norm
from ...decompose.decomposition import PcMethod, apply_Pc, full_decompose, h1_coercivity
from ...logging.base import BaseLogger
from ...verify.results import _plain
from ..errors import ConfigError
from ..fieldio import read_field
from .base import BaseCommand


class DecomposeCommand(BaseCommand):
    """Split a field into its scattering part and the boosted discrete components of every track."""
    name = "decompose"

    def __init__(self, logger: BaseLogger, config_path: Union[str, Path], out_dir: Union[str, Path],
                 seed: Optional[int] = None, threads: Optional[int] = None,
                 field_file: Optional[Union[str, Path]] = None):
        super().__init__(logger, config_path, out_dir, seed, threads)
        self.field_file = field_file

    def execute(self) -> Optional[str]:
        path = self.field_file or self.config.decompose.field_file
        if not path:
            raise ConfigError("no field to decompose: pass --field or set decompose.field_file")
        f = read_field(path, self.grid)
        settings = self.config.decomposition_settings(self.threads)
        data, spectra = self.scattering_data(), self.spectra()

        decomposition = self.upstream("decompose", full_decompose, f, self.model, data, spectra,
                                      settings, self.logger)
        scattering = decomposition.scattering_part()
        self.write_field("decompose/scattering_part.ctmf", scattering)
        self.write_csv("decompose/tracks.csv", decomposition.rows())

        method = self.config.decompose.method
        if method is PcMethod.WINDOW:
            continuous = apply_Pc(f, self.model, spectra, 0.0, method)
            self.write_field("decompose/continuous_part.ctmf", continuous)
            method_gap = l2_norm(continuous - scattering) / max(l2_norm(f), 1e-300)
        else:
            method_gap = 0.0

        self.write_json("decompose/decomposition.json", _plain({
            "field": str(path),
            "method": method.value,
            "size": decomposition.size,
            "summary": decomposition.summary(),
            "h1_coercivity": h1_coercivity(decomposition.family),
            "profile_norms": decomposition.family.norms(),
            "discrete_coefficients": [list(c) for c in decomposition.discrete_parts],
            "window_vs_hardy": method_gap,
        }))
        return None
