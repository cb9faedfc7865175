from typing import Any, Dict, Optional

from ...core.errors import ProfileError
from ...core.tracks import SolitonTrack
from ...spectrum.discrete import DiscreteSpectrum, band_distance, discrete_eigens
from ...spectrum.errors import AxisViolation, EmbeddedEigenvalue, JordanChainTooLong
from ...verify.context import classify_threshold
from .base import BaseCommand


def _complex(value: complex) -> Dict[str, float]:
    return {"re": float(complex(value).real), "im": float(complex(value).imag)}


class SpectrumCommand(BaseCommand):
    """Discrete spectrum of every track's rest-frame operator, with a hypothesis audit."""
    name = "spectrum"

    def _spectrum(self, index: int, track: SolitonTrack, audit: Dict[str, Any]) -> Optional[DiscreteSpectrum]:
        try:
            spectrum = discrete_eigens(track, self.grid, self.config.eigen_settings(), self.logger)
        except EmbeddedEigenvalue as e:
            audit["embedded"] = {"pass": False, "error": str(e)}
            return None
        except (AxisViolation, JordanChainTooLong) as e:
            audit["axes"] = {"pass": False, "error": str(e)}
            return None
        audit["embedded"] = {"pass": True}
        audit["axes"] = {"pass": True}
        for number, pair in enumerate(spectrum.eigenpairs):
            self.write_field(f"spectrum/track_{index}_mode_{number}.ctmf", pair.vector)
        return spectrum

    def _summary(self, spectrum: DiscreteSpectrum) -> Dict[str, Any]:
        return {
            "eigenvalues": [
                {
                    "value": _complex(pair.value),
                    "decay_rate": pair.decay_rate,
                    "parity": pair.parity,
                    "flagged": pair.flagged,
                    "band_distance": band_distance(pair.value, spectrum.omega),
                }
                for pair in spectrum.eigenpairs
            ],
            "flagged": [_complex(value) for value in spectrum.flagged],
            "jordan_chains": [
                {"residual": chain.residual, "parity": chain.parity} for chain in spectrum.jordan_chains
            ],
            "zero_multiplicity": spectrum.zero_multiplicity,
        }

    def execute(self) -> Optional[str]:
        failed: Optional[str] = None
        tracks = []
        for index, (track, data) in enumerate(zip(self.model.tracks, self.scattering_data()), 1):
            audit: Dict[str, Any] = {}
            try:
                constant = track.profile.verify(self.grid.x)
                audit["decay"] = {"pass": True, "rate": track.profile.gamma_decay, "constant": constant}
            except ProfileError as e:
                audit["decay"] = {"pass": False, "error": str(e)}
                failed = failed or e.check_id
            spectrum = self._spectrum(index, track, audit)
            if spectrum is None:
                failed = failed or ("spectrum.embedded" if not audit["embedded"]["pass"] else "spectrum.axis")
            threshold = classify_threshold(data, self.logger)
            audit["thresholds"] = {
                "generic": threshold is not None and threshold.generic,
                "classification": threshold.classification.value if threshold else "inconclusive",
                "c0": threshold.c0 if threshold else None,
            }
            entry: Dict[str, Any] = {"track": index, "omega": track.omega, "audit": audit}
            if spectrum is not None:
                entry.update(self._summary(spectrum))
                self.logger.log_table(f"track {index} spectrum", {
                    "eigenvalues": len(spectrum.eigenpairs),
                    "jordan chains": len(spectrum.jordan_chains),
                    "zero multiplicity": spectrum.zero_multiplicity,
                    "thresholds": audit["thresholds"]["classification"],
                })
            tracks.append(entry)
        self.write_json("spectrum/spectrum.json", {"tracks": tracks})
        return failed
