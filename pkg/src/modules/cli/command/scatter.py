from typing import Any, Dict, List, Optional

import numpy as np

from ...jost.data import ScatteringData
from ...jost.identities import derivative_decay, large_k_fit, unitarity_report, verify_connection
from .base import BaseCommand


class ScatterCommand(BaseCommand):
    """Tabulate s(k) and r(k) of every track and audit the coefficient identities."""
    name = "scatter"

    def _rows(self, data: ScatteringData) -> List[Dict[str, Any]]:
        defect = np.abs(data.s) ** 2 + np.abs(data.r) ** 2 - 1.0
        return [
            {
                "k": float(k),
                "s_re": float(s.real),
                "s_im": float(s.imag),
                "r_re": float(r.real),
                "r_im": float(r.imag),
                "unitarity": float(d),
                "punctured": int(p),
            }
            for k, s, r, d, p in zip(data.k_samples, data.s, data.r, defect, data.punctured)
        ]

    def _audit(self, index: int, data: ScatteringData) -> Dict[str, Any]:
        fit = large_k_fit(data)
        audit: Dict[str, Any] = {"track": index, "omega": data.omega, "content_hash": data.content_hash}
        audit.update(unitarity_report(data).as_dict())
        audit["large_k"] = {
            "s_constant": fit.s_constant,
            "r_constant": fit.r_constant,
            "k_low": fit.k_low,
            "k_high": fit.k_high,
        }
        # finite-difference exponents; NaN when the band is too short to fit
        audit["derivative_decay"] = {
            "order_1": derivative_decay(data, 1),
            "order_2": derivative_decay(data, 2),
        }
        audit["connection"] = verify_connection(data, 1.0)
        return audit

    def execute(self) -> Optional[str]:
        tolerance = self.config.numerics.tolerances.unitarity
        audits = []
        for index, data in enumerate(self.scattering_data(), 1):
            self.write_csv(f"scatter/track_{index}.csv", self._rows(data))
            audits.append(self._audit(index, data))
        worst = max(audit["unitarity"] for audit in audits)
        passed = worst < tolerance
        self.write_json("scatter/unitarity.json", {
            "max_unitarity": worst,
            "threshold": tolerance,
            "pass": passed,
            "tracks": audits,
        })
        self.logger.log_check("scatter.unitarity", worst, tolerance, passed)
        return None if passed else "scatter.unitarity"
