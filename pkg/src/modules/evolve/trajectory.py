import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Sequence, Tuple, Union

from ..core.fields import SpinorField
from ..core.norms import NormRecord, norm_suite
from ..core.tracks import ModelConfig


@dataclass(frozen=True)
class EvolutionState:
    """One snapshot of a run: the field at time t and its norms."""
    t: float
    field: SpinorField
    norms: NormRecord


@dataclass
class Trajectory:
    config: ModelConfig
    states: List[EvolutionState] = field(default_factory=list)
    pairings: Dict[str, List[complex]] = field(default_factory=dict)

    @classmethod
    def from_fields(cls, config: ModelConfig, times: Sequence[float], fields: Sequence[SpinorField],
                    eps: float = 1.0) -> "Trajectory":
        states = [
            EvolutionState(t=float(t), field=f, norms=norm_suite(f, config, float(t), eps))
            for t, f in zip(times, fields)
        ]
        return cls(config=config, states=states)

    @property
    def times(self) -> List[float]:
        return [state.t for state in self.states]

    @property
    def fields(self) -> List[SpinorField]:
        return [state.field for state in self.states]

    @property
    def final(self) -> EvolutionState:
        return self.states[-1]

    def rows(self) -> List[Dict[str, float]]:
        rows = []
        for index, state in enumerate(self.states):
            row = {"t": state.t, **state.norms.as_row()}
            for name, series in self.pairings.items():
                row[f"pairing_{name}"] = abs(series[index])
            rows.append(row)
        return rows

    def to_csv(self, path: Union[str, Path]) -> Path:
        path = Path(path)
        rows = self.rows()
        columns: Tuple[str, ...] = tuple(rows[0].keys()) if rows else ("t",)
        with path.open("w", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=columns)
            writer.writeheader()
            for row in rows:
                writer.writerow({key: f"{value:.12e}" for key, value in row.items()})
        return path
