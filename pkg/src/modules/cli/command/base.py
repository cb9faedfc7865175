import csv
import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TypeVar, Union

import numpy as np

from ...core.errors import CtmError
from ...core.fields import SpinorField
from ...core.grid import Grid1D, KLattice
from ...core.tracks import ModelConfig
from ...jost.builder import build_scattering_data
from ...jost.cache import TableStore, TableStoreType, create_table_store
from ...jost.data import ScatteringData
from ...logging.base import BaseLogger
from ...spectrum.discrete import DiscreteSpectrum, discrete_eigens
from ..config import RunConfig
from ..errors import ConfigError, UpstreamError
from ..fieldio import write_field
from ..manifest import Manifest
from ..validator import RunConfigValidator

T = TypeVar("T")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


class BaseCommand(ABC):
    """Shared plumbing of every subcommand: config loading, tables, outputs and the manifest."""
    name: str = ""

    def __init__(self, logger: BaseLogger, config_path: Union[str, Path], out_dir: Union[str, Path],
                 seed: Optional[int] = None, threads: Optional[int] = None):
        self.logger = logger
        self.config_path = Path(config_path)
        self.out_dir = Path(out_dir)
        self.seed = seed
        self.threads = threads
        self.config: Optional[RunConfig] = None
        self.manifest: Optional[Manifest] = None
        self._data: Optional[List[ScatteringData]] = None
        self._spectra: Optional[List[DiscreteSpectrum]] = None

    @property
    def model(self) -> ModelConfig:
        return self.config.to_model()

    @property
    def grid(self) -> Grid1D:
        return self.config.numerics.grid()

    @property
    def lattice(self) -> KLattice:
        return self.config.numerics.lattice()

    def upstream(self, stage: str, fn: Callable[..., T], *args, **kwargs) -> T:
        """Call into the pipeline, tagging any failure with the stage it came from."""
        try:
            return fn(*args, **kwargs)
        except UpstreamError:
            raise
        except CtmError as e:
            raise UpstreamError(stage, e, str(self.config_path))

    def table_store(self) -> Optional[TableStore]:
        if not self.config.output.cache_dir:
            return None
        return create_table_store(TableStoreType.FILE, self.config.output.cache_dir)

    def scattering_data(self) -> List[ScatteringData]:
        if self._data is None:
            store = self.table_store()
            self._data = [
                self.upstream("jost", build_scattering_data, track, self.grid, self.lattice,
                              self.config.jost_settings(), self.logger, store, self.threads or 1)
                for track in self.model.tracks
            ]
        return self._data

    def spectra(self) -> List[DiscreteSpectrum]:
        if self._spectra is None:
            settings = self.config.eigen_settings()
            self._spectra = [
                self.upstream("spectrum", discrete_eigens, track, self.grid, settings, self.logger)
                for track in self.model.tracks
            ]
        return self._spectra

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed if self.seed is not None else 0)

    def output_path(self, relative: str) -> Path:
        path = self.out_dir / relative
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    def write_json(self, relative: str, payload: Dict[str, Any], kind: str = "report") -> Path:
        path = self.output_path(relative)
        with open(path, "w") as f:
            json.dump(payload, f, indent=2, sort_keys=True)
        return self.manifest.add(path, kind)

    def write_csv(self, relative: str, rows: Sequence[Dict[str, float]], kind: str = "table") -> Path:
        path = self.output_path(relative)
        columns = list(rows[0].keys()) if rows else []
        with path.open("w", newline="") as handle:
            writer = csv.DictWriter(handle, fieldnames=columns)
            writer.writeheader()
            for row in rows:
                writer.writerow({key: f"{value:.12e}" if isinstance(value, float) else value
                                 for key, value in row.items()})
        return self.manifest.add(path, kind)

    def write_field(self, relative: str, field: SpinorField) -> Path:
        return self.manifest.add(write_field(self.output_path(relative), field), "field")

    @abstractmethod
    def execute(self) -> Optional[str]:
        """Do the work; return the id of a failing check, or None."""
        pass

    def run(self) -> int:
        """Load the configuration, execute and write the manifest; returns the exit code."""
        try:
            self.config = RunConfigValidator.load(self.config_path)
        except ConfigError as e:
            self.logger.log_error(f"[{e.check_id}] {e}")
            return EXIT_CONFIG
        self.manifest = Manifest(self.out_dir, self.name, self.config, self.seed)
        self.logger.log_stage(self.name, f"config={self.config_path} out={self.out_dir}")
        try:
            failed = self.execute()
        except ConfigError as e:
            self.logger.log_error(f"[{e.check_id}] {e}")
            self.manifest.write(EXIT_CONFIG, e.check_id)
            return EXIT_CONFIG
        except CtmError as e:
            self.logger.log_error(f"[{e.check_id}] {e}")
            self.manifest.write(EXIT_FAILED, e.check_id)
            return EXIT_FAILED
        code = EXIT_OK if failed is None else EXIT_FAILED
        self.manifest.write(code, failed)
        if failed is not None:
            self.logger.log_error(f"failed check: {failed}")
        return code
