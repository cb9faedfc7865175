import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from .config import RunConfig

MANIFEST_NAME = "manifest.json"


def config_hash(config: RunConfig) -> str:
    canonical = json.dumps(config.model_dump(mode="json"), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


@dataclass
class Manifest:
    """Index of every file a command wrote under its output directory."""
    out_dir: Path
    command: str
    config: RunConfig
    seed: Optional[int] = None
    files: List[Dict[str, Any]] = field(default_factory=list)

    def add(self, path: Path, kind: str) -> Path:
        data = Path(path).read_bytes()
        self.files.append({
            "path": str(Path(path).relative_to(self.out_dir)),
            "kind": kind,
            "bytes": len(data),
            "sha256": hashlib.sha256(data).hexdigest(),
        })
        return path

    def as_dict(self, exit_code: int = 0, failed_check: Optional[str] = None) -> Dict[str, Any]:
        return {
            "command": self.command,
            "config_sha256": config_hash(self.config),
            "seed": self.seed,
            "exit_code": exit_code,
            "failed_check": failed_check,
            "files": sorted(self.files, key=lambda entry: entry["path"]),
        }

    def write(self, exit_code: int = 0, failed_check: Optional[str] = None) -> Path:
        path = self.out_dir / MANIFEST_NAME
        self.out_dir.mkdir(parents=True, exist_ok=True)
        with open(path, "w") as f:
            json.dump(self.as_dict(exit_code, failed_check), f, indent=2, sort_keys=True)
        return path
