from pathlib import Path
from typing import List, Union
from pydantic import ValidationError
from pydantic_core import ErrorDetails
import yaml

from .config import RunConfig
from .errors import ConfigError


def _build_validation_error_message(errors: List[ErrorDetails]) -> str:
    """Join pydantic errors into one line per offending field."""
    messages = []
    for error in errors:
        field_path = " -> ".join(str(loc) for loc in error['loc'])
        msg = error['msg']
        messages.append(f"Error in field '{field_path}': {msg}")

    return "\n".join(messages)


class RunConfigValidator:
    """Validates YAML content and creates RunConfig instances."""

    @classmethod
    def validate_and_load(cls, yaml_content: str) -> RunConfig:
        """
        Validate YAML content and create a RunConfig instance.

        Raises:
            ConfigError: If the YAML is malformed or a field is invalid
        """
        try:
            data = yaml.safe_load(yaml_content)
        except yaml.YAMLError as e:
            mark = getattr(e, 'problem_mark', None)
            where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
            raise ConfigError(f"Invalid YAML format{where}: {e}")
        if not isinstance(data, dict):
            raise ConfigError("A run configuration must be a mapping with at least a 'tracks' list")
        try:
            return RunConfig.model_validate(data)
        except ValidationError as e:
            raise ConfigError(_build_validation_error_message(e.errors()))

    @classmethod
    def load(cls, path: Union[str, Path]) -> RunConfig:
        path = Path(path)
        try:
            content = path.read_text()
        except OSError as e:
            raise ConfigError(f"Cannot read configuration {path}: {e.strerror}")
        return cls.validate_and_load(content)
