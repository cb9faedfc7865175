from .errors import ConfigError, FieldFileError, UpstreamError
from .config import RunConfig
from .validator import RunConfigValidator
from .fieldio import read_field, write_field
from .manifest import Manifest, config_hash
from .commands import create_run_commands

__all__ = [
    'ConfigError', 'FieldFileError', 'UpstreamError', 'RunConfig', 'RunConfigValidator',
    'read_field', 'write_field', 'Manifest', 'config_hash', 'create_run_commands',
]
