from .base import BaseCommand, EXIT_CONFIG, EXIT_FAILED, EXIT_OK
from .scatter import ScatterCommand
from .spectrum import SpectrumCommand
from .freeflow import FreeflowCommand
from .evolve import EvolveCommand
from .decompose import DecomposeCommand
from .verify import VerifyCommand

__all__ = [
    'BaseCommand', 'EXIT_OK', 'EXIT_FAILED', 'EXIT_CONFIG',
    'ScatterCommand', 'SpectrumCommand', 'FreeflowCommand', 'EvolveCommand', 'DecomposeCommand',
    'VerifyCommand',
]
