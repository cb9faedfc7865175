from typing import Callable, List, Optional, Type

import click

from .command.base import BaseCommand
from .command.decompose import DecomposeCommand
from .command.evolve import EvolveCommand
from .command.freeflow import FreeflowCommand
from .command.scatter import ScatterCommand
from .command.spectrum import SpectrumCommand
from .command.verify import VerifyCommand


def run_options(fn: Callable) -> Callable:
    """Options shared by every subcommand."""
    fn = click.option('--seed', type=int, default=None,
                      help='Seed for random profiles and the acceptance bank (overrides the config)')(fn)
    fn = click.option('--out', 'out_dir', type=click.Path(file_okay=False), default='ctm-out',
                      show_default=True, help='Directory that receives every output file')(fn)
    fn = click.option('--config', 'config_path', type=click.Path(exists=True, dir_okay=False), required=True,
                      help='YAML run configuration')(fn)
    return fn


def _execute(ctx: click.Context, command_class: Type[BaseCommand], config_path: str, out_dir: str,
             seed: Optional[int], **extra) -> None:
    command = command_class(
        logger=ctx.obj.logger,
        config_path=config_path,
        out_dir=out_dir,
        seed=seed,
        threads=ctx.obj.threads,
        **extra,
    )
    code = command.run()
    if code:
        ctx.exit(code)


def create_run_commands() -> List[click.Command]:
    """Create the pipeline commands: scatter, spectrum, freeflow, evolve, decompose and verify."""

    @click.command(name='scatter')
    @run_options
    @click.pass_context
    def scatter(ctx, config_path: str, out_dir: str, seed: Optional[int]):
        """Tabulate the scattering coefficients s(k), r(k) of every track."""
        _execute(ctx, ScatterCommand, config_path, out_dir, seed)

    @click.command(name='spectrum')
    @run_options
    @click.pass_context
    def spectrum(ctx, config_path: str, out_dir: str, seed: Optional[int]):
        """Compute the discrete spectrum of every track and audit the hypotheses."""
        _execute(ctx, SpectrumCommand, config_path, out_dir, seed)

    @click.command(name='freeflow')
    @run_options
    @click.option('--phi', 'phi_file', type=click.Path(exists=True, dir_okay=False), default=None,
                  help='Field file whose flat transform seeds the profile family')
    @click.pass_context
    def freeflow(ctx, config_path: str, out_dir: str, seed: Optional[int], phi_file: Optional[str]):
        """Build the profile family and sample the free-flow approximant."""
        _execute(ctx, FreeflowCommand, config_path, out_dir, seed, phi_file=phi_file)

    @click.command(name='evolve')
    @run_options
    @click.option('--field', 'field_file', type=click.Path(exists=True, dir_okay=False), default=None,
                  help='Initial field file (overrides evolve.init)')
    @click.pass_context
    def evolve(ctx, config_path: str, out_dir: str, seed: Optional[int], field_file: Optional[str]):
        """Evolve the full multichannel flow and record norms and mode pairings."""
        _execute(ctx, EvolveCommand, config_path, out_dir, seed, field_file=field_file)

    @click.command(name='decompose')
    @run_options
    @click.option('--field', 'field_file', type=click.Path(exists=True, dir_okay=False), default=None,
                  help='Field file to decompose (overrides decompose.field_file)')
    @click.pass_context
    def decompose(ctx, config_path: str, out_dir: str, seed: Optional[int], field_file: Optional[str]):
        """Split a field into scattering part and boosted discrete components."""
        _execute(ctx, DecomposeCommand, config_path, out_dir, seed, field_file=field_file)

    @click.command(name='verify')
    @run_options
    @click.pass_context
    def verify(ctx, config_path: str, out_dir: str, seed: Optional[int]):
        """Run the acceptance battery; exits nonzero naming the first failing check."""
        _execute(ctx, VerifyCommand, config_path, out_dir, seed)

    return [scatter, spectrum, freeflow, evolve, decompose, verify]
