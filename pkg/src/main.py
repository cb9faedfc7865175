import click
from src.modules.cli.commands import create_run_commands
from src.modules.logging import create_logger


class CtmContext:
    """Context object to store CLI state."""
    def __init__(self):
        self.logger = None
        self.threads = None

pass_context = click.make_pass_decorator(CtmContext, ensure=True)

@click.group()
@click.option('--output', '-o',
              type=click.Choice(['colorful', 'plain', 'json']),
              default='colorful',
              help='Output format (colorful for CLI, plain for CI/file, json for machine parsing)',
              envvar='CTM_OUTPUT')
@click.option('--log-level', '-l',
              type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']),
              default='INFO',
              help='Set the logging level',
              envvar='CTM_LOG_LEVEL')
@click.option('--threads', type=click.IntRange(min=1), default=None,
              help='Worker threads for table building and the acceptance suite',
              envvar='CTM_THREADS')
@pass_context
def cli(ctx, output, log_level, threads):
    """ctm: scattering for matrix charge transfer models."""
    ctx.logger = create_logger(output, log_level)
    ctx.threads = threads

for command in create_run_commands():
    cli.add_command(command)

def main():
    cli()

if __name__ == '__main__':
    main()
