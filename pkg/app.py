import logging
import sys
from pathlib import Path

import click
from pydantic import ValidationError

from config import build_run_config
from utils.errors import DomainError

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def create_app() -> click.Group:
    @click.group()
    @click.option('--tol-abs', type=float, default=None, help='Absolute quadrature tolerance.')
    @click.option('--tol-rel', type=float, default=None, help='Relative quadrature tolerance.')
    @click.option('--out-dir', type=click.Path(file_okay=False, path_type=Path), default=None,
                  help='Directory for default output files.')
    @click.option('--config', 'config_file', type=click.Path(exists=True, dir_okay=False, path_type=Path),
                  default=None, help='File of `key = value` defaults; flags win.')
    @click.option('--jobs', type=int, default=None, help='Parallel workers for grid sweeps.')
    @click.option('-v', '--verbose', count=True, help='-v for INFO, -vv for DEBUG.')
    @click.pass_context
    def app(ctx, tol_abs, tol_rel, out_dir, config_file, jobs, verbose):
        """Zero-point energy of coupled surface plasmons with Drude damping"""
        logging.getLogger().setLevel(LOG_LEVELS[min(verbose, len(LOG_LEVELS) - 1)])
        try:
            ctx.obj = build_run_config(config_file, tol_abs=tol_abs, tol_rel=tol_rel,
                                       out_dir=out_dir, jobs=jobs)
        except (ValidationError, DomainError) as e:
            raise click.UsageError(f"invalid configuration: {e}")

    # Register commands
    from commands.energy import energy
    from commands.figure import figure
    from commands.check import check
    from commands.sweep import sweep

    app.add_command(energy)
    app.add_command(figure)
    app.add_command(check)
    app.add_command(sweep)

    return app


def main():
    logging.basicConfig(stream=sys.stderr, level=logging.WARNING, format=LOG_FORMAT)
    create_app()(prog_name='casimode')


if __name__ == '__main__':
    main()
