from pathlib import Path

import click

from config import RunConfig
from figures.builders import sweep_table
from figures.tables import write_csv
from physics.dielectric import validate_damping
from utils.command_utils import FLOAT_LIST, numerical_command
from utils.errors import DomainError


@click.command()
@click.option('--x', 'x', type=float, default=0.0, show_default=True)
@click.option('--d', 'distances', type=FLOAT_LIST, default='0.5,1,2', show_default=True,
              help='Gap widths in units of c / omega_pl.')
@click.option('--out', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='CSV path (default <out-dir>/sweep.csv).')
@click.pass_obj
@numerical_command
def sweep(run: RunConfig, x, distances, out):
    """Area coefficient C(x) and the energy per area scaled by d^2"""
    try:
        validate_damping(x)
    except DomainError as e:
        raise click.BadParameter(str(e), param_hint='--x')
    if any(not d > 0 for d in distances):
        raise click.BadParameter("gap widths must be > 0", param_hint='--d')
    if any(not b > a for a, b in zip(distances, distances[1:])):
        raise click.BadParameter("gap widths must be increasing", param_hint='--d')
    out = out or run.out_dir / 'sweep.csv'
    write_csv(sweep_table(x, distances, run.quadrature), out)
    click.echo(str(out))
