import logging
from pathlib import Path
from typing import Dict, List, Tuple

import click

from config import RunConfig
from figures.builders import figure1_table, figure2_table, shift_table
from figures.svg_chart import write_svg
from figures.tables import FigureTable, write_csv
from physics.discrete_modes import LehmanGrid, discrete_spectrum
from physics.mode_spectrum import ModePoint
from utils.command_utils import numerical_command

logger = logging.getLogger(__name__)

FIGURE3_DAMPING = 0.1


def build_figure(run: RunConfig, number: int, kd: float, samples: int,
                 x: float) -> Tuple[FigureTable, Dict[str, List[float]]]:
    """Data table of a figure and the series its chart draws"""
    if number == 3:
        spectrum = discrete_spectrum(ModePoint(x=x, kappa=kd),
                                     LehmanGrid(omega_max=run.omega_max, i_max=run.i_max))
        table = shift_table(spectrum, x, kd)
        series = {
            'shift_f1': list(spectrum.shifts_f1),
            'shift_f2': list(spectrum.shifts_f2),
            'shift_f1+shift_f2': list(spectrum.combined_shifts),
        }
        return table, series

    if number == 1:
        table = figure1_table(kappa=kd, samples=samples)
    else:
        table = figure2_table(run.quadrature, kappa=kd, jobs=run.jobs)
    return table, {name: table.column(name) for name in table.column_names[1:]}


@click.command()
@click.argument('number', type=click.IntRange(1, 3))
@click.option('--kd', type=float, default=0.5, show_default=True)
@click.option('--samples', type=click.IntRange(min=2), default=500, show_default=True,
              help='Frequency samples of figure 1.')
@click.option('--x', 'x', type=float, default=None,
              help=f'Damping ratio; figure 3 only (default {FIGURE3_DAMPING:g}).')
@click.option('--out', type=click.Path(dir_okay=False, path_type=Path), default=None,
              help='CSV path (default <out-dir>/figure<N>.csv).')
@click.option('--svg', type=click.Path(dir_okay=False, path_type=Path), default=None, help='Optional SVG chart.')
@click.pass_obj
@numerical_command
def figure(run: RunConfig, number, kd, samples, x, out, svg):
    """Write the data table of figure NUMBER as CSV"""
    if x is not None and number != 3:
        raise click.BadParameter(f"figure {number} has fixed damping ratios; --x applies to figure 3 only",
                                 param_hint='--x')
    if x is not None and not 0 < x < float('inf'):
        raise click.BadParameter("figure 3 needs a finite damping ratio > 0", param_hint='--x')

    table, series = build_figure(run, number, kd, samples, FIGURE3_DAMPING if x is None else x)
    logger.info("Figure %d: %d rows", number, len(table.rows))
    out = out or run.out_dir / f'figure{number}.csv'
    write_csv(table, out)
    if svg is not None:
        try:
            write_svg(svg, table.title, table.column_names[0], table.column(table.column_names[0]), series)
        except Exception:
            out.unlink(missing_ok=True)
            raise
    click.echo(str(out))
