import logging

import click

from config import RunConfig
from physics.discrete_modes import LehmanGrid, discrete_energy
from physics.energy import EnergyRoute, closed_form_energy_x0, energy_k
from physics.mode_spectrum import ModePoint, naive_real_part_energy
from utils.command_utils import numerical_command

logger = logging.getLogger(__name__)

METHODS = ('real-axis', 'imag-axis', 'naive', 'discrete', 'closed-form-x0')


def compute_energy(run: RunConfig, x: float, kd: float, method: str, omega_max=None, i_max=None) -> float:
    point = ModePoint(x=x, kappa=kd)
    if method == 'closed-form-x0':
        if x != 0:
            raise click.UsageError("--method closed-form-x0 needs --x 0")
        return closed_form_energy_x0(kd)
    if method == 'naive':
        return naive_real_part_energy(point)
    if method == 'discrete':
        if x == 0:
            raise click.UsageError("--method discrete needs --x > 0")
        grid = LehmanGrid(omega_max=run.omega_max if omega_max is None else omega_max,
                          i_max=run.i_max if i_max is None else i_max)
        return discrete_energy(point, grid)
    return energy_k(point, EnergyRoute(method), run.quadrature).value


@click.command()
@click.option('--x', 'x', type=float, required=True, help='Damping ratio eta / (2 omega_pl).')
@click.option('--kd', type=float, required=True, help='Dimensionless wave vector k d.')
@click.option('--method', type=click.Choice(METHODS), default='imag-axis', show_default=True)
@click.option('--omega-max', type=float, default=None, help='Discrete grid cutoff (discrete method).')
@click.option('--i-max', type=int, default=None, help='Discrete grid size (discrete method).')
@click.pass_obj
@numerical_command
def energy(run: RunConfig, x, kd, method, omega_max, i_max):
    """Zero-point energy of one wave vector in units of hbar omega_pl / 2"""
    value = compute_energy(run, x, kd, method, omega_max, i_max)
    logger.info("Energy at x=%g, kd=%g by %s: %.12g", x, kd, method, value)
    click.echo(f'{value:.12g}')
