import logging
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from joblib import Parallel, delayed

from numerics.quadrature import QuadratureConfig
from physics.discrete_modes import DiscreteSpectrum, LehmanGrid, discrete_energy
from physics.energy import EnergyRoute, area_coefficient, energy_k, integrand_F, integrand_G
from physics.mode_spectrum import ModePoint, naive_real_part_energy
from figures.tables import FigureTable
from utils.errors import DomainError

logger = logging.getLogger(__name__)

FIGURE1_DAMPINGS = (0.1, 0.01)
# circles of the energy figure: damping -> (omega'_max, i_max)
FIGURE2_CIRCLES = {
    0.05: (2.0, 50),
    0.1: (2.0, 50),
    0.2: (3.0, 50),
    0.3: (3.0, 50),
}


def figure1_table(kappa: float = 0.5, samples: int = 500, omega_min: float = 1e-4,
                  omega_max: float = 2.5, dampings: Sequence[float] = FIGURE1_DAMPINGS) -> FigureTable:
    """F and G integrands on a log-spaced frequency grid"""
    points = [ModePoint(x=x, kappa=kappa) for x in dampings]
    columns = ['omega']
    for point in points:
        columns += [f'F_x{point.x:g}', f'G_x{point.x:g}']

    rows = []
    for omega in np.geomspace(omega_min, omega_max, samples).tolist():
        row = [omega]
        for point in points:
            row += [integrand_F(omega, point), integrand_G(omega, point)]
        rows.append(tuple(row))
    return FigureTable(title=f'Integrands F and G at kd={kappa:g}', column_names=tuple(columns), rows=tuple(rows))


def damping_grid(x_max: float = 0.3, points: int = 31) -> Tuple[float, ...]:
    return tuple(round(i * x_max / (points - 1), 12) for i in range(points))


def _figure2_row(x: float, kappa: float, cfg: QuadratureConfig,
                 circle: Optional[Tuple[float, int]]) -> Tuple[Optional[float], ...]:
    point = ModePoint(x=x, kappa=kappa)
    exact = energy_k(point, EnergyRoute.IMAG_AXIS, cfg).value
    naive = naive_real_part_energy(point)
    discrete = None
    if circle is not None:
        discrete = discrete_energy(point, LehmanGrid(omega_max=circle[0], i_max=circle[1]))
    return x, exact, naive, discrete


def figure2_table(cfg: QuadratureConfig = QuadratureConfig(), kappa: float = 0.5,
                  dampings: Sequence[float] = damping_grid(),
                  circles: Dict[float, Tuple[float, int]] = FIGURE2_CIRCLES, jobs: int = 1) -> FigureTable:
    """Exact, naive and discrete-spectrum energies against damping"""
    logger.info("Evaluating %d damping values at kd=%g with %d jobs", len(dampings), kappa, jobs)
    rows = Parallel(n_jobs=jobs)(
        delayed(_figure2_row)(x, kappa, cfg, circles.get(x)) for x in dampings
    )
    return FigureTable(title=f'Energy of one wave vector at kd={kappa:g}',
                       column_names=('x', 'exact', 'naive', 'discrete'), rows=tuple(rows))


def shift_table(spectrum: DiscreteSpectrum, x: float, kappa: float) -> FigureTable:
    """Zero shifts of both factors against the pole they pair with; the last row is the top zero"""
    last = len(spectrum.poles) - 1
    rows = tuple(
        (pole, shift1, shift2, 1.0 if i == last else 0.0)
        for i, (pole, shift1, shift2) in enumerate(zip(spectrum.poles, spectrum.shifts_f1, spectrum.shifts_f2))
    )
    return FigureTable(title=f'Zero shifts at x={x:g}, kd={kappa:g}',
                       column_names=('pole_frequency', 'shift_f1', 'shift_f2', 'is_top_zero'), rows=rows)


def sweep_table(x: float, distances: Sequence[float], cfg: QuadratureConfig = QuadratureConfig()) -> FigureTable:
    """Area coefficient and scaled energy per area for each gap width"""
    if any(not d > 0 for d in distances):
        raise DomainError(f"gap widths must be > 0, got {list(distances)}")
    coefficient = area_coefficient(x, cfg)
    rows = []
    for d in distances:
        per_area = coefficient / (d * d)
        rows.append((d, coefficient, per_area * d * d))
    return FigureTable(title=f'Energy per area at x={x:g}',
                       column_names=('d', 'C', 'E_per_area_times_d2'), rows=tuple(rows))
