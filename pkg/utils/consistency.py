"""Machine-checkable consistency families behind the `check` command"""
import logging
from typing import List, Sequence

import numpy as np
from joblib import Parallel, delayed
from pydantic import BaseModel, ConfigDict

from numerics.quadrature import QuadratureConfig
from physics.dielectric import HalfPlaneBranch, epsilon_imag_axis, re_epsilon
from physics.discrete_modes import LehmanGrid, discrete_spectrum, epsilon_discrete, epsilon_discrete_imag_axis
from physics.energy import EnergyRoute, closed_form_energy_x0, energy_k
from physics.mode_spectrum import FactorId, ModePoint, complex_zeros, mode_factor
from utils.errors import CasimodeError

logger = logging.getLogger(__name__)

LOSSLESS_DAMPING = 1e-5
LOSSLESS_GAP = 1e-3
RESIDUAL_POINTS = ((0.1, 0.5), (0.05, 1.0))
RESIDUAL_LIMIT = 1e-12
BRANCH_JUMP_POINT = (0.1, 0.5)
BRANCH_JUMP_FLOOR = 1e-3
# real points sit halfway between two nodes
LEHMAN_GRID = LehmanGrid(omega_max=20.0, i_max=20000)
LEHMAN_DAMPING = 0.1
LEHMAN_REAL_POINTS = (1.5, 3.0)
LEHMAN_IMAG_POINTS = (0.5, 1.0, 3.0)
LEHMAN_GAP = 1e-3


class CheckOutcome(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    cases: int
    failures: int
    worst: float
    limit: str

    @property
    def passed(self) -> bool:
        return self.cases > 0 and self.failures == 0


def _route_gap(x: float, kappa: float, cfg: QuadratureConfig):
    point = ModePoint(x=x, kappa=kappa)
    try:
        real = energy_k(point, EnergyRoute.REAL_AXIS, cfg).value
        imag = energy_k(point, EnergyRoute.IMAG_AXIS, cfg).value
    except CasimodeError:
        logger.exception("Route comparison failed at x=%g, kd=%g", x, kappa)
        return None
    return abs(real - imag), imag


def route_equivalence(xs: Sequence[float], kappas: Sequence[float], tol: float,
                      cfg: QuadratureConfig, jobs: int = 1) -> CheckOutcome:
    """|E_real - E_imag| <= max(tol, 10 tol E) on every grid point"""
    pairs = [(x, kappa) for x in xs for kappa in kappas]
    gaps = Parallel(n_jobs=jobs)(delayed(_route_gap)(x, kappa, cfg) for x, kappa in pairs)
    failures, worst = 0, 0.0
    for gap in gaps:
        if gap is None:
            failures += 1
            continue
        difference, value = gap
        worst = max(worst, difference)
        if difference > max(tol, 10.0 * tol * abs(value)):
            failures += 1
    return CheckOutcome(family='route equivalence', cases=len(pairs), failures=failures,
                        worst=worst, limit=f'max({tol:g}, {10 * tol:g} E)')


def lossless_limit(kappas: Sequence[float], cfg: QuadratureConfig) -> CheckOutcome:
    failures, worst = 0, 0.0
    for kappa in kappas:
        try:
            value = energy_k(ModePoint(x=LOSSLESS_DAMPING, kappa=kappa), EnergyRoute.IMAG_AXIS, cfg).value
        except CasimodeError:
            logger.exception("Lossless limit failed at kd=%g", kappa)
            failures += 1
            continue
        gap = abs(value - closed_form_energy_x0(kappa))
        worst = max(worst, gap)
        failures += gap >= LOSSLESS_GAP
    return CheckOutcome(family='lossless limit', cases=len(kappas), failures=failures,
                        worst=worst, limit=f'< {LOSSLESS_GAP:g} at x={LOSSLESS_DAMPING:g}')


def complex_zero_residuals() -> CheckOutcome:
    """Closed-form zeros solve the upper-branch factors; the lower branch misses them"""
    failures, worst, cases = 0, 0.0, 0
    for x, kappa in RESIDUAL_POINTS:
        point = ModePoint(x=x, kappa=kappa)
        zeros = complex_zeros(point)
        for factor, zero in ((FactorId.F1, zeros.omega1), (FactorId.F2, zeros.omega2)):
            residual = abs(mode_factor(factor, zero, point, HalfPlaneBranch.UPPER))
            worst = max(worst, residual)
            failures += residual >= RESIDUAL_LIMIT
            cases += 1

    point = ModePoint(x=BRANCH_JUMP_POINT[0], kappa=BRANCH_JUMP_POINT[1])
    jump = abs(mode_factor(FactorId.F1, complex_zeros(point).omega1, point, HalfPlaneBranch.LOWER))
    failures += jump <= BRANCH_JUMP_FLOOR
    cases += 1
    return CheckOutcome(family='complex-zero residual', cases=cases, failures=failures, worst=worst,
                        limit=f'< {RESIDUAL_LIMIT:g}; lower branch > {BRANCH_JUMP_FLOOR:g}')


def interlacing_sample(samples: int, seed: int) -> CheckOutcome:
    """Random grids and points: i_max zeros per factor, each inside its interval, no negative shift"""
    rng = np.random.default_rng(seed)
    failures, worst = 0, 0.0
    for _ in range(samples):
        x = 0.5 * (1.0 - rng.random())
        kappa = rng.uniform(0.1, 3.0)
        grid = LehmanGrid(omega_max=rng.uniform(1.0, 5.0), i_max=int(rng.integers(5, 201)))
        try:
            spectrum = discrete_spectrum(ModePoint(x=x, kappa=kappa), grid)
        except CasimodeError:
            logger.exception("Discrete spectrum failed at x=%g, kd=%g, %s", x, kappa, grid)
            failures += 1
            continue
        lowest = min(spectrum.shifts_f1 + spectrum.shifts_f2)
        worst = min(worst, lowest)
        failures += not (spectrum.interlaced() and lowest >= 0)
    return CheckOutcome(family='interlacing', cases=samples, failures=failures, worst=worst,
                        limit='one zero per interval, shifts >= 0')


def lehman_limit() -> CheckOutcome:
    """The fine discretised epsilon reproduces Drude on both axes, as a principal value on the real one"""
    x = LEHMAN_DAMPING
    gaps = [abs(epsilon_discrete(omega, x, LEHMAN_GRID) - re_epsilon(omega, x)) for omega in LEHMAN_REAL_POINTS]
    gaps += [abs(epsilon_discrete_imag_axis(omega, x, LEHMAN_GRID) - epsilon_imag_axis(omega, x))
             for omega in LEHMAN_IMAG_POINTS]
    return CheckOutcome(family='lehman limit', cases=len(gaps), failures=sum(gap >= LEHMAN_GAP for gap in gaps),
                        worst=max(gaps), limit=f'< {LEHMAN_GAP:g} on {LEHMAN_GRID.i_max} nodes')


def run_checks(xs: Sequence[float], kappas: Sequence[float], tol: float, cfg: QuadratureConfig,
               samples: int, seed: int, jobs: int = 1) -> List[CheckOutcome]:
    return [
        route_equivalence(xs, kappas, tol, cfg, jobs),
        lossless_limit(kappas, cfg),
        complex_zero_residuals(),
        interlacing_sample(samples, seed),
        lehman_limit(),
    ]
