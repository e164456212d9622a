"""Mode summation with a discretised spectral representation of epsilon.

Replacing the frequency integral of the spectral (Lehman) representation by
a midpoint sum over i_max nodes gives a real rational function of omega^2
with simple poles at the nodes. Between two neighbouring poles it rises from
-inf to +inf, above the last pole it rises from -inf to 1, so each mode
factor has exactly one zero per interval. The energy is the sum of the
zero-minus-pole shifts of both factors.
"""
import logging
import math
from typing import Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from numerics.bisection import bisect_increasing, expand_upper_bracket
from physics.dielectric import validate_damping
from physics.mode_spectrum import FactorId, ModePoint
from utils.errors import BracketError, DomainError

logger = logging.getLogger(__name__)

BISECTION_REL_TOL = 1e-13

ArrayLike = Union[float, np.ndarray]


class LehmanGrid(BaseModel):
    model_config = ConfigDict(frozen=True)

    omega_max: float = Field(gt=0, allow_inf_nan=False)
    i_max: int = Field(ge=1)

    @property
    def spacing(self) -> float:
        return self.omega_max / self.i_max

    @property
    def nodes(self) -> np.ndarray:
        return (np.arange(1, self.i_max + 1) - 0.5) * self.spacing


class DiscreteSpectrum(BaseModel):
    model_config = ConfigDict(frozen=True)

    poles: Tuple[float, ...]
    zeros_f1: Tuple[float, ...]
    zeros_f2: Tuple[float, ...]
    shifts_f1: Tuple[float, ...]
    shifts_f2: Tuple[float, ...]

    @property
    def combined_shifts(self) -> Tuple[float, ...]:
        return tuple(a + b for a, b in zip(self.shifts_f1, self.shifts_f2))

    @property
    def energy(self) -> float:
        return math.fsum(self.shifts_f1) + math.fsum(self.shifts_f2)

    def interlaced(self) -> bool:
        """Every zero lies above its own pole and below the next one"""
        poles = self.poles
        upper = poles[1:] + (math.inf,)
        return all(
            len(zeros) == len(poles)
            and all(p < z < q for p, z, q in zip(poles, zeros, upper))
            for zeros in (self.zeros_f1, self.zeros_f2)
        )


def _require_dissipative(x: float) -> float:
    x = validate_damping(x)
    if x == 0:
        raise DomainError("the discretised spectrum is empty for x = 0")
    return x


def _pole_weights(x: float, grid: LehmanGrid, strength: float) -> np.ndarray:
    nodes = grid.nodes
    prefactor = strength * 8.0 * x / (2.0 * math.pi) * grid.spacing
    return prefactor / (nodes * nodes + 4.0 * x * x)


def epsilon_discrete(omega: ArrayLike, x: float, grid: LehmanGrid, *, strength: float = 1.0) -> ArrayLike:
    """Discretised epsilon on the real axis; strength scales the pole sum"""
    x = _require_dissipative(x)
    values = np.asarray(omega, dtype=float)
    if np.any(values < 0) or not np.all(np.isfinite(values)):
        raise DomainError("frequency must be finite and >= 0")

    nodes = grid.nodes
    gaps = values[..., None] - nodes
    if np.any(gaps == 0):
        raise DomainError("epsilon_discrete has a pole at every grid node")
    result = 1.0 - np.sum(_pole_weights(x, grid, strength) / (gaps * (values[..., None] + nodes)), axis=-1)
    return float(result) if result.ndim == 0 else result


def epsilon_discrete_imag_axis(omega: ArrayLike, x: float, grid: LehmanGrid) -> ArrayLike:
    """Discretised epsilon at i omega; tends to epsilon_imag_axis as the grid is refined"""
    x = _require_dissipative(x)
    values = np.asarray(omega, dtype=float)
    if np.any(values <= 0):
        raise DomainError("frequency must be > 0")
    nodes = grid.nodes
    result = 1.0 + np.sum(_pole_weights(x, grid, 1.0) / (values[..., None] ** 2 + nodes * nodes), axis=-1)
    return float(result) if result.ndim == 0 else result


def branch_target(factor: FactorId, kappa: float) -> float:
    """Value of epsilon at which the factor vanishes: -coth(kappa/2) for f1, -tanh(kappa/2) for f2"""
    if not kappa > 0:
        raise DomainError(f"kappa must be > 0, got {kappa!r}")
    half = math.tanh(kappa / 2.0)
    return -1.0 / half if factor is FactorId.F1 else -half


def _factor_zeros(factor: FactorId, point: ModePoint, grid: LehmanGrid, strength: float) -> np.ndarray:
    target = branch_target(factor, point.kappa)
    nodes = grid.nodes

    def g(omega):
        return epsilon_discrete(omega, point.x, grid, strength=strength) - target

    interior = bisect_increasing(g, nodes[:-1], nodes[1:], rel_tol=BISECTION_REL_TOL) if grid.i_max > 1 else np.empty(0)

    limit = 10.0 * max(1.0, grid.omega_max)
    try:
        upper = expand_upper_bracket(g, nodes[-1], grid.spacing, limit)
    except BracketError as exc:
        raise BracketError(
            f"no zero of {factor.value} found above the last pole {nodes[-1]:.6g} (searched up to {limit:.6g})",
            factor=factor, interval=exc.interval,
        ) from exc
    top = bisect_increasing(g, nodes[-1:], np.array([upper]), rel_tol=BISECTION_REL_TOL)
    return np.concatenate([interior, top])


def discrete_spectrum(point: ModePoint, grid: LehmanGrid, *, strength: float = 1.0) -> DiscreteSpectrum:
    """Poles, interlaced zeros and shifts of both factors; each zero is paired with the pole below it"""
    _require_dissipative(point.x)
    nodes = grid.nodes
    zeros_f1 = _factor_zeros(FactorId.F1, point, grid, strength)
    zeros_f2 = _factor_zeros(FactorId.F2, point, grid, strength)
    logger.debug("Discrete spectrum at %s on %s: %d zeros per factor", point, grid, len(zeros_f1))
    return DiscreteSpectrum(
        poles=tuple(nodes.tolist()),
        zeros_f1=tuple(zeros_f1.tolist()),
        zeros_f2=tuple(zeros_f2.tolist()),
        shifts_f1=tuple((zeros_f1 - nodes).tolist()),
        shifts_f2=tuple((zeros_f2 - nodes).tolist()),
    )


def discrete_energy(point: ModePoint, grid: LehmanGrid) -> float:
    """Sum of all zero-minus-pole shifts, in units of hbar omega_pl / 2"""
    return discrete_spectrum(point, grid).energy
