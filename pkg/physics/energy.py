"""Zero-point energy of the coupled surface modes of one wave vector.

Energies are in units of hbar omega_pl / 2. The real-axis route integrates
F(omega) = (theta1 + theta2) / pi, the phase of the two mode factors just
above the positive real axis; the imaginary-axis route integrates
G(omega) = ln(f_k(i omega) / 4) / pi. Both equal the sum over zeros minus
poles of f_k, so they must agree.
"""
import logging
import math
from enum import Enum

from pydantic import BaseModel, ConfigDict

from numerics.quadrature import IntegralResult, QuadratureConfig, integrate_semi_infinite
from physics.dielectric import susceptibility_imag_axis, validate_damping
from physics.mode_spectrum import ModePoint
from utils.errors import DomainError, QuadratureError

logger = logging.getLogger(__name__)


class EnergyRoute(str, Enum):
    REAL_AXIS = 'real-axis'
    IMAG_AXIS = 'imag-axis'


class EnergyValue(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    route: EnergyRoute
    quadrature: IntegralResult


def _phase(re: float, im: float, lossless: bool) -> float:
    # angle of (re, im) on the branch 0 <= angle <= pi; im >= 0 for omega > 0
    if not lossless:
        return math.atan2(im, re)
    if re < 0:
        return math.pi
    return 0.0 if re > 0 else 0.5 * math.pi


def integrand_F(omega: float, point: ModePoint) -> float:
    if not omega > 0:
        raise DomainError(f"frequency must be > 0, got {omega!r}")
    x = point.x
    denominator = omega * omega + 4.0 * x * x
    total = 0.0
    for strength in (point.complement, 1.0 + point.coupling):
        re = 2.0 - strength / denominator
        im = 2.0 * x * strength / (omega * denominator)
        total += _phase(re, im, lossless=x == 0)
    return total / math.pi


def integrand_G(omega: float, point: ModePoint) -> float:
    # (f1 / 2)(f2 / 2) with eps(i omega) = 1 + delta
    delta = susceptibility_imag_axis(omega, point.x)
    return (math.log1p(0.5 * delta * point.complement)
            + math.log1p(0.5 * delta * (1.0 + point.coupling))) / math.pi


def closed_form_energy_x0(kappa: float) -> float:
    """Lossless energy: both zeros minus the double pole at the origin"""
    if not kappa > 0:
        raise DomainError(f"kappa must be > 0, got {kappa!r}")
    return math.sqrt(-math.expm1(-kappa) / 2.0) + math.sqrt((1.0 + math.exp(-kappa)) / 2.0)


def _require_converged(result: IntegralResult, route: EnergyRoute, what: str) -> IntegralResult:
    if not result.converged:
        raise QuadratureError(
            f"{what} did not converge on the {route.value} route "
            f"(value={result.value:.12g}, error={result.error_estimate:.3g})",
            result=result, route=route,
        )
    return result


def energy_k(point: ModePoint, route: EnergyRoute = EnergyRoute.IMAG_AXIS,
             cfg: QuadratureConfig = QuadratureConfig()) -> EnergyValue:
    if route is EnergyRoute.REAL_AXIS and point.x == 0:
        # the phase is a step function here; its integral is the closed form
        logger.warning("Lossless real-axis route at kappa=%g uses the closed form", point.kappa)
        value = closed_form_energy_x0(point.kappa)
        return EnergyValue(value=value, route=route,
                           quadrature=IntegralResult(value=value, error_estimate=0.0, subdivisions_used=0))

    integrand = integrand_F if route is EnergyRoute.REAL_AXIS else integrand_G
    result = integrate_semi_infinite(lambda omega: integrand(omega, point), cfg)
    _require_converged(result, route, f"energy at x={point.x}, kappa={point.kappa}")
    return EnergyValue(value=result.value, route=route, quadrature=result)


def _interaction_integrand(omega: float, point: ModePoint) -> float:
    # ln[f_k(i omega) / f_inf(i omega)] / pi = ln(1 - e^-2kappa r^2) / pi
    delta = susceptibility_imag_axis(omega, point.x)
    r = delta / (2.0 + delta)
    return math.log1p(-(point.coupling * r) ** 2) / math.pi


def interaction_energy_k(point: ModePoint, cfg: QuadratureConfig = QuadratureConfig(),
                         route: EnergyRoute = EnergyRoute.IMAG_AXIS) -> float:
    """energy_k(point) minus the same energy for decoupled surfaces; negative"""
    if point.coupling == 0:
        return 0.0
    if route is EnergyRoute.REAL_AXIS:
        return (energy_k(point, route, cfg).value
                - energy_k(ModePoint.decoupled(point.x), route, cfg).value)

    result = integrate_semi_infinite(lambda omega: _interaction_integrand(omega, point), cfg)
    _require_converged(result, route, f"interaction energy at x={point.x}, kappa={point.kappa}")
    return result.value


def area_coefficient(x: float, cfg: QuadratureConfig = QuadratureConfig()) -> float:
    """C(x) = (1/2 pi) int_0^inf u E_int(x, u) du.

    The energy per unit area of one half-space surface is C(x) (hbar omega_pl / 2) / d^2.
    """
    x = validate_damping(x)

    def weighted(u: float) -> float:
        return u * interaction_energy_k(ModePoint(x=x, kappa=u), cfg)

    result = integrate_semi_infinite(weighted, cfg)
    _require_converged(result, EnergyRoute.IMAG_AXIS, f"area coefficient at x={x}")
    logger.debug("Area coefficient at x=%g: %.12g (%d subdivisions)", x, result.value, result.subdivisions_used)
    return result.value / (2.0 * math.pi)
