import logging
import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from physics.dielectric import ComplexValue, HalfPlaneBranch, epsilon, epsilon_imag_axis

logger = logging.getLogger(__name__)


class FactorId(str, Enum):
    F1 = 'f1'  # acoustical (lower) branch
    F2 = 'f2'  # optical (upper) branch


class ModePoint(BaseModel):
    """Damping ratio x and reduced wave vector kappa = k d of one surface mode pair.

    kappa = inf stands for decoupled surfaces, where the coupling e^-kappa is exactly 0.
    """
    model_config = ConfigDict(frozen=True)

    x: float = Field(ge=0, allow_inf_nan=False)
    kappa: float = Field(gt=0)

    _coupling: float = PrivateAttr()
    _complement: float = PrivateAttr()

    def model_post_init(self, __context) -> None:
        self._coupling = math.exp(-self.kappa)
        self._complement = -math.expm1(-self.kappa)

    @property
    def coupling(self) -> float:
        """e^-kappa"""
        return self._coupling

    @property
    def complement(self) -> float:
        """1 - e^-kappa, accurate for small kappa"""
        return self._complement

    @classmethod
    def decoupled(cls, x: float) -> 'ModePoint':
        return cls(x=x, kappa=math.inf)


class ComplexZeros(BaseModel):
    model_config = ConfigDict(frozen=True)

    omega1: ComplexValue
    omega2: ComplexValue
    overdamped1: bool
    overdamped2: bool


def _factor_sign(factor: FactorId) -> float:
    return -1.0 if factor is FactorId.F1 else 1.0


def mode_factor(factor: FactorId, omega: ComplexValue, point: ModePoint,
                branch: HalfPlaneBranch = HalfPlaneBranch.UPPER) -> ComplexValue:
    """f1 = (eps + 1) - e^-kappa (eps - 1), f2 = (eps + 1) + e^-kappa (eps - 1)"""
    eps = epsilon(omega, point.x, branch)
    return (eps + 1) + _factor_sign(factor) * point.coupling * (eps - 1)


def mode_factor_imag_axis(factor: FactorId, omega: float, point: ModePoint) -> float:
    """The factor at i omega, where it is real"""
    eps = epsilon_imag_axis(omega, point.x)
    return (eps + 1.0) + _factor_sign(factor) * point.coupling * (eps - 1.0)


def _radicands(point: ModePoint):
    # [1 + coth(kappa/2)]^-1 = (1 - e^-kappa) / 2 and [1 + tanh(kappa/2)]^-1 = (1 + e^-kappa) / 2
    acoustical = point.complement / 2.0
    optical = (1.0 + point.coupling) / 2.0
    damping = point.x * point.x
    return acoustical - damping, optical - damping


def complex_zeros(point: ModePoint) -> ComplexZeros:
    """The two zeros of f_k in the right half plane, each with imaginary part -x"""
    radicand1, radicand2 = _radicands(point)
    overdamped1, overdamped2 = radicand1 < 0, radicand2 < 0
    if overdamped1 or overdamped2:
        logger.debug("Overdamped zeros at %s: f1=%s f2=%s", point, overdamped1, overdamped2)
    return ComplexZeros(
        omega1=complex(0.0 if overdamped1 else math.sqrt(radicand1), -point.x),
        omega2=complex(0.0 if overdamped2 else math.sqrt(radicand2), -point.x),
        overdamped1=overdamped1,
        overdamped2=overdamped2,
    )


def naive_real_part_energy(point: ModePoint) -> float:
    """Sum of the real parts of the complex zeros, in units of hbar omega_pl / 2.

    The poles of f_k (omega = 0 and omega = -2ix) have zero real part and drop out.
    """
    zeros = complex_zeros(point)
    return zeros.omega1.real + zeros.omega2.real
