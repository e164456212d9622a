"""Drude dielectric response in plasma-frequency units.

Frequencies are measured in units of the plasma frequency and the damping
enters through x = (eta / 2) / omega_pl, so the Drude function reads
1 - 1 / (omega (omega + 2ix)). The expression with +2ix is valid in the
upper half plane, the one with -2ix in the lower half plane; the two are
related by eps_lower(w) = conj(eps_upper(conj(w))).
"""
import math
from enum import Enum

from utils.errors import DomainError

ComplexValue = complex


class HalfPlaneBranch(str, Enum):
    UPPER = 'upper'
    LOWER = 'lower'


def validate_damping(x: float) -> float:
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"damping ratio must be finite and >= 0, got {x!r}")
    return float(x)


def _positive_frequency(omega: float) -> float:
    if not omega > 0:
        raise DomainError(f"frequency must be > 0, got {omega!r}")
    return float(omega)


def epsilon(omega: ComplexValue, x: float, branch: HalfPlaneBranch = HalfPlaneBranch.UPPER) -> ComplexValue:
    """Drude epsilon for the selected half-plane expression"""
    validate_damping(x)
    omega = complex(omega)
    if not (math.isfinite(omega.real) and math.isfinite(omega.imag)):
        raise DomainError(f"frequency must be finite, got {omega!r}")
    if omega == 0:
        raise DomainError("epsilon has a pole at omega = 0")

    shift = 2j * x if branch is HalfPlaneBranch.UPPER else -2j * x
    if omega + shift == 0:
        raise DomainError(f"omega = {omega!r} is a pole of the {branch.value} branch for x = {x}")
    return 1 - 1 / (omega * (omega + shift))


def susceptibility_imag_axis(omega: float, x: float) -> float:
    """epsilon(i omega) - 1, kept separate so the tail keeps its relative precision"""
    validate_damping(x)
    omega = _positive_frequency(omega)
    return 1.0 / (omega * (omega + 2.0 * x))


def epsilon_imag_axis(omega: float, x: float) -> float:
    """epsilon(i omega), real and > 1 on the positive imaginary axis"""
    return 1.0 + susceptibility_imag_axis(omega, x)


def im_epsilon(omega: float, x: float) -> float:
    """Imaginary part of epsilon just above the positive real axis"""
    validate_damping(x)
    omega = _positive_frequency(omega)
    return 2.0 * x / (omega * (omega * omega + 4.0 * x * x))


def re_epsilon(omega: float, x: float) -> float:
    """Real part of epsilon just above the positive real axis"""
    validate_damping(x)
    omega = _positive_frequency(omega)
    return 1.0 - 1.0 / (omega * omega + 4.0 * x * x)
