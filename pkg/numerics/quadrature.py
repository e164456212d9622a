"""Adaptive Gauss-Kronrod integration over [0, inf) and finite intervals.

The semi-infinite range is folded onto t in [0, 1) with omega = t / (1 - t).
Each subinterval is integrated with the 7-point Gauss / 15-point Kronrod
pair; all nodes are interior, so neither omega = 0 nor t = 1 is evaluated.
The subinterval with the largest |K15 - G7| is bisected until the summed
estimate meets the tolerance or the subdivision budget is spent.
"""
import heapq
import logging
import math
from typing import Callable

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from utils.errors import QuadratureError

logger = logging.getLogger(__name__)

# Kronrod abscissae on [0, 1]; odd indices are shared with the Gauss rule
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

# full 15-node tables on [-1, 1]
_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_KRONROD = np.concatenate([_WGK[:-1], _WGK[::-1]])
_GAUSS = np.zeros(15)
_GAUSS[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])


class QuadratureConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    abs_tol: float = Field(1e-9, gt=0, allow_inf_nan=False)
    rel_tol: float = Field(1e-8, gt=0, allow_inf_nan=False)
    max_subdivisions: int = Field(2000, ge=1)


class IntegralResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float
    error_estimate: float = Field(ge=0)
    subdivisions_used: int = Field(ge=0)
    converged: bool = True


def _gauss_kronrod(g: Callable[[float], float], a: float, b: float):
    """Integrate g over [a, b]; returns (K15 value, |K15 - G7|)"""
    half = 0.5 * (b - a)
    center = 0.5 * (a + b)
    values = np.empty(15)
    for i, node in enumerate(_NODES):
        values[i] = g(center + half * node)
    kronrod = half * float(_KRONROD @ values)
    gauss = half * float(_GAUSS @ values)
    return kronrod, abs(kronrod - gauss)


def _checked(f: Callable[[float], float], to_omega: Callable[[float], float],
             jacobian: Callable[[float], float]) -> Callable[[float], float]:
    def g(t: float) -> float:
        omega = to_omega(t)
        value = f(omega)
        if not math.isfinite(value):
            raise QuadratureError(f"integrand returned {value} at omega={omega!r}")
        return value * jacobian(t)
    return g


def _adapt(g: Callable[[float], float], a: float, b: float, cfg: QuadratureConfig) -> IntegralResult:
    value, error = _gauss_kronrod(g, a, b)
    # heap entries: (-error, left, right, value, error); ties resolved by position
    heap = [(-error, a, b, value, error)]
    total, total_error = value, error
    subdivisions = 0

    while total_error > max(cfg.abs_tol, cfg.rel_tol * abs(total)):
        if subdivisions >= cfg.max_subdivisions:
            logger.warning(
                "Quadrature budget of %d subdivisions exhausted (value=%.12g, error=%.3g)",
                cfg.max_subdivisions, total, total_error,
            )
            return IntegralResult(value=total, error_estimate=total_error,
                                  subdivisions_used=subdivisions, converged=False)
        _, left, right, old_value, old_error = heapq.heappop(heap)
        mid = 0.5 * (left + right)
        if not left < mid < right:
            # interval cannot be split any further in floating point
            logger.warning("Quadrature interval [%r, %r] reached machine resolution", left, right)
            return IntegralResult(value=total, error_estimate=total_error,
                                  subdivisions_used=subdivisions, converged=False)
        left_value, left_error = _gauss_kronrod(g, left, mid)
        right_value, right_error = _gauss_kronrod(g, mid, right)
        heapq.heappush(heap, (-left_error, left, mid, left_value, left_error))
        heapq.heappush(heap, (-right_error, mid, right, right_value, right_error))
        subdivisions += 1
        # re-sum from the heap to keep the totals free of cancellation drift
        total = math.fsum(entry[3] for entry in heap)
        total_error = math.fsum(entry[4] for entry in heap)

    logger.debug("Quadrature converged after %d subdivisions: %.12g +- %.3g",
                 subdivisions, total, total_error)
    return IntegralResult(value=total, error_estimate=total_error,
                          subdivisions_used=subdivisions, converged=True)


def integrate_semi_infinite(f: Callable[[float], float], cfg: QuadratureConfig = QuadratureConfig()) -> IntegralResult:
    """Integrate f over (0, inf) through the map omega = t / (1 - t)"""
    integrand = _checked(
        f,
        to_omega=lambda t: t / (1.0 - t),
        jacobian=lambda t: 1.0 / (1.0 - t) ** 2,
    )
    return _adapt(integrand, 0.0, 1.0, cfg)
