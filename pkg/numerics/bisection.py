import logging
from typing import Callable

import numpy as np

from utils.errors import BracketError

logger = logging.getLogger(__name__)


def bisect_increasing(g: Callable[[np.ndarray], np.ndarray], lower: np.ndarray, upper: np.ndarray,
                      rel_tol: float = 1e-13, max_iterations: int = 200) -> np.ndarray:
    """Roots of g, increasing through zero on each open bracket (lower[i], upper[i]).

    Bracket ends are never evaluated, so they may sit on poles of g.
    All brackets are refined together; the result keeps the input order.
    """
    lo = np.array(lower, dtype=float)
    hi = np.array(upper, dtype=float)
    if np.any(~(lo < hi)):
        raise BracketError("brackets must satisfy lower < upper")

    for _ in range(max_iterations):
        active = (hi - lo) > rel_tol * np.abs(hi)
        if not np.any(active):
            break
        mid = 0.5 * (lo + hi)
        below = g(mid) < 0
        lo = np.where(active & below, mid, lo)
        hi = np.where(active & ~below, mid, hi)
    else:
        logger.warning("Bisection stopped after %d iterations", max_iterations)

    return 0.5 * (lo + hi)


def expand_upper_bracket(g: Callable[[float], float], lower: float, step: float, limit: float,
                         growth: float = 2.0) -> float:
    """Grow an upper bound from lower + step until g turns positive"""
    upper = lower + step
    while not g(upper) > 0:
        if upper > limit:
            raise BracketError(f"no sign change in ({lower!r}, {limit!r}]", interval=(lower, limit))
        logger.debug("Expanding bracket above %r: %r", lower, upper)
        upper = lower + (upper - lower) * growth
    return upper
