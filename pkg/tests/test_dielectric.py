import cmath

import numpy as np
import pytest

from physics.dielectric import (
    HalfPlaneBranch,
    epsilon,
    epsilon_imag_axis,
    im_epsilon,
    re_epsilon,
    susceptibility_imag_axis,
)
from utils.errors import DomainError


def test_epsilon_on_real_axis():
    # 1 - 1 / (1 + 0.2i) = 1 - (1 - 0.2i) / 1.04
    assert epsilon(1.0, 0.1) == pytest.approx(complex(1 - 1 / 1.04, 0.2 / 1.04), rel=1e-14)


def test_lossless_epsilon_is_real():
    value = epsilon(0.5, 0.0)
    assert value.imag == 0
    assert value.real == pytest.approx(-3.0)


@pytest.mark.parametrize('omega', [0.3 - 0.2j, 1.2 - 0.05j, 0.7 + 0.4j])
def test_branches_are_conjugate_reflections(omega):
    lower = epsilon(omega, 0.1, HalfPlaneBranch.LOWER)
    upper = epsilon(omega.conjugate(), 0.1, HalfPlaneBranch.UPPER)
    assert lower == pytest.approx(upper.conjugate(), rel=1e-14)


def test_branches_differ_below_the_real_axis():
    omega = 0.5 - 0.1j
    assert abs(epsilon(omega, 0.1, HalfPlaneBranch.UPPER) - epsilon(omega, 0.1, HalfPlaneBranch.LOWER)) > 1e-2


def test_real_axis_parts_match_complex_value():
    for omega in (0.05, 0.4, 1.0, 3.0):
        value = epsilon(omega, 0.1)
        assert re_epsilon(omega, 0.1) == pytest.approx(value.real, rel=1e-12, abs=1e-14)
        assert im_epsilon(omega, 0.1) == pytest.approx(value.imag, rel=1e-12)
        assert im_epsilon(omega, 0.1) > 0


def test_im_epsilon_vanishes_without_damping():
    assert im_epsilon(0.7, 0.0) == 0.0


def test_imag_axis_value_is_real_and_above_one():
    assert epsilon_imag_axis(1.0, 0.1) == pytest.approx(1.0 + 1.0 / 1.2, rel=1e-15)
    assert epsilon(1j, 0.1) == pytest.approx(epsilon_imag_axis(1.0, 0.1), rel=1e-14)
    for omega in (1e-6, 0.01, 1.0, 1e4):
        assert epsilon_imag_axis(omega, 0.3) > 1


@pytest.mark.parametrize('x', [0.0, 0.1, 0.5])
def test_imag_axis_value_decreases(x):
    values = [epsilon_imag_axis(omega, x) for omega in np.geomspace(1e-4, 1e4, 200)]
    assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize('omega', [0.2, 0.7, 1.0, 3.0])
def test_damping_term_flips_sign_across_real_axis(omega):
    above = epsilon(omega + 1e-9j, 0.1, HalfPlaneBranch.UPPER)
    below = epsilon(omega - 1e-9j, 0.1, HalfPlaneBranch.LOWER)
    assert above.imag > 0 > below.imag
    assert below == pytest.approx(above.conjugate(), rel=1e-12)


def test_susceptibility_keeps_precision_in_tail():
    assert susceptibility_imag_axis(1e8, 0.1) == pytest.approx(1e-16, rel=1e-8)


@pytest.mark.parametrize('omega, x', [(0.0, 0.1), (-0.2j, 0.1), (cmath.inf, 0.1), (1.0, -0.1), (1.0, float('nan'))])
def test_epsilon_domain_errors(omega, x):
    with pytest.raises(DomainError):
        epsilon(omega, x)


def test_lower_branch_pole():
    with pytest.raises(DomainError, match='lower'):
        epsilon(0.2j, 0.1, HalfPlaneBranch.LOWER)


@pytest.mark.parametrize('omega', [0.0, -1.0])
def test_imag_axis_needs_positive_frequency(omega):
    with pytest.raises(DomainError):
        epsilon_imag_axis(omega, 0.1)
    with pytest.raises(DomainError):
        im_epsilon(omega, 0.1)
