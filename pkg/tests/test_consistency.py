from numerics.quadrature import QuadratureConfig
from utils.consistency import (
    complex_zero_residuals,
    interlacing_sample,
    lehman_limit,
    lossless_limit,
    route_equivalence,
    run_checks,
)

CFG = QuadratureConfig()


def test_route_equivalence_grid():
    outcome = route_equivalence((0.01, 0.1), (0.5, 2.0), 1e-6, CFG)
    assert outcome.cases == 4
    assert outcome.passed
    assert outcome.worst <= 1e-5


def test_unachievable_tolerance_fails():
    outcome = route_equivalence((0.1,), (0.5,), 1e-15, CFG)
    assert not outcome.passed


def test_lossless_limit():
    assert lossless_limit((0.25, 2.0), CFG).passed


def test_complex_zero_residuals():
    outcome = complex_zero_residuals()
    assert outcome.passed
    assert outcome.cases == 5
    assert outcome.worst < 1e-12


def test_interlacing_sample_is_seeded():
    first = interlacing_sample(5, seed=3)
    assert first.passed
    assert first == interlacing_sample(5, seed=3)


def test_run_checks_lists_all_families():
    outcomes = run_checks((0.1,), (0.5,), 1e-6, CFG, samples=3, seed=0)
    assert [outcome.family for outcome in outcomes] == [
        'route equivalence', 'lossless limit', 'complex-zero residual', 'interlacing', 'lehman limit']
    assert all(outcome.passed for outcome in outcomes)


def test_interlacing_sample_of_one_hundred_cases():
    outcome = interlacing_sample(100, seed=11)
    assert outcome.cases == 100
    assert outcome.passed


def test_lehman_limit():
    outcome = lehman_limit()
    assert outcome.cases == 5
    assert outcome.passed
    assert outcome.worst < 1e-4
