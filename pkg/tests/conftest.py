import mpmath
import pytest
from click.testing import CliRunner

from app import create_app


def drude_energy(x: float, kappa: float) -> float:
    """Closed form of the imaginary-axis energy for Drude damping.

    E = (2/pi) sum_l [b_l acos(x / a_l) - x ln(a_l / 2x)] with
    a_l^2 = (1 -+ e^-kappa) / 2 and b_l^2 = a_l^2 - x^2. An overdamped pair
    (x > a_l) contributes -sqrt(x^2 - a_l^2) acosh(x / a_l) in place of the
    first term.
    """
    with mpmath.workdps(30):
        x = mpmath.mpf(x)
        e = mpmath.exp(-mpmath.mpf(kappa))
        total = mpmath.mpf(0)
        for c in (1 - e, 1 + e):
            a = mpmath.sqrt(c / 2)
            if x < a:
                total += mpmath.sqrt(a * a - x * x) * mpmath.acos(x / a)
            else:
                total -= mpmath.sqrt(x * x - a * a) * mpmath.acosh(x / a)
            if x > 0:
                total -= x * mpmath.log(a / (2 * x))
        return float(2 * total / mpmath.pi)


@pytest.fixture
def oracle_energy():
    return drude_energy


@pytest.fixture
def cli(tmp_path):
    """Invoke the command group with output directed to a temporary directory"""
    runner = CliRunner()
    app = create_app()

    def invoke(*args):
        return runner.invoke(app, ['--out-dir', str(tmp_path / 'output'), *args])

    return invoke
