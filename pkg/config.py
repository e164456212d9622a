import configparser
import os
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from numerics.quadrature import QuadratureConfig
from utils.errors import DomainError


class Config:
    # Quadrature
    TOL_ABS = float(os.getenv('CASIMODE_TOL_ABS', '1e-9'))
    TOL_REL = float(os.getenv('CASIMODE_TOL_REL', '1e-8'))
    MAX_SUBDIVISIONS = int(os.getenv('CASIMODE_MAX_SUBDIVISIONS', '2000'))

    # Discrete mode summation
    DISCRETE_OMEGA_MAX = float(os.getenv('CASIMODE_DISCRETE_OMEGA_MAX', '3.0'))
    DISCRETE_I_MAX = int(os.getenv('CASIMODE_DISCRETE_I_MAX', '50'))

    # Consistency check
    CHECK_SAMPLES = int(os.getenv('CASIMODE_CHECK_SAMPLES', '25'))
    CHECK_SEED = int(os.getenv('CASIMODE_CHECK_SEED', '0'))

    # System
    OUT_DIR = os.getenv('CASIMODE_OUT_DIR', 'output')
    MAX_JOBS = max(1, int(os.getenv('CASIMODE_JOBS', '1')))


# keys accepted in a config file and the RunConfig field each one feeds
CONFIG_FILE_KEYS = {
    'tol_abs': 'tol_abs',
    'tol_rel': 'tol_rel',
    'max_subdivisions': 'max_subdivisions',
    'omega_max': 'omega_max',
    'i_max': 'i_max',
    'out_dir': 'out_dir',
    'jobs': 'jobs',
}


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    quadrature: QuadratureConfig = QuadratureConfig()
    omega_max: float = Field(Config.DISCRETE_OMEGA_MAX, gt=0, allow_inf_nan=False)
    i_max: int = Field(Config.DISCRETE_I_MAX, ge=1)
    out_dir: Path = Path(Config.OUT_DIR)
    jobs: int = Field(Config.MAX_JOBS, ge=1)

    @field_validator('out_dir')
    @classmethod
    def _writable(cls, value: Path) -> Path:
        value.mkdir(parents=True, exist_ok=True)
        if not os.access(value, os.W_OK):
            raise ValueError(f"output directory {value} is not writable")
        return value


def read_config_file(path: Path) -> dict:
    """Parse `key = value` lines into a dict of RunConfig overrides"""
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=('#',))
    try:
        parser.read_string('[casimode]\n' + Path(path).read_text(encoding='utf-8'), source=str(path))
    except configparser.Error as e:
        raise DomainError(f"malformed config file {path}: {e}")
    values = dict(parser['casimode'])
    unknown = sorted(set(values) - set(CONFIG_FILE_KEYS))
    if unknown:
        raise DomainError(f"unknown config keys: {', '.join(unknown)}")
    return values


def build_run_config(config_file: Optional[Path] = None, **flags) -> RunConfig:
    """Layer Config defaults, an optional config file and command-line flags (flags win)"""
    settings = {
        'tol_abs': Config.TOL_ABS,
        'tol_rel': Config.TOL_REL,
        'max_subdivisions': Config.MAX_SUBDIVISIONS,
        'omega_max': Config.DISCRETE_OMEGA_MAX,
        'i_max': Config.DISCRETE_I_MAX,
        'out_dir': Config.OUT_DIR,
        'jobs': Config.MAX_JOBS,
    }
    if config_file is not None:
        settings.update(read_config_file(config_file))
    settings.update({key: value for key, value in flags.items() if value is not None})

    return RunConfig(
        quadrature=QuadratureConfig(
            abs_tol=settings['tol_abs'],
            rel_tol=settings['tol_rel'],
            max_subdivisions=settings['max_subdivisions'],
        ),
        omega_max=settings['omega_max'],
        i_max=settings['i_max'],
        out_dir=Path(settings['out_dir']),
        jobs=settings['jobs'],
    )
