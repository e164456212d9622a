from functools import wraps
import logging

import click
from pydantic import ValidationError

from utils.errors import CasimodeError

logger = logging.getLogger(__name__)

EXIT_CHECK_FAILED = 1
EXIT_NUMERICAL_FAILURE = 3


def _describe(error: ValidationError) -> str:
    return '; '.join(
        f"{'.'.join(str(part) for part in item['loc']) or 'value'}: {item['msg']}"
        for item in error.errors()
    )


def numerical_command(f):
    """Map library failures of a command callback onto the exit-code contract"""
    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except ValidationError as e:
            raise click.UsageError(_describe(e))
        except CasimodeError as e:
            logger.debug("Numerical failure in %s", f.__name__, exc_info=True)
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_NUMERICAL_FAILURE)
        except Exception as e:
            logger.exception(f"Command {f.__name__} failed: {str(e)}")
            click.echo(f"Error: {e}", err=True)
            raise click.exceptions.Exit(EXIT_NUMERICAL_FAILURE)

    return wrapper


class FloatList(click.ParamType):
    """Comma-separated reals, e.g. `0.01,0.05,0.1`"""
    name = 'float-list'

    def convert(self, value, param, ctx):
        if isinstance(value, (list, tuple)):
            return tuple(float(item) for item in value)
        try:
            items = tuple(float(item) for item in str(value).split(','))
        except ValueError:
            self.fail(f"{value!r} is not a comma-separated list of numbers", param, ctx)
        if not items:
            self.fail("empty list", param, ctx)
        return items


FLOAT_LIST = FloatList()
