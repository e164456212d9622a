import click

from config import Config, RunConfig
from utils.command_utils import EXIT_CHECK_FAILED, FLOAT_LIST, numerical_command
from utils.consistency import run_checks


@click.command()
@click.option('--grid-x', type=FLOAT_LIST, default='0.01,0.05,0.1,0.2', show_default=True)
@click.option('--grid-kd', type=FLOAT_LIST, default='0.25,0.5,1,2', show_default=True)
@click.option('--tol', type=click.FloatRange(min=0, min_open=True), default=1e-6, show_default=True,
              help='Route-equivalence tolerance; the threshold is max(tol, 10 tol E).')
@click.option('--samples', type=click.IntRange(min=1), default=Config.CHECK_SAMPLES, show_default=True)
@click.option('--seed', type=int, default=Config.CHECK_SEED, show_default=True)
@click.pass_obj
@numerical_command
def check(run: RunConfig, grid_x, grid_kd, tol, samples, seed):
    """Run the consistency families; exit 1 if any case fails"""
    outcomes = run_checks(grid_x, grid_kd, tol, run.quadrature, samples, seed, run.jobs)
    click.echo(f"{'family':<24}{'cases':>7}{'failed':>8}{'worst':>14}  limit")
    for outcome in outcomes:
        click.echo(f"{outcome.family:<24}{outcome.cases:>7}{outcome.failures:>8}"
                   f"{outcome.worst:>14.3e}  {outcome.limit}  {'PASS' if outcome.passed else 'FAIL'}")
    if not all(outcome.passed for outcome in outcomes):
        click.echo("consistency check FAILED", err=True)
        raise click.exceptions.Exit(EXIT_CHECK_FAILED)
    click.echo("all checks passed")
