"""
Command line flags shared by the zeromode commands
"""
import sys
import click
from loguru import logger
from zeromode.data import TruncationMethod
from zeromode.exceptions import ConfigurationError
from zeromode.utils import OUTPUT_DIR_VARIABLE, RunConfig

FLAGS = {
    "bond_dim":
    click.option('--D',
                 'bond_dim',
                 type=int,
                 help="Bond dimension. [default: 4]"),
    "loop_dim":
    click.option('--d',
                 'loop_dim',
                 type=int,
                 help="Length of the redundant loop index. [default: 2]"),
    "phys_dim":
    click.option('--phys-dim',
                 'phys_dim',
                 type=int,
                 help="Physical dimension of the toy sites. [default: 2]"),
    "kappa":
    click.option('--kappa',
                 type=int,
                 help="""Number of lowest metric modes spanning Z. Even
                 values are rounded up to the next odd one. [default: 5]"""),
    "dbeta":
    click.option('--dbeta',
                 type=float,
                 help="Trotter step. [default: 0.01]"),
    "beta_max":
    click.option('--beta-max',
                 'beta_max',
                 type=float,
                 help="Final inverse temperature. [default: 0.5]"),
    "g":
    click.option('--g',
                 type=float,
                 help="Magnetic coupling. [default: 3.04438]"),
    "noise":
    click.option('--noise',
                 type=float,
                 help="Noise amplitude of the toy plaquette. [default: 0]"),
    "seed":
    click.option('--seed',
                 type=int,
                 help="Seed of the random generator. [default: 20240101]"),
    "method":
    click.option('--method',
                 type=click.Choice(TruncationMethod.to_list()),
                 help="Truncation method. [default: zmt]"),
    "out_path":
    click.option('--out',
                 'out_path',
                 type=click.Path(file_okay=False),
                 help="""Output folder. Defaults to ${} or to the current
                 folder.""".format(OUTPUT_DIR_VARIABLE)),
    "snapshot_every":
    click.option('--snapshot-every',
                 'snapshot_every',
                 type=int,
                 help="""Write the unit cell every that many steps,
                 0 disables snapshots. [default: 0]"""),
    "f_tol":
    click.option('--f-tol',
                 'f_tol',
                 type=float,
                 help="""Largest relative error of an iterative
                 reduction. [default: 1e-10]"""),
    "trials":
    click.option('--trials',
                 type=int,
                 help="Number of random gauges. [default: 5]"),
    "instances":
    click.option('--instances',
                 type=int,
                 help="Number of random instances. [default: 20]"),
}


def run_options(*fields):
    """
    Decorator adding the given flags, a configuration file
    and --quiet to a command
    """
    def decorator(function):
        for field in reversed(fields):
            function = FLAGS[field](function)
        function = click.option(
            '--config',
            'config_file',
            type=click.Path(exists=True, dir_okay=False),
            help="YAML file whose keys are flag names.")(function)
        function = click.option('--quiet', default=False,
                                is_flag=True)(function)
        return function

    return decorator


def set_verbosity(quiet: bool) -> None:
    """
    Keep only errors in the log when quiet
    """
    if quiet:
        logger.remove()
        logger.add(sys.stdout, level="ERROR")


def resolve_config(command: str, config_file: str, **flags) -> RunConfig:
    """
    Resolve the run configuration, turning invalid values
    into a usage error that names the flag
    """
    try:
        return RunConfig.resolve(command, config_file, **flags)
    except ConfigurationError as error:
        raise usage_error(error)


def usage_error(error: ConfigurationError) -> click.BadParameter:
    """
    Usage error for an invalid configuration
    """
    hint = "--{}".format(error.flag) if error.flag else None
    return click.BadParameter(str(error), param_hint=hint)
