"""
Finite difference check of the subspace gradient
"""
import sys
import click
import pandas as pd
from loguru import logger
from zeromode.data import RunCommand
from zeromode.exceptions import ConfigurationError, NumericalError
from zeromode.networks import make_rng
from zeromode.utils import (echo_table, end_message, output_file,
                            welcome_message, write_sidecar)
from zeromode.zmt import subspace_gradient_check
from .options import resolve_config, run_options, set_verbosity, usage_error

GRADIENT_TOLERANCE = 1e-5


@click.command(name=RunCommand.grad_check.value)
@run_options("bond_dim", "kappa", "seed", "instances", "out_path")
def grad_check(quiet: bool, config_file: str, **flags) -> None:
    """
    Compares the analytic gradient of the truncation error in the
    mode amplitudes with central finite differences on random
    metrics of a bond of dimension --D. Fails when the largest
    relative error reaches 1e-5.

    Returns:

        grad_check.csv: relative error of every instance.

        grad_check.json: resolved configuration and the largest error.
    """
    welcome_message("zeromode")
    set_verbosity(quiet)
    config = resolve_config(RunCommand.grad_check.value, config_file,
                            **flags)
    echo_table(config.to_dict())

    csv_name = output_file(config.out_path, "grad_check.csv")
    json_name = output_file(config.out_path, "grad_check.json")
    rng = make_rng(config.seed)
    errors = []
    try:
        for _ in range(config.instances):
            check = subspace_gradient_check(rng, config.bond_dim,
                                            config.kappa)
            errors.append(check.relative_error)
    except ConfigurationError as error:
        raise usage_error(error)
    except NumericalError as error:
        logger.error("Gradient check failed: {}".format(error))
        write_sidecar(json_name, config.to_dict(), {},
                      failed_step={"instance": len(errors) + 1,
                                   "message": str(error)})
        sys.exit(1)

    table = pd.DataFrame({
        "instance": range(1, len(errors) + 1),
        "relative_error": errors
    })
    table.to_csv(csv_name, index=False, float_format="%.12e")
    max_error = float(table["relative_error"].max())
    passed = max_error < GRADIENT_TOLERANCE
    summary = {"max_relative_error": max_error, "passed": passed}
    write_sidecar(json_name, config.to_dict(), summary, outputs=[csv_name])
    click.echo("Max relative gradient error: {:.3e}".format(max_error))
    if not passed:
        logger.error("Gradient check above {:.0e}".format(GRADIENT_TOLERANCE))
        sys.exit(1)
    end_message()
