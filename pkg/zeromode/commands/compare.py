"""
Paired zmt and svd evolutions from the same configuration
"""
import sys
from concurrent.futures import ThreadPoolExecutor
import click
from loguru import logger
from zeromode.data import RunCommand, TruncationMethod
from zeromode.evolution import ModelParams, evolve
from zeromode.exceptions import ConfigurationError, StepFailedError
from zeromode.utils import (accumulated_error, compare_trajectories,
                            echo_table, end_message, output_file,
                            welcome_message, write_sidecar, write_trajectory)
from .options import resolve_config, run_options, set_verbosity, usage_error


@click.command()
@run_options("bond_dim", "kappa", "dbeta", "beta_max", "g", "seed",
             "out_path")
def compare(quiet: bool, config_file: str, **flags) -> None:
    """
    Runs the evolution with zero-mode and with SVD truncation
    from the same configuration, in parallel.

    Returns:

        compare.csv: both trajectories, zmt first.

        compare_summary.csv: bond averaged delta_final of both methods
                             at every step and their ratio svd / zmt.

        compare.json: resolved configuration, package versions
                      and summary statistics.
    """
    welcome_message("zeromode")
    set_verbosity(quiet)
    config = resolve_config(RunCommand.compare.value, config_file, **flags)
    settings = config.to_dict()
    settings.pop("method")
    echo_table(settings)

    csv_name = output_file(config.out_path, "compare.csv")
    summary_name = output_file(config.out_path, "compare_summary.csv")
    json_name = output_file(config.out_path, "compare.json")
    params = ModelParams(config.g, config.dbeta, config.beta_max)
    methods = TruncationMethod.to_list()

    with ThreadPoolExecutor(max_workers=len(methods)) as executor:
        futures = {
            method: executor.submit(evolve, params, config.bond_dim, method,
                                    config.kappa, config.seed)
            for method in methods
        }
    records = []
    failed_step = None
    for method in methods:
        try:
            records += futures[method].result().records
        except ConfigurationError as error:
            raise usage_error(error)
        except StepFailedError as error:
            logger.error("{}: {}".format(method, error))
            records += error.records
            failed_step = {
                "method": method,
                "step": error.step,
                "beta": error.beta,
                "message": str(error)
            }

    write_trajectory(records, csv_name)
    if failed_step is not None:
        write_sidecar(json_name,
                      settings,
                      accumulated_error(records),
                      failed_step=failed_step,
                      outputs=[csv_name])
        sys.exit(1)

    table = compare_trajectories(records)
    table.to_csv(summary_name, index=False, float_format="%.12e")
    summary = accumulated_error(records)
    write_sidecar(json_name,
                  settings,
                  summary,
                  outputs=[csv_name, summary_name])
    click.echo(table.to_markdown(index=False))
    click.echo("Average ratio svd / zmt: {}".format(summary["ratio"]))
    end_message()
