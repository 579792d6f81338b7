"""
Imaginary time evolution of the Z2 gauge model
"""
import sys
import click
from loguru import logger
from zeromode.data import RunCommand
from zeromode.evolution import ModelParams, evolve as run_evolution
from zeromode.exceptions import ConfigurationError, StepFailedError
from zeromode.utils import (accumulated_error, average_errors, echo_table,
                            end_message, output_file, welcome_message,
                            write_sidecar, write_trajectory)
from .options import resolve_config, run_options, set_verbosity, usage_error


@click.command()
@run_options("bond_dim", "kappa", "dbeta", "beta_max", "g", "seed", "method",
             "snapshot_every", "out_path")
def evolve(quiet: bool, config_file: str, **flags) -> None:
    """
    Evolves the purified Z2 gauge model from infinite temperature
    to --beta-max, truncating every plaquette bond back to --D
    with the chosen method.

    Returns:

        evolve_<method>.csv: truncation errors of every bond at every
                             step.

        evolve_<method>.json: resolved configuration, package versions
                              and summary statistics.

        cell_<method>_<step>.zms: unit cell snapshots, only with
                                  --snapshot-every.
    """
    welcome_message("zeromode")
    set_verbosity(quiet)
    config = resolve_config(RunCommand.evolve.value, config_file, **flags)
    echo_table(config.to_dict())

    csv_name = output_file(config.out_path,
                           "evolve_{}.csv".format(config.method))
    json_name = output_file(config.out_path,
                            "evolve_{}.json".format(config.method))
    params = ModelParams(config.g, config.dbeta, config.beta_max)
    try:
        trajectory = run_evolution(params, config.bond_dim, config.method,
                                   config.kappa, config.seed,
                                   config.snapshot_every, config.out_path)
    except ConfigurationError as error:
        raise usage_error(error)
    except StepFailedError as error:
        logger.error(str(error))
        write_trajectory(error.records, csv_name)
        write_sidecar(json_name,
                      config.to_dict(),
                      accumulated_error(error.records),
                      failed_step={
                          "step": error.step,
                          "beta": error.beta,
                          "message": str(error)
                      },
                      outputs=[csv_name])
        sys.exit(1)

    write_trajectory(trajectory.records, csv_name)
    summary = accumulated_error(trajectory.records)
    summary["log_scale"] = trajectory.cell.log_scale
    write_sidecar(json_name, config.to_dict(), summary, outputs=[csv_name])
    click.echo(average_errors(trajectory.records).to_markdown(index=False))
    end_message()
