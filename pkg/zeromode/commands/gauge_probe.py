"""
Gauge invariance check of the zero-mode truncation spectrum
"""
import sys
import click
import numpy as np
import pandas as pd
from loguru import logger
from zeromode.data import RunCommand
from zeromode.exceptions import ConfigurationError, NumericalError
from zeromode.networks import make_virtual_loop, ring_bond
from zeromode.utils import (echo_table, end_message, output_file,
                            welcome_message, write_sidecar)
from zeromode.zmt import gauge_probe as probe_gauge, random_gauge
from .options import resolve_config, run_options, set_verbosity, usage_error

PROBE_COLUMNS = [
    "trial", "condition", "f_original", "f_gauged", "mu_difference", "agrees"
]


@click.command(name=RunCommand.gauge_probe.value)
@run_options("bond_dim", "loop_dim", "phys_dim", "noise", "seed", "kappa",
             "trials", "out_path")
def gauge_probe(quiet: bool, config_file: str, **flags) -> None:
    """
    Inserts random gauges G^-1 G on the redundant bond of a toy
    plaquette and compares the truncation spectra and errors
    found before and after the insertion.

    Returns:

        gauge_probe.csv: one row per gauge.

        gauge_probe.json: resolved configuration and the number of
                          agreeing trials.
    """
    welcome_message("zeromode")
    set_verbosity(quiet)
    config = resolve_config(RunCommand.gauge_probe.value, config_file,
                            **flags)
    echo_table(config.to_dict())

    bond = ring_bond(0)
    csv_name = output_file(config.out_path, "gauge_probe.csv")
    json_name = output_file(config.out_path, "gauge_probe.json")
    plaquette = make_virtual_loop(config.bond_dim, config.loop_dim,
                                  config.phys_dim, config.noise, config.seed)
    network = plaquette.network
    rng = np.random.Generator(np.random.Philox(config.seed).jumped())
    rows = []
    try:
        for trial in range(1, config.trials + 1):
            gauge = random_gauge(rng, network.bond_dim(bond))
            result = probe_gauge(network, bond, gauge, config.kappa)
            agrees = result.agrees()
            if not agrees:
                logger.warning(
                    "Trial {} disagrees: mus {} against {}".format(
                        trial, result.mus_original.tolist(),
                        result.mus_gauged.tolist()))
            difference = float(
                np.max(np.abs(result.mus_original - result.mus_gauged)))
            rows.append((trial, result.condition, result.f_original,
                         result.f_gauged, difference, agrees))
    except ConfigurationError as error:
        raise usage_error(error)
    except NumericalError as error:
        logger.error("Gauge probe failed: {}".format(error))
        write_sidecar(json_name, config.to_dict(), {},
                      failed_step={"trial": len(rows) + 1,
                                   "message": str(error)})
        sys.exit(1)

    table = pd.DataFrame(rows, columns=PROBE_COLUMNS)
    table.to_csv(csv_name, index=False, float_format="%.12e")
    summary = {
        "trials": config.trials,
        "agreeing": int(table["agrees"].sum()),
        "max_mu_difference": float(table["mu_difference"].max()),
    }
    write_sidecar(json_name, config.to_dict(), summary, outputs=[csv_name])
    click.echo(table.to_markdown(index=False))
    click.echo("{} of {} trials agree".format(summary["agreeing"],
                                              config.trials))
    end_message()
