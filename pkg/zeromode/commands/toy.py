"""
Command that reduces the redundant bond of a toy plaquette
"""
import sys
import click
import pandas as pd
from loguru import logger
from zeromode.data import RunCommand
from zeromode.exceptions import ConfigurationError, NumericalError
from zeromode.networks import (fidelity, full_state, make_virtual_loop,
                               ring_bond)
from zeromode.utils import (echo_table, end_message, output_file,
                            welcome_message, write_sidecar)
from zeromode.zmt import reduce_iteratively
from .options import resolve_config, run_options, set_verbosity, usage_error

CUT_COLUMNS = [
    "cut", "bond", "D_before", "D_after", "f_initial_mode", "f_optimized",
    "relative_f", "cg_iterations", "fallback_used"
]


@click.command()
@run_options("bond_dim", "loop_dim", "phys_dim", "noise", "seed", "kappa",
             "f_tol", "out_path")
def toy(quiet: bool, config_file: str, **flags) -> None:
    """
    Builds a plaquette whose bonds carry a redundant loop of
    length d on top of bond dimension D, then removes zero modes
    from one bond until the relative error exceeds --f-tol.

    Returns:

        toy.csv: one row per cut with the errors before and after
                 the optimization.

        toy.json: resolved configuration, truncation spectra and the
                  fidelity of the reduced state.
    """
    welcome_message("zeromode")
    set_verbosity(quiet)
    config = resolve_config(RunCommand.toy.value, config_file, **flags)
    echo_table(config.to_dict())

    bond = ring_bond(0)
    csv_name = output_file(config.out_path, "toy.csv")
    json_name = output_file(config.out_path, "toy.json")
    try:
        plaquette = make_virtual_loop(config.bond_dim, config.loop_dim,
                                      config.phys_dim, config.noise,
                                      config.seed)
        logger.info("Reducing bond {} of dimension {}".format(
            bond, plaquette.network.bond_dim(bond)))
        reduced, reports = reduce_iteratively(plaquette.network, bond,
                                              config.kappa, config.f_tol)
        state_fidelity = fidelity(full_state(plaquette.network),
                                  full_state(reduced))
    except ConfigurationError as error:
        raise usage_error(error)
    except NumericalError as error:
        logger.error("Toy reduction failed: {}".format(error))
        write_sidecar(json_name, config.to_dict(), {},
                      failed_step={"message": str(error)})
        sys.exit(1)

    rows = [(index + 1, report.bond, report.D_before, report.D_after,
             report.f_initial_mode, report.f_optimized, report.relative_f,
             report.cg_iterations, report.fallback_used)
            for index, report in enumerate(reports)]
    table = pd.DataFrame(rows, columns=CUT_COLUMNS)
    table.to_csv(csv_name, index=False, float_format="%.12e")
    click.echo(table.to_markdown(index=False))

    summary = {
        "initial_dim": plaquette.network.bond_dim(bond),
        "final_dim": reduced.bond_dim(bond),
        "fidelity": state_fidelity,
        "f_sequence": [report.f_optimized for report in reports],
        "mus": [report.mus for report in reports],
    }
    write_sidecar(json_name, config.to_dict(), summary,
                  outputs=[csv_name])
    click.echo("Bond {}: {} -> {}, fidelity {:.12f}".format(
        bond, summary["initial_dim"], summary["final_dim"], state_fidelity))
    end_message()
