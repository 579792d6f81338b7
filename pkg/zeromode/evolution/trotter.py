"""
Second order Trotter evolution of the purification
"""
import os
from typing import List, NamedTuple, Optional, Tuple
import numpy as np
from loguru import logger
from zeromode.exceptions import (ConfigurationError, NumericalError,
                                 StepFailedError)
from zeromode.utils.snapshot import write_snapshot
from .model import ModelParams, build_plaquette_mpo
from .plaquette import (PLAQUETTES, ErrorRecord, PlaquetteOptions,
                        apply_and_truncate_plaquette)
from .unit_cell import UnitCell, electric_half_step, initial_state


class Trajectory(NamedTuple):
    """
    Error records of every step and the final cell
    """

    records: List[ErrorRecord]
    cell: UnitCell


def trotter_step(cell: UnitCell,
                 params: ModelParams,
                 method: str,
                 options: PlaquetteOptions = None,
                 step: int = 0) -> Tuple[UnitCell, List[ErrorRecord]]:
    """
    exp(dbeta H_e / 4) exp(dbeta H_m / 2) exp(dbeta H_e / 4) with the
    magnetic part applied on the abcd plaquette, then on the cdab one.
    Tensors are rescaled to unit norm afterwards. A negative dbeta
    gives the formal inverse step.

        Args:
            cell (UnitCell): current state
            params (ModelParams): coupling and time step
            method (str): 'zmt' or 'svd'
            options (PlaquetteOptions): truncation settings
            step (int): index written in the records

        Returns:
            cell (UnitCell): evolved and normalized cell

            records (list): eight ErrorRecords
    """
    if params.dbeta == 0:
        return cell, []
    options = options or PlaquetteOptions()
    mpo = build_plaquette_mpo(params)
    beta = cell.beta + params.dbeta
    cell = electric_half_step(cell, params)
    records = []
    for plaquette in PLAQUETTES:
        cell, plaquette_records = apply_and_truncate_plaquette(
            cell, mpo, method, options, plaquette, step, beta)
        records += plaquette_records
    cell = electric_half_step(cell, params).normalized()
    return cell.with_tensors(cell.tensors, beta=beta), records


def number_of_steps(params: ModelParams) -> int:
    """
    beta_max / dbeta, which must be a positive integer
    """
    if params.dbeta <= 0:
        raise ConfigurationError("dbeta must be positive", flag="dbeta")
    steps = int(round(params.beta_max / params.dbeta))
    if steps < 1 or abs(steps * params.dbeta - params.beta_max) > 1e-9 * max(
            params.beta_max, 1.0):
        raise ConfigurationError(
            "beta_max = {} is not a multiple of dbeta = {}".format(
                params.beta_max, params.dbeta),
            flag="beta-max")
    return steps


def evolve(params: ModelParams,
           bond_dim: Optional[int],
           method: str,
           kappa: int = 5,
           seed: int = 0,
           snapshot_every: int = 0,
           snapshot_dir: str = ".",
           options: PlaquetteOptions = None
           ) -> Trajectory:
    """
    Run Trotter steps from infinite temperature up to beta_max.

        Args:
            params (ModelParams): coupling, time step and final beta
            bond_dim (int): bond dimension kept after each plaquette
            method (str): 'zmt' or 'svd'
            kappa (int): number of metric modes for zmt
            seed (int): seed recorded with the trajectory
            snapshot_every (int): write the cell every that many steps,
                                  0 disables snapshots
            snapshot_dir (str): folder of the snapshots
            options (PlaquetteOptions): remaining truncation settings

        Returns:
            trajectory (Trajectory)
    """
    steps = number_of_steps(params)
    options = (options or PlaquetteOptions())._replace(bond_dim=bond_dim,
                                                        kappa=kappa)
    logger.info("Evolving to beta={} in {} steps with {} (D={}, seed={})".format(
        params.beta_max, steps, method, bond_dim, seed))
    cell = initial_state()
    records = []
    for step in range(1, steps + 1):
        try:
            cell, step_records = trotter_step(cell, params, method, options,
                                              step)
        except NumericalError as error:
            logger.error("Step {} failed: {}".format(step, error))
            raise StepFailedError(step, cell.beta, str(error),
                                  records) from error
        records += step_records
        average = np.mean([record.delta_final for record in step_records])
        logger.info("Step {} beta={:.4f} mean delta_final={:.3e}".format(
            step, cell.beta, average))
        if snapshot_every and step % snapshot_every == 0:
            path = os.path.join(snapshot_dir,
                                "cell_{}_{:05d}.zms".format(method, step))
            write_snapshot(path, cell.tensors)
    return Trajectory(records, cell)
