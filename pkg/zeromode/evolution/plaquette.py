"""
Plaquette update: absorb the plaquette MPO, truncate
each plaquette bond and optimize the two adjacent tensors
inside the plaquette environment
"""
from typing import Dict, List, NamedTuple, Optional, Tuple
import numpy as np
from loguru import logger
from zeromode.data import AlsDefaultParams, TruncationMethod, ZmtDefaultParams
from zeromode.interfaces import BondTruncation
from zeromode.networks import TensorNetwork, bra_label
from zeromode.tensors import (Tensor, contract, contract_shared, from_matrix,
                              fuse, lstsq, matrixize)
from zeromode.truncations import SvdTruncation, ZmtTruncation
from zeromode.zmt import ZmtOptions
from .model import PlaquetteMPO
from .unit_cell import SITE_AXES, UnitCell

SIDES = ("top", "right", "bottom", "left")


class Corner(NamedTuple):
    """
    Axes of a site that border the plaquette, and the
    sides the MPO loop enters and leaves through
    """

    axes: Dict[str, str]  # site axis -> plaquette side
    loop_in: str
    loop_out: str


# Corners in the order top-left, top-right, bottom-right, bottom-left
CORNERS = (
    Corner({"right": "top", "down": "left"}, "left", "top"),
    Corner({"left": "top", "down": "right"}, "top", "right"),
    Corner({"up": "right", "left": "bottom"}, "right", "bottom"),
    Corner({"right": "bottom", "up": "left"}, "bottom", "left"),
)

# Corners joined by each side
SIDE_CORNERS = {"top": (0, 1), "right": (1, 2), "bottom": (2, 3), "left": (3, 0)}


class Plaquette(NamedTuple):
    """
    Sites at the corners, listed clockwise from the top-left
    """

    label: str
    sites: Tuple[str, str, str, str]

    def bond_label(self, side: str) -> str:
        """
        Name of a plaquette bond, e.g. "abcd:a'-b'"
        """
        first, second = SIDE_CORNERS[side]
        return "{}:{}'-{}'".format(self.label, self.sites[first],
                                   self.sites[second])


# Cell a b / d c. With a and b exchanged the second plaquette reads cdba
# and its bonds c'-d', d'-b', b'-a', a'-c', in the same order.
PLAQUETTES = (
    Plaquette("abcd", ("a", "b", "c", "d")),
    Plaquette("cdab", ("c", "d", "a", "b")),
)


class AlsOptions(NamedTuple):
    """
    Parameters of the alternating least squares optimization
    """

    sweeps: int = AlsDefaultParams.sweeps.value
    improvement: float = AlsDefaultParams.improvement.value
    pinv_cutoff: float = AlsDefaultParams.pinv_cutoff.value


class PlaquetteOptions(NamedTuple):
    """
    Truncation settings shared by every plaquette update.
    bond_dim None lets the bonds grow without truncation.
    """

    bond_dim: Optional[int] = 4
    kappa: int = ZmtDefaultParams.kappa.value
    zmt: ZmtOptions = ZmtOptions()
    als: AlsOptions = AlsOptions()


class ErrorRecord(NamedTuple):
    """
    Relative truncation error of one bond, before and after
    the variational optimization
    """

    step: int
    beta: float
    bond: str
    method: str
    delta_initial: float
    delta_final: float
    cg_iters: int
    fallback: bool


def truncation_factory(method: str, options: PlaquetteOptions) -> BondTruncation:
    """
    Truncation algorithm for a method name
    """
    truncation_chooser = {
        TruncationMethod.zmt.value:
        lambda: ZmtTruncation(options.kappa, options.zmt),
        TruncationMethod.svd.value: SvdTruncation,
    }
    return truncation_chooser[str(method)]()


def _site_label(site: str, axis: str) -> str:
    return "{}:{}".format(site, axis)


def plaquette_network(cell: UnitCell, plaquette: Plaquette) -> TensorNetwork:
    """
    The four corner tensors with the plaquette bonds named after
    their side. Every other axis is an open leg 'site:axis'.
    """
    tensors = {}
    for site, corner in zip(plaquette.sites, CORNERS):
        mapping = {
            axis: corner.axes.get(axis, _site_label(site, axis))
            for axis in SITE_AXES
        }
        tensors[site] = cell.tensors[site].rename(mapping)
    return TensorNetwork(tensors)


def restore_cell(cell: UnitCell, network: TensorNetwork,
                 plaquette: Plaquette) -> UnitCell:
    """
    Put the corner tensors back into the unit cell
    """
    tensors = dict(cell.tensors)
    for site, corner in zip(plaquette.sites, CORNERS):
        inverse = {side: axis for axis, side in corner.axes.items()}
        inverse.update({_site_label(site, axis): axis for axis in SITE_AXES})
        tensors[site] = network[site].rename(inverse).transpose(SITE_AXES)
    return cell.with_tensors(tensors)


def apply_mpo(network: TensorNetwork, plaquette: Plaquette,
              mpo: PlaquetteMPO) -> TensorNetwork:
    """
    Apply the MPO corner operators to the spins and fuse the loop
    index into the plaquette bonds, bond index first
    """
    tensors = {}
    for site, corner, operator in zip(plaquette.sites, CORNERS, mpo.ops):
        tensor = network[site]
        spin = _site_label(site, "spin")
        applied = contract(
            tensor, Tensor(operator, ("mpo:spin", spin, "mpo:in", "mpo:out")),
            [(spin, spin)])
        groups = []
        for label in tensor.axes:
            if label == corner.loop_in:
                groups.append((label, "mpo:in"))
            elif label == corner.loop_out:
                groups.append((label, "mpo:out"))
            elif label == spin:
                groups.append(("mpo:spin", ))
            else:
                groups.append((label, ))
        tensors[site], _ = fuse(applied, groups, list(tensor.axes))
    return TensorNetwork(tensors)


def truncation_delta(target: TensorNetwork, variational: TensorNetwork,
                     bond: str) -> float:
    """
    |psi_target - psi_variational| / |psi_target| for networks that
    differ only in the two tensors of the bond. The difference of
    the merged two-site tensors is contracted against the rest of the
    environment, so no cancellation occurs.
    """
    first, second = target.endpoints(bond)
    merged_target = contract_shared(target[first], target[second])
    merged_variational = contract_shared(variational[first],
                                         variational[second])
    difference = Tensor(
        merged_target.data -
        merged_variational.transpose(merged_target.axes).data,
        merged_target.axes)
    traced = [label for label in difference.axes if target.is_open(label)]
    mapping = {
        label: bra_label(label)
        for label in difference.axes if label not in traced
    }
    layer = contract(difference, difference.rename(mapping),
                     [(label, label) for label in traced])
    rest = target.overlap(exclude=(first, second))
    squared = float(contract_shared(layer, rest).data)
    norm = float(target.overlap().data)
    return float(np.sqrt(max(squared, 0.0) / norm))


def _als_update(target: TensorNetwork, variational: TensorNetwork, name: str,
                cutoff: float) -> Tensor:
    """
    Least squares optimal tensor for one site with the rest fixed
    """
    tensor = variational[name]
    bonds = [label for label in tensor.axes if not variational.is_open(label)]
    opens = [label for label in tensor.axes if variational.is_open(label)]
    starred = [bra_label(label) for label in bonds]

    norm_environment = variational.overlap(exclude=(name, ))
    cross_environment = target.overlap(bra=variational, exclude=(name, ))
    projected = contract(target[name], cross_environment,
                         [(label, label) for label in bonds])

    normal = matrixize(norm_environment, bonds, starred).matrix
    rhs = matrixize(projected, opens, starred)
    solution = lstsq(normal, rhs.matrix.T, cutoff)
    return from_matrix(solution.T, opens, rhs.row_shape(), bonds,
                       [tensor.dim(label)
                        for label in bonds]).transpose(tensor.axes)


def optimize_bond(target: TensorNetwork,
                  variational: TensorNetwork,
                  bond: str,
                  options: AlsOptions = None,
                  delta: float = None) -> Tuple[TensorNetwork, float]:
    """
    Alternating least squares on the two tensors of a bond,
    minimizing the distance to the target network. The best
    network met is returned, so the error never increases.

        Args:
            target (TensorNetwork): untruncated network
            variational (TensorNetwork): truncated network
            bond (str): truncated bond
            options (AlsOptions): sweep parameters
            delta (float): error of the variational network, if known

        Returns:
            network (TensorNetwork): optimized network

            delta (float): its relative error
    """
    options = options or AlsOptions()
    best = variational
    best_delta = truncation_delta(target, variational,
                                  bond) if delta is None else delta
    if best_delta == 0.0:
        return best, best_delta
    current = variational
    for sweep in range(options.sweeps):
        for name in target.endpoints(bond):
            current = current.replace(
                name, _als_update(target, current, name, options.pinv_cutoff))
        current_delta = truncation_delta(target, current, bond)
        logger.debug("ALS sweep {} on bond {}: delta {:.6e}".format(
            sweep + 1, bond, current_delta))
        if current_delta >= best_delta:
            break
        improvement = (best_delta - current_delta) / best_delta
        best, best_delta = current, current_delta
        if improvement < options.improvement:
            break
    return best, best_delta


def apply_and_truncate_plaquette(
        cell: UnitCell,
        mpo: PlaquetteMPO,
        method: str,
        options: PlaquetteOptions = None,
        plaquette: Plaquette = PLAQUETTES[0],
        step: int = 0,
        beta: float = None) -> Tuple[UnitCell, List[ErrorRecord]]:
    """
    Apply exp(epsilon B_p) on a plaquette and bring its four bonds
    back to the bond dimension, clockwise from the top bond.

        Args:
            cell (UnitCell): current state
            mpo (PlaquetteMPO): plaquette operator
            method (str): 'zmt' or 'svd'
            options (PlaquetteOptions): truncation settings
            plaquette (Plaquette): corners of the plaquette
            step (int): step index written in the records
            beta (float): inverse temperature written in the records

        Returns:
            cell (UnitCell): updated cell

            records (list): one ErrorRecord per plaquette bond
    """
    options = options or PlaquetteOptions()
    beta = cell.beta if beta is None else beta
    truncation = truncation_factory(method, options)
    network = apply_mpo(plaquette_network(cell, plaquette), plaquette, mpo)
    records = []
    for side in SIDES:
        label = plaquette.bond_label(side)
        current = network.bond_dim(side)
        target_dim = current if options.bond_dim is None else options.bond_dim
        if target_dim >= current:
            records.append(
                ErrorRecord(step, beta, label, str(method), 0.0, 0.0, 0, False))
            continue
        outcome = truncation.truncate(network, side, target_dim)
        delta_initial = truncation_delta(network, outcome.network, side)
        optimized, delta_final = optimize_bond(network, outcome.network, side,
                                               options.als, delta_initial)
        logger.info("{} {} -> {}: delta {:.3e} -> {:.3e}".format(
            label, current, target_dim, delta_initial, delta_final))
        records.append(
            ErrorRecord(step, beta, label, str(method), delta_initial,
                        delta_final, outcome.cg_iterations, outcome.fallback))
        network = optimized
    return restore_cell(cell, network, plaquette), records
