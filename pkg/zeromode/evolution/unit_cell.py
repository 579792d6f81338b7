"""
2x2 unit cell of the purified iPEPS
"""
from typing import Dict, List, Mapping, NamedTuple
import numpy as np
from zeromode.exceptions import TensorShapeError
from zeromode.networks import TensorNetwork
from zeromode.tensors import Tensor, contract
from .model import ModelParams, electric_operator

SITE_AXES = ("up", "left", "down", "right", "spin", "ancilla")
SITE_NAMES = ("a", "b", "c", "d")


class CellBond(NamedTuple):
    """
    Bond between an axis of one site and an axis of another
    """

    label: str
    first: str
    first_axis: str
    second: str
    second_axis: str


# Layout, periodic in both directions:
#     a b
#     d c
CELL_BONDS = (
    CellBond("a-b", "a", "right", "b", "left"),
    CellBond("b-a", "b", "right", "a", "left"),
    CellBond("d-c", "d", "right", "c", "left"),
    CellBond("c-d", "c", "right", "d", "left"),
    CellBond("a|d", "a", "down", "d", "up"),
    CellBond("d|a", "d", "down", "a", "up"),
    CellBond("b|c", "b", "down", "c", "up"),
    CellBond("c|b", "c", "down", "b", "up"),
)


class UnitCell():
    """
    Four site tensors with axes (up, left, down, right, spin,
    ancilla), the accumulated inverse temperature and the log of
    the norm factored out of the tensors.
    """
    def __init__(self,
                 tensors: Mapping[str, Tensor],
                 beta: float = 0.0,
                 log_scale: float = 0.0):
        self.tensors = tensors
        self.beta = beta
        self.log_scale = log_scale

    @property
    def tensors(self) -> Dict[str, Tensor]:
        """
        Returns:
            Site tensors indexed by a, b, c, d
        """
        return self._tensors

    @tensors.setter
    def tensors(self, tensors: Mapping[str, Tensor]) -> None:
        """
        Verify axes, physical lengths and bond lengths

        Args:
            tensors (dict): site tensors
        """
        if sorted(tensors) != sorted(SITE_NAMES):
            raise TensorShapeError("Unit cell needs sites {}".format(
                SITE_NAMES))
        for name, tensor in tensors.items():
            if sorted(tensor.axes) != sorted(SITE_AXES):
                raise TensorShapeError("Site {} has axes {}".format(
                    name, tensor.axes))
            if tensor.dim("spin") != 2 or tensor.dim("ancilla") != 2:
                raise TensorShapeError(
                    "Site {} must have spin and ancilla of length 2".format(
                        name))
        for bond in CELL_BONDS:
            first = tensors[bond.first].dim(bond.first_axis)
            second = tensors[bond.second].dim(bond.second_axis)
            if first != second:
                raise TensorShapeError("Bond {} has lengths {} and {}".format(
                    bond.label, first, second))
        self._tensors = {
            name: tensors[name].transpose(SITE_AXES)
            for name in SITE_NAMES
        }

    def bond_dims(self) -> Dict[str, int]:
        """
        Length of each of the eight bonds
        """
        return {
            bond.label: self._tensors[bond.first].dim(bond.first_axis)
            for bond in CELL_BONDS
        }

    def with_tensors(self, tensors: Mapping[str, Tensor], beta: float = None,
                     log_scale: float = None) -> "UnitCell":
        """
        Returns a cell with new tensors
        """
        return UnitCell(tensors, self.beta if beta is None else beta,
                        self.log_scale if log_scale is None else log_scale)

    def normalized(self) -> "UnitCell":
        """
        Scale every tensor to unit Frobenius norm, moving
        the logarithm of the norms into log_scale
        """
        norms = {name: tensor.norm() for name, tensor in self._tensors.items()}
        tensors = {
            name: tensor.scale(1.0 / norms[name])
            for name, tensor in self._tensors.items()
        }
        return UnitCell(tensors, self.beta,
                        self.log_scale + float(np.sum(np.log(list(norms.values())))))


def initial_state() -> UnitCell:
    """
    Infinite temperature purification: every site holds
    (|up up> + |down down>)/sqrt(2) and all bonds have length 1
    """
    data = (np.eye(2) / np.sqrt(2.0)).reshape(1, 1, 1, 1, 2, 2)
    return UnitCell({name: Tensor(data, SITE_AXES) for name in SITE_NAMES})


def electric_half_step(cell: UnitCell,
                       params: ModelParams,
                       fraction: float = 0.25) -> UnitCell:
    """
    Multiply every spin by exp(fraction * dbeta * sigma_x).
    The default fraction gives the quarter step of the second
    order splitting.
    """
    time = fraction * params.dbeta
    if time == 0:
        return cell
    operator = Tensor(electric_operator(time), ("spin:new", "spin"))
    tensors = {}
    for name, tensor in cell.tensors.items():
        applied = contract(operator, tensor, [("spin", "spin")])
        tensors[name] = applied.rename({"spin:new": "spin"}).transpose(SITE_AXES)
    return cell.with_tensors(tensors)


def torus_network(cell: UnitCell) -> TensorNetwork:
    """
    The cell on a 2x2 periodic patch: every bond closed,
    spins and ancillas open as 'a:spin', 'a:ancilla', ...
    """
    tensors = {}
    for name in SITE_NAMES:
        mapping = {"spin": name + ":spin", "ancilla": name + ":ancilla"}
        for bond in CELL_BONDS:
            if bond.first == name:
                mapping[bond.first_axis] = bond.label
            if bond.second == name:
                mapping[bond.second_axis] = bond.label
        tensors[name] = cell.tensors[name].rename(mapping)
    return TensorNetwork(tensors)


def torus_state(cell: UnitCell) -> Tensor:
    """
    State vector of the 2x2 torus, axes ordered site by site
    as (spin, ancilla)
    """
    labels: List[str] = []
    for name in SITE_NAMES:
        labels += [name + ":spin", name + ":ancilla"]
    return torus_network(cell).contract_all().transpose(labels)
