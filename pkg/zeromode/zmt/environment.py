"""
Metric of the states obtained by cutting a bond
"""
from typing import NamedTuple
import numpy as np
from loguru import logger
from zeromode.exceptions import InvalidCutError, TensorShapeError
from zeromode.networks import TensorNetwork, bra_label
from zeromode.tensors import Tensor

CUT_LEFT = "cut:i"
CUT_RIGHT = "cut:j"


class BondEnvironment(NamedTuple):
    """
    Gram matrix g_{ij,i'j'} = <psi_ij|psi_i'j'> of the states
    obtained by cutting a bond. i runs over the stump on the
    first tensor of the bond, j over the stump on the second.
    """

    half_overlap: Tensor  # axes (i, j, i*, j*)
    bond: str
    dim: int
    norm_scale: float  # trace of g

    @property
    def metric(self) -> np.ndarray:
        """
        Returns:
            g as a D^2 x D^2 matrix with rows (i, j)
        """
        return self.half_overlap.data.reshape(self.dim**2, self.dim**2)

    @property
    def state_norm(self) -> float:
        """
        Returns:
            <psi|psi> of the uncut network
        """
        delta = np.eye(self.dim).ravel()
        return float(delta @ self.metric @ delta)

    def quadratic_form(self, z: np.ndarray) -> float:
        """
        N = sum Z_ij g_{ij,i'j'} Z_i'j'
        """
        vector = np.asarray(z).ravel()
        return float(vector @ self.metric @ vector)

    @classmethod
    def from_metric(cls, metric: np.ndarray,
                    bond: str = "bond") -> "BondEnvironment":
        """
        Wraps an explicit D^2 x D^2 metric
        """
        size = metric.shape[0]
        dim = int(round(np.sqrt(size)))
        if dim * dim != size or metric.shape != (size, size):
            raise TensorShapeError(
                "Metric of shape {} is not D^2 x D^2".format(metric.shape))
        half_overlap = Tensor(
            metric.reshape(dim, dim, dim, dim),
            (CUT_LEFT, CUT_RIGHT, bra_label(CUT_LEFT), bra_label(CUT_RIGHT)))
        return cls(half_overlap, bond, dim, float(np.trace(metric)))


def build_metric(network: TensorNetwork, bond: str) -> BondEnvironment:
    """
    Cut a bond and contract the resulting states against their
    conjugates. Open legs of the network are closed with identities.

        Args:
            network (TensorNetwork): network holding the bond
            bond (str): label of the cut bond

        Returns:
            environment (BondEnvironment)
    """
    network.endpoints(bond)
    if not network.is_connected(without=bond):
        raise InvalidCutError(
            "Cutting bond {} disconnects the network".format(bond))
    dim = network.bond_dim(bond)
    cut = network.rename_bond(bond, (CUT_LEFT, CUT_RIGHT))
    overlap = cut.overlap(keep=(CUT_LEFT, CUT_RIGHT))
    half_overlap = overlap.transpose(
        (CUT_LEFT, CUT_RIGHT, bra_label(CUT_LEFT), bra_label(CUT_RIGHT)))
    metric = half_overlap.data.reshape(dim**2, dim**2)
    norm_scale = float(np.trace(metric))
    logger.debug("Metric of bond {} with D={} and trace {:.6e}".format(
        bond, dim, norm_scale))
    return BondEnvironment(half_overlap, bond, dim, norm_scale)
