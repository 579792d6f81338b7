"""
Lowest eigenmodes of a bond metric
"""
from typing import NamedTuple
import numpy as np
from loguru import logger
from zeromode.data import Constants, ZmtDefaultParams
from zeromode.exceptions import ConfigurationError
from zeromode.tensors import eig_sym
from .environment import BondEnvironment


class ModeBasis(NamedTuple):
    """
    kappa lowest eigenvectors of the regularized metric,
    reshaped into D x D matrices
    """

    modes: np.ndarray  # shape (kappa, D, D)
    eigenvalues: np.ndarray  # ascending
    regularization: float  # absolute shift added to the diagonal

    @property
    def kappa(self) -> int:
        """
        Number of modes
        """
        return self.modes.shape[0]

    @property
    def dim(self) -> int:
        """
        Bond dimension
        """
        return self.modes.shape[1]

    def combine(self, alpha: np.ndarray) -> np.ndarray:
        """
        Z = sum_m alpha_m Z^m
        """
        return np.tensordot(alpha, self.modes, axes=1)


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    pivots = vectors[np.argmax(np.abs(vectors), axis=0),
                     np.arange(vectors.shape[1])]
    return vectors * np.where(pivots < 0, -1.0, 1.0)


def lowest_modes(
        env: BondEnvironment,
        kappa: int = ZmtDefaultParams.kappa.value,
        reg: float = ZmtDefaultParams.regularization.value) -> ModeBasis:
    """
    Eigenmodes of g + reg * (norm_scale / D^2) * I with the
    smallest eigenvalues.

        Args:
            env (BondEnvironment): metric of the cut bond
            kappa (int): number of modes, at most D^2
            reg (float): relative regularization

        Returns:
            basis (ModeBasis)
    """
    dim = env.dim
    if kappa < 1 or kappa > dim**2:
        raise ConfigurationError(
            "kappa must lie between 1 and D^2 = {}, got {}".format(
                dim**2, kappa),
            flag="kappa")
    if reg < 0:
        raise ConfigurationError("Regularization must be non negative")

    shift = reg * env.norm_scale / dim**2
    metric = env.metric
    decomposition = eig_sym(metric + shift * np.eye(dim**2))
    values = decomposition.values
    tolerance = Constants().psd_tolerance * env.norm_scale
    if values[0] - shift < -tolerance:
        logger.warning(
            "Metric of bond {} has negative eigenvalue {:.3e}".format(
                env.bond, values[0] - shift))
    if values[0] > 0:
        logger.debug("Bond {} loopiness ratio {:.3e}".format(
            env.bond, values[kappa - 1] / values[0]))

    vectors = _fix_signs(decomposition.vectors[:, :kappa])
    modes = vectors.T.reshape(kappa, dim, dim)
    return ModeBasis(modes, values[:kappa], shift)
