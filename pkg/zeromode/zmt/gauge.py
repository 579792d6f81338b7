"""
Gauge invariance diagnostic of the truncation spectrum
"""
from typing import NamedTuple
import numpy as np
from loguru import logger
from zeromode.exceptions import ConfigurationError
from zeromode.networks import TensorNetwork
from .environment import build_metric
from .modes import lowest_modes
from .optimizer import ZmtOptions, optimize_candidate
from .truncation import insert_gauge, truncate_bond

MAX_CONDITION = 10.0


class GaugeProbeResult(NamedTuple):
    """
    Outcome of a zero-mode truncation in two gauges
    """

    mus_original: np.ndarray
    mus_gauged: np.ndarray
    f_original: float
    f_gauged: float
    condition: float

    def agrees(self,
               mu_tolerance: float = 1e-6,
               f_tolerance: float = 1e-8,
               f_floor: float = 1e-14) -> bool:
        """
        True when both spectra and both errors coincide. Errors
        below f_floor are compared in absolute terms.
        """
        if self.mus_original.shape != self.mus_gauged.shape:
            return False
        scale = max(abs(self.f_original), abs(self.f_gauged), 1e-300)
        return bool(
            np.allclose(self.mus_original,
                        self.mus_gauged,
                        rtol=0,
                        atol=mu_tolerance)
            and abs(self.f_original - self.f_gauged) <= max(
                f_tolerance * scale, f_floor))


def random_gauge(rng: np.random.Generator,
                 dim: int,
                 max_condition: float = MAX_CONDITION) -> np.ndarray:
    """
    Random invertible matrix with condition number below max_condition
    """
    while True:
        gauge = np.eye(dim) + 0.5 * rng.uniform(-1.0, 1.0, size=(dim, dim))
        if np.linalg.cond(gauge) < max_condition:
            return gauge


def _spectrum(network: TensorNetwork, bond: str, kappa: int,
              options: ZmtOptions):
    env = build_metric(network, bond)
    basis = lowest_modes(env, min(kappa, env.dim**2), options.regularization)
    candidate = optimize_candidate(basis, env, options)
    factors = truncate_bond(candidate, options.discard_tolerance)
    return factors.mus, candidate.f


def gauge_probe(network: TensorNetwork,
                bond: str,
                gauge: np.ndarray,
                kappa: int,
                options: ZmtOptions = None) -> GaugeProbeResult:
    """
    Run the zero-mode optimization before and after inserting
    gauge^-1 gauge on a bond.

        Args:
            network (TensorNetwork): network holding the bond
            bond (str): bond label
            gauge (np.ndarray): invertible D x D matrix
            kappa (int): number of modes
            options (ZmtOptions): optimizer parameters

        Returns:
            result (GaugeProbeResult): sorted mu spectra, both errors
                                       and the condition number of gauge
    """
    options = options or ZmtOptions()
    gauge = np.asarray(gauge, dtype=np.float64)
    dim = network.bond_dim(bond)
    if gauge.shape != (dim, dim):
        raise ConfigurationError("Gauge must be {0} x {0}".format(dim))
    condition = float(np.linalg.cond(gauge))
    if not np.isfinite(condition):
        raise ConfigurationError("Gauge is not invertible")
    mus_original, f_original = _spectrum(network, bond, kappa, options)
    gauged = insert_gauge(network, bond, gauge)
    mus_gauged, f_gauged = _spectrum(gauged, bond, kappa, options)
    result = GaugeProbeResult(mus_original, mus_gauged, f_original, f_gauged,
                              condition)
    logger.info("Gauge probe on bond {} cond={:.3f} f={:.6e}/{:.6e}".format(
        bond, condition, f_original, f_gauged))
    return result
