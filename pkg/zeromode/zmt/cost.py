"""
Truncation error of a zero-mode candidate and its gradient
"""
from typing import NamedTuple
import numpy as np
from zeromode.data import Constants
from zeromode.exceptions import (DegenerateEigenvalueError,
                                 NoRealEigenvalueError)
from zeromode.tensors import EigenPairGeneral, eig_general
from .environment import BondEnvironment
from .modes import ModeBasis


class TruncationError(NamedTuple):
    """
    f = N / E_max^2
    """

    f: float
    n: float
    emax: EigenPairGeneral


class ZCandidate(NamedTuple):
    """
    Combination Z = sum_m alpha_m Z^m of metric modes, with its
    dominant real eigenpair. The insertion I + z Z uses z = -1/E_max.
    """

    alpha: np.ndarray
    z: np.ndarray
    emax: EigenPairGeneral
    f: float
    n: float
    iterations: int = 0
    f_initial: float = float("nan")

    @property
    def gauge_parameter(self) -> float:
        """
        z = -1 / E_max
        """
        return -1.0 / self.emax.value_re


def dominant_real_eigenpair(z: np.ndarray) -> EigenPairGeneral:
    """
    Real eigenvalue of largest magnitude.

        Args:
            z (np.ndarray): square real matrix

        Returns:
            pair (EigenPairGeneral)

        Raises:
            NoRealEigenvalueError: if z has no real eigenvalue above
                                   emax_tolerance * |z|
    """
    real_pairs = [pair for pair in eig_general(z) if pair.is_real]
    if not real_pairs:
        raise NoRealEigenvalueError("Candidate has no real eigenvalue")
    best = max(real_pairs, key=lambda pair: abs(pair.value_re))
    scale = np.linalg.norm(z)
    if abs(best.value_re) <= Constants().emax_tolerance * scale:
        raise NoRealEigenvalueError(
            "Largest real eigenvalue {:.3e} is negligible against |Z| = {:.3e}"
            .format(best.value_re, scale))
    return best


def truncation_error(z: np.ndarray, env: BondEnvironment) -> TruncationError:
    """
    Squared norm of the change of the state when I - Z/E_max
    is inserted on the bond.

        Args:
            z (np.ndarray): D x D candidate
            env (BondEnvironment): metric of the bond

        Returns:
            error (TruncationError): f, N and the dominant eigenpair
    """
    emax = dominant_real_eigenpair(z)
    n = max(env.quadratic_form(z), 0.0)
    return TruncationError(n / emax.value_re**2, n, emax)


def gradient_full(z: np.ndarray,
                  env: BondEnvironment,
                  error: TruncationError = None) -> np.ndarray:
    """
    Derivative of f with respect to the entries of Z,

        G = 2 (g Z - f E_max L R^T) / E_max^2

    with sum_j L_j R_j = 1.

        Args:
            z (np.ndarray): D x D candidate
            env (BondEnvironment): metric of the bond
            error (TruncationError): value at z, if already known

        Returns:
            gradient (np.ndarray): D x D matrix
    """
    if error is None:
        error = truncation_error(z, env)
    emax = error.emax
    if not emax.is_simple:
        raise DegenerateEigenvalueError(
            "E_max = {:.6e} is defective, |L.R| = {:.3e}".format(
                emax.value_re, emax.overlap))
    energy = emax.value_re
    left = emax.left[:, 0]
    right = emax.right[:, 0]
    applied = (env.metric @ np.asarray(z).ravel()).reshape(z.shape)
    return 2.0 * (applied - error.f * energy * np.outer(left, right)) / energy**2


def gradient_subspace(candidate: ZCandidate, basis: ModeBasis,
                      env: BondEnvironment) -> np.ndarray:
    """
    G_m = sum_ij Z^m_ij G_ij, the derivative of f with
    respect to the amplitudes alpha_m.
    """
    error = TruncationError(candidate.f, candidate.n, candidate.emax)
    gradient = gradient_full(candidate.z, env, error)
    return np.tensordot(basis.modes, gradient, axes=([1, 2], [0, 1]))
