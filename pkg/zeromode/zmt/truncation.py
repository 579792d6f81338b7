"""
Bond truncation through the singular insertion I - Z/E_max
"""
from typing import List, NamedTuple, Tuple
import numpy as np
import scipy.linalg
from loguru import logger
from zeromode.data import Constants, ZmtDefaultParams
from zeromode.exceptions import (ConfigurationError,
                                 IllConditionedInsertionError,
                                 NoRealEigenvalueError, UnusableCandidateError)
from zeromode.networks import TensorNetwork
from zeromode.tensors import Tensor, contract, svd
from .cost import ZCandidate
from .environment import build_metric
from .modes import lowest_modes
from .optimizer import ZmtOptions, optimize_candidate

NEW_BOND = "bond:new"


class TruncationFactors(NamedTuple):
    """
    left @ right reproduces I - Z/E_max without its
    smallest singular value
    """

    left: np.ndarray  # D x (D - 1)
    right: np.ndarray  # (D - 1) x D
    lambdas: np.ndarray
    mus: np.ndarray  # (D - 1) x 2, real and imaginary parts
    f_initial: float
    f: float


class CutReport(NamedTuple):
    """
    Diagnostic record of one single-dimension cut
    """

    bond: str
    D_before: int
    D_after: int
    f_initial_mode: float
    f_optimized: float
    relative_f: float
    cg_iterations: int
    fallback_used: bool
    mus: list


def sorted_spectrum(values: np.ndarray) -> np.ndarray:
    """
    Complex values as a (n, 2) array sorted by real then imaginary part
    """
    values = np.asarray(values, dtype=complex)
    order = np.lexsort((values.imag, values.real))
    return np.stack([values.real[order], values.imag[order]], axis=1)


def truncate_bond(
        candidate: ZCandidate,
        discard_tolerance: float = ZmtDefaultParams.discard_tolerance.value
) -> TruncationFactors:
    """
    Singular value decomposition of M = I - Z/E_max. The smallest
    singular value is dropped and the square roots of the others
    are shared between the two sides of the bond.

        Args:
            candidate (ZCandidate): optimized candidate with real E_max
            discard_tolerance (float): relative gap between the last two
                                       singular values below which a
                                       warning is logged

        Returns:
            factors (TruncationFactors)

        Raises:
            IllConditionedInsertionError: if the discarded singular value
                                          exceeds insertion_tolerance times
                                          the largest one
    """
    energy = candidate.emax.value_re
    if energy == 0.0:
        raise NoRealEigenvalueError("E_max must be non zero")
    dim = candidate.z.shape[0]
    if dim < 2:
        raise ConfigurationError("A bond of dimension 1 cannot be truncated")

    insertion = np.eye(dim) - candidate.z / energy
    decomposition = svd(insertion)
    s = decomposition.s
    if s[dim - 1] > Constants().insertion_tolerance * s[0]:
        raise IllConditionedInsertionError(
            "Discarded singular value {:.3e} against {:.3e}".format(
                s[dim - 1], s[0]))
    if s[dim - 2] <= (1.0 + discard_tolerance) * s[dim - 1]:
        logger.warning(
            "Ambiguous discarded singular value: {:.6e} vs {:.6e}".format(
                s[dim - 2], s[dim - 1]))
    lambdas = s[:dim - 1]
    roots = np.sqrt(lambdas)
    left = decomposition.u[:, :dim - 1] * roots
    right = roots[:, None] * decomposition.v[:, :dim - 1].T

    eigenvalues = scipy.linalg.eigvals(insertion)
    eigenvalues = np.delete(eigenvalues, np.argmin(np.abs(eigenvalues)))
    return TruncationFactors(left, right, lambdas,
                             sorted_spectrum(eigenvalues),
                             candidate.f_initial, candidate.f)


def absorb_bond_factors(network: TensorNetwork, bond: str, left: np.ndarray,
                        right: np.ndarray) -> TensorNetwork:
    """
    Multiply left into the first tensor of the bond and right into
    the second one. Labels and axis order are kept.

        Args:
            network (TensorNetwork): network holding the bond
            bond (str): bond label
            left (np.ndarray): D x D' matrix acting on the first tensor
            right (np.ndarray): D' x D matrix acting on the second tensor

        Returns:
            network (TensorNetwork): network with a bond of length D'
    """
    first, second = network.endpoints(bond)
    tensor_a = network[first]
    tensor_b = network[second]
    new_a = contract(tensor_a, Tensor(left, (bond, NEW_BOND)),
                     [(bond, bond)])
    new_b = contract(tensor_b, Tensor(right, (NEW_BOND, bond)),
                     [(bond, bond)])
    new_a = new_a.rename({NEW_BOND: bond}).transpose(tensor_a.axes)
    new_b = new_b.rename({NEW_BOND: bond}).transpose(tensor_b.axes)
    return network.update({first: new_a, second: new_b})


def apply_truncation(network: TensorNetwork, bond: str,
                     factors: TruncationFactors) -> TensorNetwork:
    """
    Absorbs truncation factors, reducing the bond by one
    """
    return absorb_bond_factors(network, bond, factors.left, factors.right)


def insert_gauge(network: TensorNetwork, bond: str,
                 gauge: np.ndarray) -> TensorNetwork:
    """
    Inserts gauge^-1 gauge on a bond: A -> A gauge^-1, B -> gauge B
    """
    return absorb_bond_factors(network, bond, np.linalg.inv(gauge), gauge)


def zmt_cut(network: TensorNetwork,
            bond: str,
            kappa: int,
            options: ZmtOptions = None
            ) -> Tuple[TensorNetwork, TruncationFactors, CutReport]:
    """
    One zero-mode cut: metric, modes, optimization and truncation.
    kappa is reduced to D^2 on small bonds.

        Raises:
            UnusableCandidateError: if no candidate is usable or the
                                    insertion cannot be cut
    """
    options = options or ZmtOptions()
    env = build_metric(network, bond)
    effective_kappa = min(kappa, env.dim**2)
    if effective_kappa < kappa:
        logger.debug("kappa reduced to {} on bond {}".format(
            effective_kappa, bond))
    basis = lowest_modes(env, effective_kappa, options.regularization)
    candidate = optimize_candidate(basis, env, options)
    factors = truncate_bond(candidate, options.discard_tolerance)
    report = CutReport(bond, env.dim, env.dim - 1, candidate.f_initial,
                       candidate.f, candidate.f / env.state_norm,
                       candidate.iterations, False, factors.mus.tolist())
    return apply_truncation(network, bond, factors), factors, report


def reduce_iteratively(network: TensorNetwork,
                       bond: str,
                       kappa: int = ZmtDefaultParams.kappa.value,
                       f_tol: float = 1e-10,
                       options: ZmtOptions = None
                       ) -> Tuple[TensorNetwork, List[CutReport]]:
    """
    Repeat zero-mode cuts while the optimized relative error
    f / <psi|psi> stays below f_tol.

        Args:
            network (TensorNetwork): network holding the bond
            bond (str): bond label
            kappa (int): number of modes
            f_tol (float): largest accepted relative error
            options (ZmtOptions): optimizer parameters

        Returns:
            network (TensorNetwork): reduced network

            reports (list): one CutReport per performed cut
    """
    if f_tol < 0:
        raise ConfigurationError("f_tol must be non negative", flag="f-tol")
    options = options or ZmtOptions()
    reports = []
    while network.bond_dim(bond) > 1:
        try:
            reduced, _, report = zmt_cut(network, bond, kappa, options)
        except UnusableCandidateError as error:
            logger.info("Stopping on bond {}: {}".format(bond, error))
            break
        if report.relative_f > f_tol:
            logger.info(
                "Stopping on bond {} at D={}: relative f {:.3e} > {:.3e}".
                format(bond, report.D_before, report.relative_f, f_tol))
            break
        logger.info("Bond {} reduced {} -> {} with relative f {:.3e}".format(
            bond, report.D_before, report.D_after, report.relative_f))
        network = reduced
        reports.append(report)
    return network, reports
