"""
Random instances and finite difference checks of the gradient
"""
from typing import Callable, NamedTuple
import numpy as np
from zeromode.exceptions import NoRealEigenvalueError
from .cost import ZCandidate, gradient_subspace, truncation_error
from .environment import BondEnvironment
from .modes import ModeBasis, lowest_modes


class GradientCheck(NamedTuple):
    """
    Comparison of an analytic gradient with finite differences
    """

    analytic: np.ndarray
    numeric: np.ndarray

    @property
    def relative_error(self) -> float:
        """
        |numeric - analytic| / |analytic|
        """
        scale = max(np.linalg.norm(self.analytic), 1e-300)
        return float(np.linalg.norm(self.numeric - self.analytic) / scale)


def central_difference(function: Callable[[np.ndarray], float],
                       point: np.ndarray,
                       step: float = 1e-6) -> np.ndarray:
    """
    Central finite difference gradient of a scalar function
    """
    point = np.asarray(point, dtype=np.float64)
    gradient = np.zeros_like(point)
    for index in np.ndindex(point.shape):
        shift = np.zeros_like(point)
        shift[index] = step
        gradient[index] = (function(point + shift) -
                           function(point - shift)) / (2 * step)
    return gradient


def random_metric(rng: np.random.Generator, dim: int) -> BondEnvironment:
    """
    Random positive definite D^2 x D^2 metric
    """
    factor = rng.uniform(-1.0, 1.0, size=(dim**2 + 2, dim**2))
    return BondEnvironment.from_metric(factor.T @ factor)


def is_well_separated(candidate: ZCandidate, gap: float = 1e-2) -> bool:
    """
    True when E_max is simple, well conditioned and isolated
    from the rest of the spectrum
    """
    if not candidate.emax.is_simple or candidate.emax.overlap < gap:
        return False
    eigenvalues = np.linalg.eigvals(candidate.z)
    energy = candidate.emax.value_re
    radius = np.max(np.abs(eigenvalues))
    others = np.delete(eigenvalues,
                       np.argmin(np.abs(eigenvalues - energy)))
    isolated = (np.abs(others.real) < abs(energy) - gap * radius) | (
        np.abs(others.imag) > gap * radius)
    return bool(np.all(isolated) and abs(energy) > gap * radius)


def random_candidate(rng: np.random.Generator, basis: ModeBasis,
                     env: BondEnvironment,
                     attempts: int = 1000) -> ZCandidate:
    """
    Random amplitudes whose combination has a well separated
    real E_max
    """
    for _ in range(attempts):
        alpha = rng.uniform(-1.0, 1.0, size=basis.kappa)
        z = basis.combine(alpha)
        try:
            error = truncation_error(z, env)
        except NoRealEigenvalueError:
            continue
        candidate = ZCandidate(alpha, z, error.emax, error.f, error.n)
        if is_well_separated(candidate):
            return candidate
    raise NoRealEigenvalueError(
        "No well separated candidate in {} attempts".format(attempts))


def subspace_gradient_check(rng: np.random.Generator,
                            dim: int,
                            kappa: int,
                            step: float = 1e-6) -> GradientCheck:
    """
    Compare gradient_subspace with central differences in alpha on
    a random metric and random amplitudes
    """
    env = random_metric(rng, dim)
    basis = lowest_modes(env, min(kappa, dim**2))
    candidate = random_candidate(rng, basis, env)

    def cost(alpha: np.ndarray) -> float:
        return truncation_error(basis.combine(alpha), env).f

    analytic = gradient_subspace(candidate, basis, env)
    numeric = central_difference(cost, candidate.alpha, step)
    return GradientCheck(analytic, numeric)
