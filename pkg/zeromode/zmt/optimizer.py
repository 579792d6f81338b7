"""
Nonlinear conjugate gradient over the amplitudes
of the lowest metric modes
"""
import itertools
from typing import List, NamedTuple, Optional, Tuple
import numpy as np
from loguru import logger
from zeromode.data import ZmtDefaultParams
from zeromode.exceptions import (DegenerateEigenvalueError,
                                 NoRealEigenvalueError)
from .cost import ZCandidate, gradient_subspace, truncation_error
from .environment import BondEnvironment
from .modes import ModeBasis


class ZmtOptions(NamedTuple):
    """
    Parameters of the zero-mode optimizer
    """

    max_iterations: int = ZmtDefaultParams.max_iterations.value
    armijo: float = ZmtDefaultParams.armijo.value
    shrink: float = ZmtDefaultParams.shrink.value
    max_backtracks: int = ZmtDefaultParams.max_backtracks.value
    gradient_tolerance: float = ZmtDefaultParams.gradient_tolerance.value
    regularization: float = ZmtDefaultParams.regularization.value
    discard_tolerance: float = ZmtDefaultParams.discard_tolerance.value


def evaluate(alpha: np.ndarray, basis: ModeBasis,
             env: BondEnvironment) -> Optional[ZCandidate]:
    """
    Candidate for unit norm amplitudes, None when it is unusable
    """
    alpha = alpha / np.linalg.norm(alpha)
    z = basis.combine(alpha)
    try:
        error = truncation_error(z, env)
    except NoRealEigenvalueError:
        return None
    if not np.isfinite(error.f):
        return None
    return ZCandidate(alpha, z, error.emax, error.f, error.n)


def _starting_points(kappa: int) -> List[np.ndarray]:
    return list(np.eye(kappa))


def _fallback_points(kappa: int) -> List[np.ndarray]:
    points = []
    unit = np.eye(kappa)
    for first, second in itertools.combinations(range(kappa), 2):
        for sign in (1.0, -1.0):
            points.append((unit[first] + sign * unit[second]) / np.sqrt(2.0))
    return points


def initial_candidate(basis: ModeBasis, env: BondEnvironment) -> ZCandidate:
    """
    Single mode with the smallest truncation error. When no single
    mode has a real eigenvalue the signed pairwise combinations
    are tried.

        Raises:
            NoRealEigenvalueError: if no candidate is usable
    """
    for ladder in (_starting_points, _fallback_points):
        candidates = [
            candidate for candidate in (
                evaluate(alpha, basis, env) for alpha in ladder(basis.kappa))
            if candidate is not None
        ]
        if candidates:
            return min(candidates, key=lambda candidate: candidate.f)
        logger.warning(
            "No usable {} on bond {} with kappa={}".format(
                "single mode" if ladder is _starting_points else
                "pairwise combination", env.bond, basis.kappa))
    raise NoRealEigenvalueError(
        "No combination of the lowest modes has a real eigenvalue")


def _line_search(candidate: ZCandidate, direction: np.ndarray, slope: float,
                 step: float, basis: ModeBasis, env: BondEnvironment,
                 options: ZmtOptions) -> Tuple[Optional[ZCandidate], float]:
    """
    Backtracking from step until the Armijo condition holds. A step
    accepted at the first trial grows by 1/shrink while f decreases.
    """
    accepted = None
    shrunk = False
    for _ in range(options.max_backtracks):
        trial = evaluate(candidate.alpha + step * direction, basis, env)
        if trial is not None and trial.f <= candidate.f + options.armijo * step * slope:
            accepted = trial
            break
        step *= options.shrink
        shrunk = True
    if accepted is None or shrunk:
        return accepted, step
    for _ in range(options.max_backtracks):
        larger = step / options.shrink
        trial = evaluate(candidate.alpha + larger * direction, basis, env)
        if trial is None or trial.f >= accepted.f:
            break
        accepted, step = trial, larger
    return accepted, step


def optimize_candidate(basis: ModeBasis,
                       env: BondEnvironment,
                       options: ZmtOptions = None) -> ZCandidate:
    """
    Minimize f over the span of the modes with Polak-Ribiere+
    conjugate gradient, starting at the best single mode.

        Args:
            basis (ModeBasis): lowest modes of the metric
            env (BondEnvironment): metric of the bond
            options (ZmtOptions): optimizer parameters

        Returns:
            candidate (ZCandidate): unit norm Z with f not larger than
                                    the starting f

        Raises:
            NoRealEigenvalueError: if no starting point is usable
    """
    options = options or ZmtOptions()
    candidate = initial_candidate(basis, env)
    f_initial = candidate.f
    iterations = 0
    try:
        gradient = gradient_subspace(candidate, basis, env)
    except DegenerateEigenvalueError:
        logger.warning("Degenerate E_max at the starting point, no CG")
        return candidate._replace(f_initial=f_initial)

    direction = -gradient
    step = None
    previous_slope = None
    while iterations < options.max_iterations:
        norm = np.linalg.norm(gradient)
        if norm <= options.gradient_tolerance * max(1.0, candidate.f):
            break
        slope = float(gradient @ direction)
        if slope >= 0:
            direction = -gradient
            slope = -norm**2
        length = np.linalg.norm(direction)
        if previous_slope is not None:
            step = min(step * previous_slope / slope, 1.0 / length)
        if step is None or not np.isfinite(step) or step <= 0:
            step = 0.5 / length
        trial, step = _line_search(candidate, direction, slope, step, basis,
                                   env, options)
        if trial is None:
            break
        previous_slope = slope
        iterations += 1
        candidate = trial
        try:
            new_gradient = gradient_subspace(candidate, basis, env)
        except DegenerateEigenvalueError:
            logger.warning("Degenerate E_max reached, freezing the candidate")
            break
        beta = max(
            0.0,
            float(new_gradient @ (new_gradient - gradient)) /
            float(gradient @ gradient))
        if iterations % basis.kappa == 0:
            beta = 0.0
        direction = -new_gradient + beta * direction
        gradient = new_gradient
        logger.debug("CG iteration {} f={:.6e} |G|={:.3e}".format(
            iterations, candidate.f, np.linalg.norm(gradient)))

    logger.debug("Bond {} optimized f {:.6e} -> {:.6e} in {} iterations".format(
        env.bond, f_initial, candidate.f, iterations))
    return candidate._replace(iterations=iterations, f_initial=f_initial)
