"""
Test the conjugate gradient search over the metric modes
"""
import numpy as np
import pytest
from zeromode.exceptions import NoRealEigenvalueError
from zeromode.networks import make_virtual_loop
from zeromode.zmt import (BondEnvironment, ModeBasis, ZmtOptions, build_metric,
                          evaluate, initial_candidate, lowest_modes,
                          optimize_candidate, random_metric)


def test_evaluate_normalizes_the_amplitudes(rng):
    env = random_metric(rng, 3)
    basis = lowest_modes(env, 5)
    candidate = evaluate(np.array([3.0, 0.0, 4.0, 0.0, 0.0]), basis, env)
    assert np.isclose(np.linalg.norm(candidate.alpha), 1.0)
    assert np.isclose(np.linalg.norm(candidate.z), 1.0)


def test_initial_candidate_is_the_best_single_mode(rng):
    env = random_metric(rng, 3)
    basis = lowest_modes(env, 5)
    candidate = initial_candidate(basis, env)
    singles = [evaluate(alpha, basis, env) for alpha in np.eye(5)]
    best = min(single.f for single in singles if single is not None)
    assert np.isclose(candidate.f, best)


def test_initial_candidate_uses_pairs_when_single_modes_fail():
    """
    Both modes are nilpotent, their sum is not
    """
    env = BondEnvironment.from_metric(np.eye(4))
    modes = np.array([[[0.0, 1.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]])
    basis = ModeBasis(modes, np.zeros(2), 0.0)
    candidate = initial_candidate(basis, env)
    assert np.isclose(abs(candidate.alpha[0]), abs(candidate.alpha[1]))
    assert np.isclose(abs(candidate.emax.value_re), np.sqrt(0.5))


def test_initial_candidate_without_real_eigenvalues():
    env = BondEnvironment.from_metric(np.eye(4))
    modes = np.array([[[0.0, 1.0], [0.0, 0.0]]])
    basis = ModeBasis(modes, np.zeros(1), 0.0)
    with pytest.raises(NoRealEigenvalueError):
        initial_candidate(basis, env)


def test_optimization_never_increases_the_error(rng):
    for _ in range(5):
        env = random_metric(rng, 3)
        basis = lowest_modes(env, 5)
        candidate = optimize_candidate(basis, env)
        assert candidate.f <= candidate.f_initial + 1e-14
        assert np.isclose(np.linalg.norm(candidate.alpha), 1.0)
        assert candidate.iterations <= ZmtOptions().max_iterations


def test_optimization_respects_the_iteration_limit(rng):
    env = random_metric(rng, 3)
    basis = lowest_modes(env, 5)
    candidate = optimize_candidate(basis, env, ZmtOptions(max_iterations=1))
    assert candidate.iterations <= 1


def test_optimum_matches_a_random_search(rng):
    plaquette = make_virtual_loop(2, 2, phys_dim=2, noise=1e-3, seed=5)
    env = build_metric(plaquette.network, "01")
    basis = lowest_modes(env, 3)
    candidate = optimize_candidate(basis, env)
    assert candidate.f <= candidate.f_initial
    samples = rng.normal(size=(10000, 3))
    searched = [evaluate(alpha, basis, env) for alpha in samples]
    best = min(trial.f for trial in searched if trial is not None)
    assert candidate.f <= 1.01 * best


def test_nilpotent_combinations_are_unusable():
    """
    A combination whose eigenvalues are roundoff of a nilpotent
    matrix must not be taken as a zero mode
    """
    env = BondEnvironment.from_metric(np.eye(4))
    modes = np.array([[[0.0, 1.0], [1e-30, 0.0]]])
    basis = ModeBasis(modes, np.zeros(1), 0.0)
    assert evaluate(np.ones(1), basis, env) is None
    with pytest.raises(NoRealEigenvalueError):
        initial_candidate(basis, env)


def test_line_search_reaches_the_optimum_of_many_modes(rng):
    env = random_metric(rng, 4)
    basis = lowest_modes(env, 9)
    candidate = optimize_candidate(basis, env)
    samples = rng.normal(size=(2000, 9))
    searched = [evaluate(alpha, basis, env) for alpha in samples]
    best = min(trial.f for trial in searched if trial is not None)
    assert candidate.f <= best
