"""
Test the lowest eigenmodes of a metric
"""
import numpy as np
import pytest
from zeromode.exceptions import ConfigurationError
from zeromode.zmt import lowest_modes, random_metric


def test_modes_are_orthonormal_and_sorted(rng):
    env = random_metric(rng, 3)
    basis = lowest_modes(env, 5)
    assert basis.kappa == 5
    assert basis.dim == 3
    flat = basis.modes.reshape(5, 9)
    assert np.allclose(flat @ flat.T, np.eye(5))
    assert np.all(np.diff(basis.eigenvalues) >= 0)


def test_modes_are_the_lowest_eigenvectors(rng):
    env = random_metric(rng, 2)
    basis = lowest_modes(env, 3, reg=0.0)
    expected = np.linalg.eigvalsh(env.metric)[:3]
    assert np.allclose(basis.eigenvalues, expected)
    for mode, value in zip(basis.modes, basis.eigenvalues):
        assert np.allclose(env.metric @ mode.ravel(), value * mode.ravel())


def test_regularization_shift(rng):
    env = random_metric(rng, 2)
    basis = lowest_modes(env, 2, reg=1e-3)
    assert np.isclose(basis.regularization, 1e-3 * env.norm_scale / 4)


def test_signs_are_fixed(rng):
    env = random_metric(rng, 3)
    basis = lowest_modes(env, 4)
    for mode in basis.modes:
        flat = mode.ravel()
        assert flat[np.argmax(np.abs(flat))] > 0


def test_combine(rng):
    env = random_metric(rng, 2)
    basis = lowest_modes(env, 2)
    combined = basis.combine(np.array([0.6, 0.8]))
    assert np.allclose(combined, 0.6 * basis.modes[0] + 0.8 * basis.modes[1])


def test_kappa_range(rng):
    env = random_metric(rng, 2)
    with pytest.raises(ConfigurationError):
        lowest_modes(env, 0)
    with pytest.raises(ConfigurationError):
        lowest_modes(env, 5)
