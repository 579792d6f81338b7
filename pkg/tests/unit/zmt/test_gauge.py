"""
Test the gauge invariance diagnostic
"""
import numpy as np
import pytest
from zeromode.exceptions import ConfigurationError
from zeromode.networks import make_planted_plaquette, make_virtual_loop
from zeromode.zmt import (GaugeProbeResult, ZmtOptions, gauge_probe,
                          random_gauge)


def test_random_gauge_is_well_conditioned(rng):
    for _ in range(10):
        gauge = random_gauge(rng, 4)
        assert gauge.shape == (4, 4)
        assert np.linalg.cond(gauge) < 10.0


def test_projector_spectrum_survives_a_gauge(rng):
    """
    Every zero mode of a planted rank deficiency gives a
    projector, whose kept eigenvalues are all one
    """
    plaquette = make_planted_plaquette(3, phys_dim=2, seed=13)
    gauge = np.eye(3) + 0.3 * rng.uniform(-1.0, 1.0, size=(3, 3))
    result = gauge_probe(plaquette.network, "01", gauge, 5)
    assert result.mus_original.shape == (2, 2)
    assert np.allclose(result.mus_original, [[1.0, 0.0], [1.0, 0.0]],
                       atol=1e-6)
    assert result.agrees(mu_tolerance=1e-6, f_floor=1e-12)
    assert result.condition >= 1.0


def test_gauge_must_be_square_and_invertible():
    plaquette = make_planted_plaquette(2, phys_dim=2, seed=1)
    with pytest.raises(ConfigurationError):
        gauge_probe(plaquette.network, "01", np.eye(3), 3)
    with pytest.raises(ConfigurationError):
        gauge_probe(plaquette.network, "01", np.zeros((2, 2)), 3)


def test_agreement_rules():
    mus = np.array([[0.5, 0.0], [1.0, 0.0]])
    same = GaugeProbeResult(mus, mus + 1e-9, 1e-3, 1e-3 * (1 + 1e-10), 2.0)
    assert same.agrees()
    shifted = GaugeProbeResult(mus, mus + 1e-3, 1e-3, 1e-3, 2.0)
    assert not shifted.agrees()
    tiny = GaugeProbeResult(mus, mus, 1e-17, 3e-17, 2.0)
    assert tiny.agrees()
    different_f = GaugeProbeResult(mus, mus, 1e-3, 2e-3, 2.0)
    assert not different_f.agrees()


def test_full_mode_space_is_gauge_covariant(rng):
    """
    With every mode of the metric kept, a gauge maps the search
    space onto itself, so both gauges reach the same optimum
    """
    plaquette = make_virtual_loop(1, 2, phys_dim=2, noise=0.05, seed=11)
    options = ZmtOptions(gradient_tolerance=1e-13)
    agreeing = 0
    for _ in range(5):
        gauge = random_gauge(rng, 2)
        result = gauge_probe(plaquette.network, "01", gauge, 4, options)
        assert result.f_original > 0.0
        agreeing += result.agrees()
    assert agreeing >= 4
