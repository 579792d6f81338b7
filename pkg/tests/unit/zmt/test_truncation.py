"""
Test the singular insertion and the iterative reduction of a bond
"""
import numpy as np
import pytest
from zeromode.exceptions import ConfigurationError, IllConditionedInsertionError
from zeromode.networks import (fidelity, full_state, make_planted_plaquette,
                               make_virtual_loop)
from zeromode.zmt import (ZCandidate, absorb_bond_factors, build_metric,
                          dominant_real_eigenpair, insert_gauge,
                          reduce_iteratively, sorted_spectrum, truncate_bond,
                          zmt_cut)


def diagonal_candidate(values) -> ZCandidate:
    z = np.diag(values)
    emax = dominant_real_eigenpair(z)
    return ZCandidate(np.ones(1), z, emax, 0.0, 0.0)


def test_truncate_bond_drops_the_null_direction():
    factors = truncate_bond(diagonal_candidate([2.0, 0.5, -1.0]))
    assert factors.left.shape == (3, 2)
    assert factors.right.shape == (2, 3)
    assert np.allclose(factors.lambdas, [1.5, 0.75])
    assert np.allclose(factors.left @ factors.right,
                       np.diag([0.0, 0.75, 1.5]))
    assert np.allclose(factors.mus, [[0.75, 0.0], [1.5, 0.0]])


def test_truncate_bond_requires_a_singular_insertion():
    z = np.diag([2.0, 0.5, -1.0])
    wrong = ZCandidate(np.ones(1), z, dominant_real_eigenpair(np.diag([3.0])),
                       0.0, 0.0)
    with pytest.raises(IllConditionedInsertionError):
        truncate_bond(wrong)


def test_truncate_bond_of_dimension_one():
    with pytest.raises(ConfigurationError):
        truncate_bond(diagonal_candidate([1.0]))


def test_sorted_spectrum():
    spectrum = sorted_spectrum(np.array([2.0, 1.0 - 1.0j, 1.0 + 1.0j]))
    assert np.array_equal(spectrum, [[1.0, -1.0], [1.0, 1.0], [2.0, 0.0]])


def test_gauge_insertion_keeps_the_state(rng):
    plaquette = make_virtual_loop(2, 1, phys_dim=2, seed=9)
    gauge = np.eye(2) + 0.3 * rng.uniform(-1.0, 1.0, size=(2, 2))
    gauged = insert_gauge(plaquette.network, "12", gauge)
    assert np.allclose(full_state(gauged).data,
                       full_state(plaquette.network).data)


def test_absorb_bond_factors_changes_both_sides(rng):
    plaquette = make_virtual_loop(3, 1, phys_dim=2, seed=2)
    left = rng.normal(size=(3, 2))
    right = rng.normal(size=(2, 3))
    reduced = absorb_bond_factors(plaquette.network, "23", left, right)
    assert reduced.bond_dim("23") == 2
    assert reduced["2"].axes == plaquette.network["2"].axes


def test_planted_zero_mode_is_removed_exactly():
    plaquette = make_planted_plaquette(3, phys_dim=2, seed=21)
    reduced, factors, report = zmt_cut(plaquette.network, "01", 5)
    assert report.D_before == 3
    assert report.D_after == 2
    assert reduced.bond_dim("01") == 2
    assert report.relative_f < 1e-10
    assert factors.f <= factors.f_initial
    assert fidelity(full_state(reduced),
                    full_state(plaquette.network)) > 1 - 1e-10


def test_redundant_loop_is_removed_in_two_cuts():
    """
    Bond of length D*d = 4 carrying a state of bond dimension 2
    """
    plaquette = make_virtual_loop(2, 2, noise=0.0, seed=20240101)
    reduced, reports = reduce_iteratively(plaquette.network,
                                          "01",
                                          kappa=5,
                                          f_tol=1e-10)
    assert len(reports) == 2
    assert [report.D_after for report in reports] == [3, 2]
    assert all(report.relative_f < 1e-10 for report in reports)
    assert reduced.bond_dim("01") == 2
    assert np.isclose(fidelity(full_state(reduced),
                               full_state(plaquette.network)),
                      1.0,
                      atol=1e-8)


def test_truncated_metric_stays_psd():
    plaquette = make_virtual_loop(2, 2, seed=8)
    reduced, _ = reduce_iteratively(plaquette.network, "01")
    env = build_metric(reduced, "01")
    assert np.linalg.eigvalsh(env.metric)[0] >= -1e-10 * env.norm_scale


def test_reduce_iteratively_rejects_negative_tolerance():
    plaquette = make_virtual_loop(2, 2)
    with pytest.raises(ConfigurationError):
        reduce_iteratively(plaquette.network, "01", f_tol=-1.0)
