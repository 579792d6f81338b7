"""
Test the QR-SVD truncation of a bond
"""
import numpy as np
from zeromode.interfaces import TruncationOutcome
from zeromode.networks import fidelity, full_state, make_virtual_loop
from zeromode.truncations import SvdTruncation, svd_truncate


def test_full_rank_target_keeps_the_state():
    plaquette = make_virtual_loop(2, 2, noise=0.05, seed=4)
    truncated = svd_truncate(plaquette.network, "01", 4)
    assert truncated.bond_dim("01") == 4
    assert np.allclose(full_state(truncated).data,
                       full_state(plaquette).data)


def test_larger_target_is_capped_by_the_rank():
    plaquette = make_virtual_loop(2, 1, seed=4)
    truncated = svd_truncate(plaquette.network, "12", 10)
    assert truncated.bond_dim("12") == 2
    assert np.isclose(fidelity(full_state(truncated), full_state(plaquette)),
                      1.0)


def test_truncation_keeps_the_axes_order():
    plaquette = make_virtual_loop(3, 1, seed=5)
    truncated = svd_truncate(plaquette.network, "23", 1)
    assert truncated.bond_dim("23") == 1
    for name in plaquette.network.names:
        assert truncated[name].axes == plaquette.network[name].axes
    assert 0.0 < fidelity(full_state(truncated), full_state(plaquette)) < 1.0


def test_svd_truncation_outcome():
    plaquette = make_virtual_loop(2, 2, seed=6)
    outcome = SvdTruncation().truncate(plaquette.network, "30", 2)
    assert isinstance(outcome, TruncationOutcome)
    assert outcome.network.bond_dim("30") == 2
    assert outcome.cg_iterations == 0
    assert not outcome.fallback
