"""
Test the plaquette update: MPO absorption, truncation
and variational optimization
"""
import numpy as np
import pytest
from zeromode.data import TruncationMethod
from zeromode.evolution import (PLAQUETTES, SIDES, ModelParams,
                                PlaquetteOptions, apply_and_truncate_plaquette,
                                apply_mpo, build_plaquette_mpo,
                                model_operators, optimize_bond,
                                plaquette_network, restore_cell,
                                truncation_delta, truncation_factory,
                                initial_state, electric_half_step)
from zeromode.truncations import SvdTruncation, ZmtTruncation, svd_truncate

PARAMS = ModelParams(3.04438, 0.01)


def mixed_cell():
    """
    A cell after one exact plaquette pass, so that
    bonds have length two
    """
    cell = electric_half_step(initial_state(), PARAMS)
    cell, _ = apply_and_truncate_plaquette(cell,
                                           build_plaquette_mpo(PARAMS),
                                           TruncationMethod.svd.value,
                                           PlaquetteOptions(bond_dim=None))
    return cell


def test_bond_labels_of_both_plaquettes():
    labels = [
        plaquette.bond_label(side) for plaquette in PLAQUETTES
        for side in SIDES
    ]
    assert labels[:4] == ["abcd:a'-b'", "abcd:b'-c'", "abcd:c'-d'",
                          "abcd:d'-a'"]
    assert labels[4:] == ["cdab:c'-d'", "cdab:d'-a'", "cdab:a'-b'",
                          "cdab:b'-c'"]


def test_plaquette_network_round_trip():
    cell = mixed_cell()
    network = plaquette_network(cell, PLAQUETTES[1])
    assert sorted(network.bonds()) == sorted(SIDES)
    restored = restore_cell(cell, network, PLAQUETTES[1])
    for name in cell.tensors:
        assert np.array_equal(restored.tensors[name].data,
                              cell.tensors[name].data)


def test_apply_mpo_multiplies_the_corner_spins():
    epsilon = PARAMS.epsilon
    plaquette = PLAQUETTES[0]
    network = plaquette_network(initial_state(), plaquette)
    applied = apply_mpo(network, plaquette, build_plaquette_mpo(PARAMS))
    for side in SIDES:
        assert applied.bond_dim(side) == 2

    spins = ["{}:spin".format(site) for site in plaquette.sites]
    rest = [label for label in network.open_labels() if label not in spins]
    before = network.contract_all().transpose(spins + rest).data
    after = applied.contract_all().transpose(spins + rest).data
    operator = (np.cosh(epsilon) * np.eye(16) +
                np.sinh(epsilon) * model_operators()["B_p"])
    expected = (operator @ before.reshape(16, -1)).reshape(before.shape)
    assert np.allclose(after, expected)


def test_truncation_delta_of_identical_networks():
    network = plaquette_network(mixed_cell(), PLAQUETTES[0])
    assert truncation_delta(network, network, "top") == 0.0


def test_svd_truncation_delta_and_optimization():
    target = apply_mpo(plaquette_network(mixed_cell(), PLAQUETTES[0]),
                       PLAQUETTES[0], build_plaquette_mpo(PARAMS))
    truncated = svd_truncate(target, "top", 1)
    assert truncated.bond_dim("top") == 1
    delta = truncation_delta(target, truncated, "top")
    assert 0.0 < delta < 1.0
    optimized, optimized_delta = optimize_bond(target, truncated, "top")
    assert optimized_delta <= delta + 1e-12
    assert optimized.bond_dim("top") == 1
    assert np.isclose(truncation_delta(target, optimized, "top"),
                      optimized_delta)


def test_truncation_factory():
    options = PlaquetteOptions(kappa=7)
    zmt = truncation_factory("zmt", options)
    assert isinstance(zmt, ZmtTruncation)
    assert zmt.kappa == 7
    assert isinstance(truncation_factory("svd", options), SvdTruncation)
    with pytest.raises(KeyError):
        truncation_factory("qr", options)


def test_large_target_records_no_error():
    cell, records = apply_and_truncate_plaquette(initial_state(),
                                                 build_plaquette_mpo(PARAMS),
                                                 "zmt",
                                                 PlaquetteOptions(bond_dim=4))
    assert len(records) == 4
    assert all(record.delta_final == 0.0 for record in records)
    assert set(cell.bond_dims()[label] for label in ("a-b", "b|c", "d-c",
                                                     "a|d")) == {2}


@pytest.mark.parametrize("method", TruncationMethod.to_list())
def test_truncated_plaquette_is_monotone(method):
    cell, records = apply_and_truncate_plaquette(
        mixed_cell(),
        build_plaquette_mpo(PARAMS),
        method,
        PlaquetteOptions(bond_dim=2),
        PLAQUETTES[0],
        step=3)
    assert [record.bond for record in records] == [
        PLAQUETTES[0].bond_label(side) for side in SIDES
    ]
    for record in records:
        assert record.step == 3
        assert record.method == method
        assert record.delta_final <= record.delta_initial + 1e-12
    assert max(cell.bond_dims().values()) <= 2


def test_zero_mode_cut_is_not_worse_than_svd():
    """
    Both methods start from the same cell, so the first bond
    compares identical inputs
    """
    cell = mixed_cell()
    mpo = build_plaquette_mpo(PARAMS)
    options = PlaquetteOptions(bond_dim=2)
    _, zmt_records = apply_and_truncate_plaquette(cell, mpo, "zmt", options)
    _, svd_records = apply_and_truncate_plaquette(cell, mpo, "svd", options)
    assert zmt_records[0].delta_final <= svd_records[0].delta_final + 1e-12
    assert np.mean([record.delta_final for record in zmt_records]) <= np.mean(
        [record.delta_final for record in svd_records]) + 1e-12
