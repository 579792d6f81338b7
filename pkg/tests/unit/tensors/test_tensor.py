"""
Test labelled tensors, contraction, fusion and splitting
"""
import numpy as np
import pytest
from zeromode.exceptions import ConfigurationError, TensorShapeError
from zeromode.tensors import (Tensor, contract, contract_shared, fuse,
                              identity, split)


def test_tensor_keeps_float64_row_major_data():
    """
    Integer input is stored as a contiguous float64 array
    """
    tensor = Tensor(np.arange(6).reshape(2, 3), ["i", "j"])
    assert tensor.data.dtype == np.float64
    assert tensor.data.flags["C_CONTIGUOUS"]
    assert tensor.shape == (2, 3)
    assert tensor.dim("j") == 3
    assert tensor.size == 6


def test_tensor_rejects_duplicated_labels():
    with pytest.raises(TensorShapeError):
        Tensor(np.zeros((2, 2)), ["i", "i"])


def test_tensor_rejects_wrong_number_of_labels():
    with pytest.raises(TensorShapeError):
        Tensor(np.zeros((2, 2)), ["i"])


def test_tensor_rejects_complex_and_non_finite_entries():
    with pytest.raises(TensorShapeError):
        Tensor(np.ones((2, )) * 1j, ["i"])
    with pytest.raises(TensorShapeError):
        Tensor(np.array([1.0, np.nan]), ["i"])


def test_transpose_and_rename():
    data = np.arange(24.0).reshape(2, 3, 4)
    tensor = Tensor(data, ["i", "j", "k"])
    transposed = tensor.transpose(["k", "i", "j"])
    assert transposed.shape == (4, 2, 3)
    assert np.array_equal(transposed.data, np.transpose(data, (2, 0, 1)))
    renamed = tensor.rename({"j": "x"})
    assert renamed.axes == ("i", "x", "k")
    with pytest.raises(TensorShapeError):
        tensor.transpose(["i", "j"])


def test_contract_matches_tensordot(rng):
    a = rng.normal(size=(2, 3, 4))
    b = rng.normal(size=(4, 5, 3))
    result = contract(Tensor(a, ["i", "j", "k"]), Tensor(b, ["k", "l", "j"]),
                      [("j", "j"), ("k", "k")])
    assert result.axes == ("i", "l")
    assert np.allclose(result.data, np.einsum("ijk,klj->il", a, b))


def test_contract_rejects_length_mismatch():
    a = Tensor(np.zeros((2, 3)), ["i", "j"])
    b = Tensor(np.zeros((4, 2)), ["j", "k"])
    with pytest.raises(TensorShapeError):
        contract(a, b, [("j", "j")])


def test_contract_rejects_duplicated_free_labels():
    a = Tensor(np.zeros((2, 3)), ["i", "j"])
    b = Tensor(np.zeros((3, 2)), ["j", "i"])
    with pytest.raises(TensorShapeError):
        contract(a, b, [("j", "j")])


def test_contract_shared_with_identity_is_a_relabel(rng):
    data = rng.normal(size=(3, 2))
    tensor = Tensor(data, ["i", "j"])
    result = contract_shared(tensor, identity(3, ["i", "x"]))
    assert result.axes == ("j", "x")
    assert np.allclose(result.data, data.T)


def test_fuse_is_row_major_over_members(rng):
    data = rng.normal(size=(2, 3, 4))
    tensor = Tensor(data, ["i", "j", "k"])
    fused, records = fuse(tensor, [["k"], ["i", "j"]])
    assert fused.axes == ("k", "i&j")
    assert fused.shape == (4, 6)
    assert np.allclose(fused.data[1, 1 * 3 + 2], data[1, 2, 1])
    assert records[1].members == ("i", "j")
    assert records[1].dims == (2, 3)


def test_split_restores_the_members(rng):
    data = rng.normal(size=(2, 3, 4))
    tensor = Tensor(data, ["i", "j", "k"])
    fused, records = fuse(tensor, [["i", "k"], ["j"]], ["ik", "j"])
    restored = split(fused, records).transpose(["i", "j", "k"])
    assert np.array_equal(restored.data, data)


def test_fuse_requires_a_cover():
    tensor = Tensor(np.zeros((2, 3)), ["i", "j"])
    with pytest.raises(ConfigurationError):
        fuse(tensor, [["i"]])
    with pytest.raises(ConfigurationError):
        fuse(tensor, [["i", "j"], ["j"]])


def test_split_rejects_wrong_lengths():
    tensor = Tensor(np.zeros((2, 3)), ["i", "j"])
    fused, records = fuse(tensor, [["i", "j"]])
    wrong = Tensor(np.zeros(5), fused.axes)
    with pytest.raises(TensorShapeError):
        split(wrong, records)


def test_full_contraction_gives_a_scalar():
    vector = Tensor([1.0, 2.0, 2.0], ["x"])
    result = contract(vector, vector, [("x", "x")])
    assert result.axes == ()
    assert result.shape == ()
    assert float(result.data) == 9.0


def test_scalar_tensor_has_no_axes():
    scalar = Tensor(1.0, ())
    assert scalar.shape == ()
    assert scalar.size == 1


def test_contract_is_bilinear(rng):
    a = rng.normal(size=(3, 4))
    b = rng.normal(size=(3, 4))
    c = rng.normal(size=(4, 5))
    weight = -1.7
    right = Tensor(c, ["j", "k"])
    combined = contract(Tensor(weight * a + b, ["i", "j"]), right,
                        [("j", "j")])
    separate = weight * contract(Tensor(a, ["i", "j"]), right,
                                 [("j", "j")]).data + contract(
                                     Tensor(b, ["i", "j"]), right,
                                     [("j", "j")]).data
    assert np.allclose(combined.data, separate, rtol=0, atol=1e-12)


def test_contraction_order_does_not_matter(rng):
    a = Tensor(rng.normal(size=(2, 3)), ["i", "j"])
    b = Tensor(rng.normal(size=(3, 4, 5)), ["j", "k", "l"])
    c = Tensor(rng.normal(size=(4, 6)), ["k", "m"])
    left_first = contract(contract(a, b, [("j", "j")]), c, [("k", "k")])
    right_first = contract(a, contract(b, c, [("k", "k")]), [("j", "j")])
    assert np.allclose(left_first.transpose(right_first.axes).data,
                       right_first.data,
                       rtol=0,
                       atol=1e-12)
