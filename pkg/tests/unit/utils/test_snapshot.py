"""
Test the tensor snapshot files
"""
import numpy as np
import pytest
from zeromode.exceptions import TensorShapeError
from zeromode.tensors import Tensor
from zeromode.utils import read_snapshot, write_snapshot


def test_snapshot_keeps_names_axes_and_entries(tmp_path, rng):
    name = str(tmp_path / "cell.zms")
    tensors = {
        "a": Tensor(rng.normal(size=(2, 3, 1)), ["up", "left", "spin"]),
        "b": Tensor(rng.normal(size=(4, )), ["right"]),
    }
    write_snapshot(name, tensors)
    read = read_snapshot(name)
    assert list(read) == ["a", "b"]
    for key, tensor in tensors.items():
        assert read[key].axes == tensor.axes
        assert np.array_equal(read[key].data, tensor.data)


def test_snapshot_header_is_yaml(tmp_path):
    name = str(tmp_path / "cell.zms")
    write_snapshot(name, {"c": Tensor(np.arange(6.0).reshape(2, 3),
                                      ["x", "y"])})
    with open(name, "rb") as file:
        header = file.readline().decode("utf-8")
    assert "row-major" in header
    assert "f64" in header


def test_truncated_snapshot(tmp_path):
    name = str(tmp_path / "cell.zms")
    write_snapshot(name, {"c": Tensor(np.ones((2, 2)), ["x", "y"])})
    with open(name, "rb") as file:
        content = file.read()
    with open(name, "wb") as file:
        file.write(content[:-8])
    with pytest.raises(TensorShapeError):
        read_snapshot(name)
