"""
Tensor snapshot files. Each record is a one line YAML header
{name, axes, shape, dtype: f64, order: row-major} followed by
the entries as little endian 64 bit floats.
"""
from typing import Dict, Mapping
import numpy as np
import yaml
from loguru import logger
from zeromode.exceptions import TensorShapeError
from zeromode.tensors import Tensor

DTYPE = "f64"
ORDER = "row-major"


def write_snapshot(path: str, tensors: Mapping[str, Tensor]) -> None:
    """
    Write named tensors to a snapshot file.

        Args:
            path (str): file name
            tensors (dict): tensors indexed by name
    """
    with open(path, "wb") as file:
        for name, tensor in tensors.items():
            header = {
                "name": str(name),
                "axes": list(tensor.axes),
                "shape": [int(length) for length in tensor.shape],
                "dtype": DTYPE,
                "order": ORDER,
            }
            line = yaml.safe_dump(header,
                                  default_flow_style=True,
                                  width=float("inf")).strip()
            file.write(line.encode("utf-8") + b"\n")
            file.write(tensor.data.astype("<f8").tobytes(order="C"))
    logger.info("Snapshot with {} tensors written to {}".format(
        len(tensors), path))


def read_snapshot(path: str) -> Dict[str, Tensor]:
    """
    Read every record of a snapshot file.

        Args:
            path (str): file name

        Returns:
            tensors (dict): tensors indexed by name
    """
    tensors = {}
    with open(path, "rb") as file:
        while True:
            line = file.readline()
            if not line:
                break
            header = yaml.safe_load(line.decode("utf-8"))
            if header.get("dtype") != DTYPE or header.get("order") != ORDER:
                raise TensorShapeError(
                    "Unsupported snapshot record {}".format(header))
            shape = tuple(header["shape"])
            count = int(np.prod(shape, dtype=np.int64))
            payload = file.read(8 * count)
            if len(payload) != 8 * count:
                raise TensorShapeError("Truncated record {}".format(
                    header["name"]))
            data = np.frombuffer(payload, dtype="<f8").reshape(shape)
            tensors[header["name"]] = Tensor(data, header["axes"])
    return tensors
