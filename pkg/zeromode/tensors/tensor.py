"""
Dense real tensor with labelled axes
"""
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple
import numpy as np
from zeromode.exceptions import ConfigurationError, TensorShapeError


class Tensor():
    """
    Dense real array whose axes carry unique string labels.
    Data is kept in row-major layout over the declared axis order.
    """
    def __init__(self, data, axes: Sequence[str]):
        """
        Args:
            data (array_like): real entries of the tensor
            axes (list): one unique label per axis
        """
        self.data = data
        self.axes = axes

    @property
    def data(self) -> np.ndarray:
        """
        Returns:
            Entries of the tensor as a float64 array
        """
        return self._data

    @data.setter
    def data(self, values) -> None:
        """
        Verify that the entries are real and finite

        Args:
            values (array_like): entries of the tensor
        """
        if np.iscomplexobj(values):
            raise TensorShapeError("Tensors must be real")
        array = np.array(values, dtype=np.float64, order="C")
        if not np.all(np.isfinite(array)):
            raise TensorShapeError("Tensor has non finite entries")
        self._data = array

    @property
    def axes(self) -> Tuple[str, ...]:
        """
        Returns:
            Labels of the axes
        """
        return self._axes

    @axes.setter
    def axes(self, labels: Sequence[str]) -> None:
        """
        Verify that there is one unique label per axis

        Args:
            labels (list): axis labels
        """
        labels = tuple(labels)
        if len(labels) != self._data.ndim:
            raise TensorShapeError(
                "Expected {} labels, received {}".format(
                    self._data.ndim, len(labels)))
        if len(set(labels)) != len(labels):
            raise TensorShapeError(
                "Duplicated axis labels: {}".format(labels))
        self._axes = labels

    @property
    def shape(self) -> Tuple[int, ...]:
        """
        Returns:
            Length of each axis
        """
        return self._data.shape

    @property
    def size(self) -> int:
        """
        Returns:
            Number of entries
        """
        return self._data.size

    def dim(self, label: str) -> int:
        """
        Returns the length of an axis
        """
        return self.shape[self.index(label)]

    def index(self, label: str) -> int:
        """
        Returns the position of an axis
        """
        try:
            return self._axes.index(label)
        except ValueError:
            raise TensorShapeError("Axis {} not in {}".format(
                label, self._axes))

    def transpose(self, axes: Sequence[str]) -> "Tensor":
        """
        Reorder the axes.

            Args:
                axes (list): the new order, a permutation of the labels

            Returns:
                tensor (Tensor): transposed copy
        """
        if sorted(axes) != sorted(self._axes):
            raise TensorShapeError("{} is not a permutation of {}".format(
                axes, self._axes))
        permutation = [self.index(label) for label in axes]
        return Tensor(np.transpose(self._data, permutation), axes)

    def rename(self, mapping: Dict[str, str]) -> "Tensor":
        """
        Returns a tensor with some labels replaced
        """
        labels = [mapping.get(label, label) for label in self._axes]
        return Tensor(self._data, labels)

    def norm(self) -> float:
        """
        Frobenius norm
        """
        return float(np.linalg.norm(self._data))

    def scale(self, factor: float) -> "Tensor":
        """
        Returns the tensor multiplied by a scalar
        """
        return Tensor(factor * self._data, self._axes)

    def __repr__(self):
        return "Tensor(axes={}, shape={})".format(self._axes, self.shape)


class FusionRecord(NamedTuple):
    """
    Remembers the members of a fused axis
    """

    label: str
    members: Tuple[str, ...]
    dims: Tuple[int, ...]


def identity(dim: int, axes: Sequence[str]) -> Tensor:
    """
    Identity matrix as a tensor with two axes
    """
    return Tensor(np.eye(dim), axes)


def contract(a: Tensor, b: Tensor, pairs: Iterable[Tuple[str,
                                                          str]]) -> Tensor:
    """
    Sum over paired axes of two tensors.

        Args:
            a (Tensor): first tensor
            b (Tensor): second tensor
            pairs (list): pairs (axis of a, axis of b) summed over

        Returns:
            result (Tensor): unpaired axes of a followed by the
                             unpaired axes of b
    """
    pairs = list(pairs)
    axes_a = [a.index(label_a) for label_a, _ in pairs]
    axes_b = [b.index(label_b) for _, label_b in pairs]
    for label_a, label_b in pairs:
        if a.dim(label_a) != b.dim(label_b):
            raise TensorShapeError(
                "Cannot contract {} of length {} with {} of length {}".format(
                    label_a, a.dim(label_a), label_b, b.dim(label_b)))

    free_a = [label for label in a.axes if a.index(label) not in axes_a]
    free_b = [label for label in b.axes if b.index(label) not in axes_b]
    labels = free_a + free_b
    if len(set(labels)) != len(labels):
        raise TensorShapeError(
            "Contraction leaves duplicated labels {}".format(labels))

    data = np.tensordot(a.data, b.data, axes=(axes_a, axes_b))
    return Tensor(data, labels)


def shared_labels(a: Tensor, b: Tensor) -> List[str]:
    """
    Labels present in both tensors, in the order of a
    """
    return [label for label in a.axes if label in b.axes]


def contract_shared(a: Tensor, b: Tensor) -> Tensor:
    """
    Contracts every label shared by a and b
    """
    return contract(a, b, [(label, label) for label in shared_labels(a, b)])


def fuse(t: Tensor,
         groups: Sequence[Sequence[str]],
         labels: Sequence[str] = None) -> Tuple[Tensor, List[FusionRecord]]:
    """
    Merge groups of axes into single axes. Inside a group the
    index runs in row-major order over the declared members.

        Args:
            t (Tensor): tensor to be fused
            groups (list): ordered partition of the axes of t
            labels (list): label of each fused axis. A single member
                           group keeps its label by default, larger
                           groups are joined with '&'.

        Returns:
            fused (Tensor): tensor with one axis per group

            records (list): records needed by split
    """
    members = [label for group in groups for label in group]
    if sorted(members) != sorted(t.axes):
        raise ConfigurationError(
            "Groups {} do not cover the axes {} exactly once".format(
                groups, t.axes))
    if labels is None:
        labels = ["&".join(group) for group in groups]
    if len(labels) != len(groups):
        raise ConfigurationError("One label per group is required")

    ordered = t.transpose(members)
    records = []
    shape = []
    for label, group in zip(labels, groups):
        dims = tuple(t.dim(member) for member in group)
        records.append(FusionRecord(label, tuple(group), dims))
        shape.append(int(np.prod(dims, dtype=np.int64)))
    return Tensor(ordered.data.reshape(shape), labels), records


def split(t: Tensor, records: Sequence[FusionRecord]) -> Tensor:
    """
    Inverse of fuse. Fused axes are replaced, in place,
    by their members.

        Args:
            t (Tensor): fused tensor
            records (list): records produced by fuse

        Returns:
            tensor (Tensor): tensor with the member axes restored
    """
    by_label = {record.label: record for record in records}
    labels = []
    shape = []
    for label, length in zip(t.axes, t.shape):
        if label not in by_label:
            labels.append(label)
            shape.append(length)
            continue
        record = by_label[label]
        if int(np.prod(record.dims, dtype=np.int64)) != length:
            raise TensorShapeError(
                "Axis {} of length {} cannot be split into {}".format(
                    label, length, record.dims))
        labels.extend(record.members)
        shape.extend(record.dims)
    return Tensor(t.data.reshape(shape), labels)
