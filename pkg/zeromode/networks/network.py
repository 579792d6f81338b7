"""
Tensor network container
"""
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple
from zeromode.exceptions import InvalidCutError, TensorShapeError
from zeromode.tensors import Tensor, contract, contract_shared

BRA_SUFFIX = "*"


def bra_label(label: str) -> str:
    """
    Label used on the conjugate layer
    """
    return label + BRA_SUFFIX


class TensorNetwork():
    """
    Named tensors. A label shared by two tensors is a bond,
    a label carried by a single tensor is an open leg.
    """
    def __init__(self, tensors: Mapping[str, Tensor]):
        """
        Args:
            tensors (dict): tensors indexed by name. The insertion
                            order fixes the orientation of each bond.
        """
        self.tensors = tensors

    @property
    def tensors(self) -> Dict[str, Tensor]:
        """
        Returns:
            Tensors indexed by name
        """
        return self._tensors

    @tensors.setter
    def tensors(self, tensors: Mapping[str, Tensor]) -> None:
        """
        Verify that no label is shared by more than two tensors
        and that both sides of a bond have the same length

        Args:
            tensors (dict): tensors indexed by name
        """
        owners = {}
        for name, tensor in tensors.items():
            for label in tensor.axes:
                owners.setdefault(label, []).append(name)
        for label, names in owners.items():
            if len(names) > 2:
                raise TensorShapeError(
                    "Label {} is shared by {} tensors".format(label, names))
            if len(names) == 2:
                first, second = names
                if tensors[first].dim(label) != tensors[second].dim(label):
                    raise TensorShapeError(
                        "Bond {} has lengths {} and {}".format(
                            label, tensors[first].dim(label),
                            tensors[second].dim(label)))
        self._owners = owners
        self._tensors = dict(tensors)

    @property
    def names(self) -> List[str]:
        """
        Returns:
            Names of the tensors in insertion order
        """
        return list(self._tensors)

    def __getitem__(self, name: str) -> Tensor:
        return self._tensors[name]

    def __len__(self):
        return len(self._tensors)

    def bonds(self) -> List[str]:
        """
        Labels shared by two tensors
        """
        return [label for label, names in self._owners.items() if len(names) == 2]

    def is_open(self, label: str) -> bool:
        """
        True if the label belongs to a single tensor
        """
        return len(self._owners.get(label, [])) == 1

    def open_labels(self, name: str = None) -> List[str]:
        """
        Open legs of one tensor, or of the whole network
        """
        names = [name] if name is not None else self.names
        return [
            label for current in names for label in self._tensors[current].axes
            if self.is_open(label)
        ]

    def bond_dim(self, label: str) -> int:
        """
        Length of a bond
        """
        first, _ = self.endpoints(label)
        return self._tensors[first].dim(label)

    def endpoints(self, label: str) -> Tuple[str, str]:
        """
        The two tensors joined by a bond, in insertion order
        """
        names = self._owners.get(label, [])
        if len(names) != 2:
            raise InvalidCutError(
                "Bond {} must join exactly two tensors, found {}".format(
                    label, names))
        return names[0], names[1]

    def neighbours(self, name: str, without: str = None) -> List[str]:
        """
        Tensors sharing a bond with the given one
        """
        found = []
        for label in self._tensors[name].axes:
            if label == without:
                continue
            for other in self._owners[label]:
                if other != name and other not in found:
                    found.append(other)
        return found

    def is_connected(self, without: str = None) -> bool:
        """
        True when every tensor can be reached from the first one.

            Args:
                without (str): bond ignored during the search
        """
        if not self._tensors:
            return True
        seen = {self.names[0]}
        stack = [self.names[0]]
        while stack:
            current = stack.pop()
            for other in self.neighbours(current, without=without):
                if other not in seen:
                    seen.add(other)
                    stack.append(other)
        return len(seen) == len(self._tensors)

    def replace(self, name: str, tensor: Tensor) -> "TensorNetwork":
        """
        Returns a network with one tensor replaced
        """
        return self.update({name: tensor})

    def update(self, tensors: Mapping[str, Tensor]) -> "TensorNetwork":
        """
        Returns a network with several tensors replaced at once,
        so that a bond may change length on both sides
        """
        updated = dict(self._tensors)
        updated.update(tensors)
        return TensorNetwork(updated)

    def rename_bond(self, label: str,
                    new_labels: Tuple[str, str]) -> "TensorNetwork":
        """
        Gives the two stumps of a bond different labels, which
        cuts the bond.
        """
        first, second = self.endpoints(label)
        tensors = dict(self._tensors)
        tensors[first] = tensors[first].rename({label: new_labels[0]})
        tensors[second] = tensors[second].rename({label: new_labels[1]})
        return TensorNetwork(tensors)

    def contract_all(self, names: Iterable[str] = None) -> Tensor:
        """
        Contract tensors over the bonds between them.

            Args:
                names (list): subset of tensors, the whole network
                              by default

            Returns:
                result (Tensor): tensor carrying the remaining labels
        """
        names = list(names) if names is not None else self.names
        return contract_sequence([self._tensors[name] for name in names])

    def overlap(self,
                bra: "TensorNetwork" = None,
                keep: Sequence[str] = (),
                exclude: Sequence[str] = ()) -> Tensor:
        """
        Double layer contraction <bra|self>. Open legs are traced
        against the same legs of the bra, which closes the network
        with identities.

            Args:
                bra (TensorNetwork): conjugate layer, self by default. It
                                     must carry the same labels.
                keep (list): open legs left uncontracted
                exclude (list): tensors left out. Bonds to them stay
                                open on both layers.

            Returns:
                result (Tensor): scalar tensor, or a tensor with every
                                 kept label on the ket layer and its
                                 starred copy on the bra layer
        """
        bra = self if bra is None else bra
        included = [name for name in self.names if name not in exclude]
        layers = []
        for name in included:
            ket = self._tensors[name]
            conjugate = bra[name]
            traced = [
                label for label in ket.axes
                if self.is_open(label) and label not in keep
            ]
            mapping = {
                label: bra_label(label)
                for label in conjugate.axes if label not in traced
            }
            layers.append(
                contract(ket, conjugate.rename(mapping),
                         [(label, label) for label in traced]))
        if not layers:
            return Tensor(1.0, ())
        return contract_sequence(layers)

    def __repr__(self):
        return "TensorNetwork({})".format(
            {name: tensor.shape
             for name, tensor in self._tensors.items()})


def contract_sequence(tensors: Sequence[Tensor]) -> Tensor:
    """
    Contract tensors over their shared labels. The next tensor is
    the one sharing most labels with the partial result.
    """
    if not tensors:
        raise TensorShapeError("Nothing to contract")
    pending = list(tensors)
    result = pending.pop(0)
    while pending:
        counts = [
            len(set(result.axes) & set(tensor.axes)) for tensor in pending
        ]
        best = max(range(len(pending)), key=lambda index: counts[index])
        result = contract_shared(result, pending.pop(best))
    return result
