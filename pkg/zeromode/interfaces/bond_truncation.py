"""
Bond truncation interface
"""
from abc import ABC, abstractmethod
from typing import NamedTuple
from zeromode.networks import TensorNetwork


class TruncationOutcome(NamedTuple):
    """
    Network with a truncated bond and the
    optimizer statistics of the truncation
    """

    network: TensorNetwork
    cg_iterations: int
    fallback: bool


class BondTruncation(ABC):
    """
    Interface to algorithms that reduce
    the dimension of a bond
    """
    @abstractmethod
    def truncate(self, network: TensorNetwork, bond: str,
                 target: int) -> TruncationOutcome:
        """
        Reduce the bond to the target dimension
        """
