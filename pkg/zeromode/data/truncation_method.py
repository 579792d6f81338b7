"""
Bond truncation methods
supported by the CLI
"""
from enum import Enum, unique


@unique
class TruncationMethod(Enum):
    """
    Enum type for the bond truncation methods
    """

    zmt = "zmt"  # Zero-mode truncation
    svd = "svd"  # QR split followed by a truncated SVD

    def __str__(self):
        return str(self.name)

    @staticmethod
    def to_list():
        """
        Generate list of available methods
        """
        return list(map(lambda element: element.value, TruncationMethod))
