"""
Init file for interfaces module
"""
from .bond_truncation import BondTruncation, TruncationOutcome
