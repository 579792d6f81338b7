"""
Init file for networks module
"""
from .network import TensorNetwork, contract_sequence, bra_label
from .loop_plaquette import (
    LoopPlaquette,
    make_virtual_loop,
    make_planted_plaquette,
    make_rng,
    full_state,
    fidelity,
    ring_bond,
    physical_label,
)
