"""
Init file for evolution module
"""
from .model import (
    ModelParams,
    PlaquetteMPO,
    model_operators,
    build_plaquette_mpo,
    electric_operator,
    kron_all,
)
from .unit_cell import (
    UnitCell,
    CELL_BONDS,
    SITE_AXES,
    SITE_NAMES,
    initial_state,
    electric_half_step,
    torus_network,
    torus_state,
)
from .plaquette import (
    AlsOptions,
    ErrorRecord,
    Plaquette,
    PlaquetteOptions,
    PLAQUETTES,
    SIDES,
    apply_and_truncate_plaquette,
    apply_mpo,
    optimize_bond,
    plaquette_network,
    restore_cell,
    truncation_delta,
    truncation_factory,
)
from .trotter import Trajectory, trotter_step, evolve, number_of_steps
