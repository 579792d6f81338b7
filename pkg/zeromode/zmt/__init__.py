"""
Init file for zmt module
"""
from .environment import BondEnvironment, build_metric
from .modes import ModeBasis, lowest_modes
from .cost import (
    TruncationError,
    ZCandidate,
    dominant_real_eigenpair,
    truncation_error,
    gradient_full,
    gradient_subspace,
)
from .optimizer import ZmtOptions, evaluate, initial_candidate, optimize_candidate
from .truncation import (
    TruncationFactors,
    CutReport,
    truncate_bond,
    apply_truncation,
    absorb_bond_factors,
    insert_gauge,
    zmt_cut,
    reduce_iteratively,
    sorted_spectrum,
)
from .gauge import GaugeProbeResult, gauge_probe, random_gauge
from .diagnostics import (
    GradientCheck,
    central_difference,
    random_metric,
    random_candidate,
    subspace_gradient_check,
)
