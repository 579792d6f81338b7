"""
Commands of the zeromode cli
"""
from .toy import toy
from .evolve import evolve
from .compare import compare
from .gauge_probe import gauge_probe
from .grad_check import grad_check
