"""
Init file for data module
"""
from .constants import Constants
from .truncation_method import TruncationMethod
from .run_command import RunCommand
from .default_configuration import (
    RunParams,
    RunDefaultParams,
    ZmtDefaultParams,
    AlsDefaultParams,
)
