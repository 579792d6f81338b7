"""
Init file for utils module
"""
from .cli_messages import welcome_message, end_message, echo_table
from .run_config import RunConfig, OUTPUT_DIR_VARIABLE
from .snapshot import write_snapshot, read_snapshot
from .make_results import (
    RECORD_COLUMNS,
    records_to_frame,
    write_trajectory,
    average_errors,
    compare_trajectories,
    accumulated_error,
    versions,
    write_sidecar,
    output_file,
)
