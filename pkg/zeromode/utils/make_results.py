"""
Functions that write the result files of a run: trajectories
as CSV and the run metadata as a JSON sidecar
"""
import json
import os
import platform
from datetime import datetime, timezone
from typing import Dict, Iterable, List, Optional
import numpy as np
import pandas as pd
import scipy
from loguru import logger
import zeromode
from zeromode.data import TruncationMethod

RECORD_COLUMNS = [
    "step", "beta", "bond", "method", "delta_initial", "delta_final",
    "cg_iters", "fallback"
]


def records_to_frame(records: Iterable) -> pd.DataFrame:
    """
    Table of error records with the trajectory columns
    """
    rows = [tuple(record) for record in records]
    return pd.DataFrame(rows, columns=RECORD_COLUMNS)


def write_trajectory(records: Iterable, name: str) -> pd.DataFrame:
    """
    Write error records to a CSV file.

        Args:
            records (list): ErrorRecords of one or more runs
            name (str): path of the file

        Returns:
            frame (pd.DataFrame): the table that was written
    """
    frame = records_to_frame(records)
    frame.to_csv(name, index=False, float_format="%.12e")
    logger.info("Trajectory with {} records written to {}".format(
        len(frame), name))
    return frame


def average_errors(records: Iterable) -> pd.DataFrame:
    """
    Mean and maximum of delta over the bonds of each step,
    one row per method and step.
    """
    frame = records_to_frame(records)
    grouped = frame.groupby(["method", "step", "beta"], sort=True)
    summary = grouped.agg(delta_initial_mean=("delta_initial", "mean"),
                          delta_final_mean=("delta_final", "mean"),
                          delta_final_max=("delta_final", "max"),
                          fallbacks=("fallback", "sum"))
    return summary.reset_index()


def compare_trajectories(records: Iterable) -> pd.DataFrame:
    """
    Per step average delta_final of both methods side by side,
    with the ratio svd / zmt
    """
    averages = average_errors(records)
    table = averages.pivot(index=["step", "beta"],
                           columns="method",
                           values="delta_final_mean").reset_index()
    zmt = TruncationMethod.zmt.value
    svd = TruncationMethod.svd.value
    table = table.rename(columns={
        zmt: "delta_zmt",
        svd: "delta_svd"
    })
    table.columns.name = None
    with np.errstate(divide="ignore", invalid="ignore"):
        table["ratio"] = table["delta_svd"] / table["delta_zmt"]
    return table[["step", "beta", "delta_zmt", "delta_svd", "ratio"]]


def accumulated_error(records: Iterable) -> dict:
    """
    Summary statistics of one or more trajectories.

        Args:
            records (list): ErrorRecords

        Returns:
            summary (dict): per method the mean over steps of the
                            bond averaged delta_final, its maximum,
                            the number of fallbacks and, when both
                            methods are present, the beta averaged
                            ratio svd / zmt and the fraction of steps
                            where zmt is not worse.
    """
    records = list(records)
    if not records:
        return {}
    averages = average_errors(records)
    summary = {}
    for method, group in averages.groupby("method", sort=True):
        summary[str(method)] = {
            "steps": int(len(group)),
            "delta_final_mean": float(group["delta_final_mean"].mean()),
            "delta_final_max": float(group["delta_final_max"].max()),
            "delta_initial_mean": float(group["delta_initial_mean"].mean()),
            "fallbacks": int(group["fallbacks"].sum()),
        }
    methods = set(averages["method"])
    if {TruncationMethod.zmt.value, TruncationMethod.svd.value} <= methods:
        table = compare_trajectories(records)
        zmt_mean = float(table["delta_zmt"].mean())
        svd_mean = float(table["delta_svd"].mean())
        summary["ratio"] = svd_mean / zmt_mean if zmt_mean > 0 else None
        summary["zmt_not_worse_fraction"] = float(
            np.mean(table["delta_zmt"] <= table["delta_svd"]))
    return summary


def versions() -> Dict[str, str]:
    """
    Versions of the packages that produced the results
    """
    return {
        "zeromode": zeromode.__version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "pandas": pd.__version__,
        "python": platform.python_version(),
    }


def write_sidecar(name: str,
                  config: dict,
                  summary: dict,
                  failed_step: Optional[dict] = None,
                  outputs: Optional[List[str]] = None) -> dict:
    """
    Write the JSON metadata of a run.

        Args:
            name (str): path of the file
            config (dict): resolved configuration
            summary (dict): summary statistics
            failed_step (dict): step and beta of a numerical failure
            outputs (list): files written by the run

        Returns:
            content (dict): what was written
    """
    content = {
        "config": config,
        "seed": config.get("seed"),
        "versions": versions(),
        "summary": summary,
        "failed_step": failed_step,
        "outputs": outputs or [],
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }
    with open(name, "w") as file:
        json.dump(content, file, indent=2, sort_keys=True, default=_to_json)
    logger.info("Sidecar written to {}".format(name))
    return content


def output_file(folder: str, name: str) -> str:
    """
    Path of an output file, creating the folder if needed
    """
    os.makedirs(folder, exist_ok=True)
    return os.path.join(folder, name)


def _to_json(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError("{} is not serializable".format(type(value).__name__))
