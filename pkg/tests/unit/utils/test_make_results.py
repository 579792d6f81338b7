"""
Test the functions that write trajectories and sidecars
"""
import json
import os
import numpy as np
import pandas as pd
from zeromode.evolution import ErrorRecord
from zeromode.utils import (RECORD_COLUMNS, accumulated_error, average_errors,
                            compare_trajectories, output_file, write_sidecar,
                            write_trajectory)


def make_records():
    """
    Two steps with two bonds for both methods, svd being
    four times worse than zmt
    """
    records = []
    for step, beta in ((1, 0.01), (2, 0.02)):
        for bond, scale in (("abcd:a'-b'", 1.0), ("abcd:b'-c'", 3.0)):
            records.append(
                ErrorRecord(step, beta, bond, "zmt", 2e-3 * scale,
                            1e-3 * scale * step, 4, False))
            records.append(
                ErrorRecord(step, beta, bond, "svd", 8e-3 * scale,
                            4e-3 * scale * step, 0, False))
    return records


def test_trajectory_file(tmp_path):
    name = str(tmp_path / "trajectory.csv")
    frame = write_trajectory(make_records(), name)
    with open(name, "r") as file:
        header = file.readline().strip()
    assert header == ",".join(RECORD_COLUMNS)
    written = pd.read_csv(name)
    assert len(written) == len(frame) == 8
    assert np.allclose(written["delta_final"], frame["delta_final"],
                       rtol=1e-11)
    assert list(written["bond"][:2]) == ["abcd:a'-b'", "abcd:a'-b'"]


def test_average_errors():
    averages = average_errors(make_records())
    zmt = averages[averages["method"] == "zmt"]
    assert list(zmt["step"]) == [1, 2]
    assert np.allclose(zmt["delta_final_mean"], [2e-3, 4e-3])
    assert np.allclose(zmt["delta_final_max"], [3e-3, 6e-3])
    assert np.allclose(zmt["delta_initial_mean"], [4e-3, 4e-3])
    assert list(zmt["fallbacks"]) == [0, 0]


def test_compare_trajectories():
    table = compare_trajectories(make_records())
    assert list(table.columns) == [
        "step", "beta", "delta_zmt", "delta_svd", "ratio"
    ]
    assert np.allclose(table["ratio"], 4.0)


def test_accumulated_error():
    summary = accumulated_error(make_records())
    assert summary["zmt"]["steps"] == 2
    assert np.isclose(summary["zmt"]["delta_final_mean"], 3e-3)
    assert np.isclose(summary["svd"]["delta_final_max"], 2.4e-2)
    assert np.isclose(summary["ratio"], 4.0)
    assert summary["zmt_not_worse_fraction"] == 1.0


def test_accumulated_error_of_one_method():
    records = [record for record in make_records() if record.method == "svd"]
    summary = accumulated_error(records)
    assert list(summary) == ["svd"]
    assert accumulated_error([]) == {}


def test_sidecar(tmp_path):
    name = str(tmp_path / "run.json")
    config = {"command": "evolve", "seed": 11, "D": 2}
    summary = {"delta": np.float64(0.5), "steps": np.int64(3)}
    write_sidecar(name, config, summary, outputs=["evolve_zmt.csv"])
    with open(name, "r") as file:
        content = json.load(file)
    assert content["seed"] == 11
    assert content["config"] == config
    assert content["summary"] == {"delta": 0.5, "steps": 3}
    assert content["failed_step"] is None
    assert content["outputs"] == ["evolve_zmt.csv"]
    assert set(content["versions"]) == {
        "zeromode", "numpy", "scipy", "pandas", "python"
    }
    assert "timestamp" in content


def test_output_file_creates_the_folder(tmp_path):
    folder = str(tmp_path / "results" / "run")
    name = output_file(folder, "toy.csv")
    assert os.path.isdir(folder)
    assert name == os.path.join(folder, "toy.csv")
