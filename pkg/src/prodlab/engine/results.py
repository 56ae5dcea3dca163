"""Persisting experiment results: CSV tables plus a metadata sidecar."""

from __future__ import annotations

import csv
import json
import platform
from pathlib import Path
from typing import Any

import numpy as np
import scipy

from .. import __version__
from ..core.config import config_to_dict
from ..exceptions import ResultWriteError
from ..models import ExperimentResult, SampleSummary
from .logger import RunLogger

METADATA_FILE = "metadata.json"

# CSV file names per table key
TABLE_FILES = {
    "samples": "samples.csv",
    "covariance": "covariance.csv",
    "trajectory": "trajectory.csv",
    "scaled_path": "scaled_path.csv",
    "extremal": "extremal.csv",
    "candidate": "candidate.csv",
    "check": "check.csv",
}


def format_cell(value: Any) -> str:
    """Stable text form of one CSV cell."""
    if isinstance(value, bool | np.bool_):
        return "true" if value else "false"
    if isinstance(value, int | np.integer):
        return str(int(value))
    if isinstance(value, float | np.floating):
        return format(float(value), ".17g")
    return str(value)


def write_table(path: Path, header: list[str], rows: list[tuple]) -> None:
    with open(path, "w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])


def _summary_dict(summary: SampleSummary) -> dict:
    return {
        "count": summary.count,
        "mean": summary.mean,
        "variance": summary.variance,
        "stderr": summary.stderr,
        "quantiles": {f"{q:.2f}": v for q, v in summary.quantiles.items()},
    }


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    return value


def build_metadata(result: ExperimentResult) -> dict:
    """Everything needed to rerun the experiment, plus its headline numbers."""
    meta = {
        "config": config_to_dict(result.config),
        "seed": result.provenance,
        "versions": {
            "prodlab": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
            "python": platform.python_version(),
        },
        "started_at": result.started_at,
        "wall_seconds": result.wall_seconds,
        "summaries": [_summary_dict(s) for s in result.summaries],
        "ks_distances": result.ks_distances,
        "metrics": result.metrics,
        "files": sorted(TABLE_FILES[name] for name in result.tables),
    }
    return _jsonable(meta)


def write_result(
    result: ExperimentResult, out_dir: Path, logger: RunLogger | None = None
) -> list[Path]:
    """Write every table of ``result`` as CSV and the metadata sidecar.

    Returns:
        Paths of the written files

    Raises:
        ResultWriteError: If the directory or a file cannot be written
    """
    written: list[Path] = []
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for name, (header, rows) in result.tables.items():
            path = out_dir / TABLE_FILES[name]
            write_table(path, header, rows)
            written.append(path)
            if logger:
                logger.info(f"wrote {path.name} ({len(rows)} rows)")
        meta_path = out_dir / METADATA_FILE
        with open(meta_path, "w") as f:
            json.dump(build_metadata(result), f, indent=2, sort_keys=True)
            f.write("\n")
        written.append(meta_path)
    except OSError as e:
        raise ResultWriteError(f"Failed to write results to '{out_dir}': {e}") from e
    return written
