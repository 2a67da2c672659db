# File: output_writer.py
# Description: Snapshot CSV files, manifest.json and comparison tables
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import json
import logging
import os
import re
from typing import List, Optional

from advection_solver.file.file_system import FileSystem
from advection_solver.grid.wave_field import WaveField
from .run_result import Comparison, RunResult

logger = logging.getLogger(__name__)

MANIFEST_FILENAME = 'manifest.json'
COMPARISON_FILENAME = 'comparison.csv'
SNAPSHOT_PATTERN = re.compile(r'^snap_\d{6}\.csv$')
COMPARISON_COLUMNS = ('step', 'time', 'tv_a', 'tv_b', 'l2_diff', 'l2_a', 'linf_a', 'l2_b', 'linf_b')


class OutputWriter:
    """
    Serialization of run results
    """

    @staticmethod
    def format_number(value: Optional[float]) -> str:
        """17 significant digits; empty for missing values."""
        return "" if value is None else format(value, '.17g')

    @staticmethod
    def snapshot_filename(step: int) -> str:
        """
        :param step: int, the time step
        :return: str, e.g. 'snap_000250.csv' for step 250
        """
        return f"snap_{step:06d}.csv"

    @staticmethod
    def snapshot_csv(field: WaveField) -> str:
        """
        Render a field as CSV with header 'x,phi' and one row per grid point.
        """
        lines = ["x,phi"]
        for x, phi in zip(field.grid.coordinates, field.values):
            lines.append(f"{OutputWriter.format_number(float(x))},{OutputWriter.format_number(float(phi))}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def manifest_json(result: RunResult) -> str:
        return json.dumps(result.manifest.as_dict(), indent=2) + "\n"

    @staticmethod
    def write_outputs(result: RunResult, out_dir: str) -> List[str]:
        """
        Write one CSV per persisted row and manifest.json into out_dir.

        Snapshot files left in out_dir by an earlier run are removed first, so the directory holds
        exactly this run's files. Identical results produce byte-identical files.

        :param result: RunResult, the run
        :param out_dir: str, output directory, created when missing
        :return: List[str], paths written, manifest last

        :raises IoError: If the directory or a file cannot be written.
        """
        FileSystem.ensure_directory(out_dir)
        for filename in FileSystem.list_files(out_dir):
            if SNAPSHOT_PATTERN.match(filename):
                FileSystem.remove_file(os.path.join(out_dir, filename))

        written = []
        for step, field in zip(result.steps, result.snapshots):
            path = os.path.join(out_dir, OutputWriter.snapshot_filename(step))
            FileSystem.write_text_file(path, OutputWriter.snapshot_csv(field))
            written.append(path)

        manifest_path = os.path.join(out_dir, MANIFEST_FILENAME)
        FileSystem.write_text_file(manifest_path, OutputWriter.manifest_json(result))
        written.append(manifest_path)

        logger.info("Wrote %d snapshots and %s to %s", len(result.snapshots), MANIFEST_FILENAME, out_dir)
        return written

    @staticmethod
    def comparison_csv(comparison: Comparison) -> str:
        lines = [",".join(COMPARISON_COLUMNS)]
        for row in comparison.rows:
            values = [row.time, row.tv_a, row.tv_b, row.l2_diff, row.l2_a, row.linf_a, row.l2_b, row.linf_b]
            lines.append(",".join([str(row.step)] + [OutputWriter.format_number(value) for value in values]))
        return "\n".join(lines) + "\n"

    @staticmethod
    def write_comparison(comparison: Comparison, out_dir: str) -> List[str]:
        """
        Write both runs into out_dir/a and out_dir/b, and comparison.csv into out_dir.

        :param comparison: Comparison, the compared runs
        :param out_dir: str, output directory, created when missing
        :return: List[str], paths written

        :raises IoError: If a directory or file cannot be written.
        """
        FileSystem.ensure_directory(out_dir)
        written = OutputWriter.write_outputs(comparison.result_a, os.path.join(out_dir, 'a'))
        written += OutputWriter.write_outputs(comparison.result_b, os.path.join(out_dir, 'b'))

        path = os.path.join(out_dir, COMPARISON_FILENAME)
        FileSystem.write_text_file(path, OutputWriter.comparison_csv(comparison))
        written.append(path)
        return written
