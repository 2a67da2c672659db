# File: run_result.py
# Description: Snapshot series and diagnostics manifest of a run, and run comparisons
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from advection_solver.analysis.norms import DriftDirection
from advection_solver.grid.wave_field import WaveField
from .run_config import RunConfig


@dataclass(frozen=True)
class SnapshotRecord:
    """
    Diagnostics of one persisted row. Oracle norms are None when no oracle value exists.
    """
    step: int
    time: float
    tv: float
    l2_vs_oracle: Optional[float] = None
    linf_vs_oracle: Optional[float] = None

    def as_dict(self) -> Dict[str, Any]:
        return {
            'step': self.step,
            'time': self.time,
            'tv': self.tv,
            'l2_vs_oracle': self.l2_vs_oracle,
            'linf_vs_oracle': self.linf_vs_oracle,
        }


@dataclass(frozen=True)
class RunManifest:
    """
    Diagnostics record of a run.
    """
    config: RunConfig
    nu_max: float
    oracle_available: bool
    snapshots: Tuple[SnapshotRecord, ...]
    blown_up: bool
    final_time_reached: float
    drift_direction: DriftDirection

    def as_dict(self) -> Dict[str, Any]:
        """
        Convert the manifest to a dictionary for JSON serialization, keys in fixed order.

        :return: Dictionary representation of the manifest
        """
        return {
            'config': self.config.as_dict(),
            'nu_max': self.nu_max,
            'oracle_available': self.oracle_available,
            'snapshots': [record.as_dict() for record in self.snapshots],
            'blown_up': self.blown_up,
            'final_time_reached': self.final_time_reached,
            'drift_direction': self.drift_direction.value,
        }


@dataclass(frozen=True)
class RunResult:
    """
    Persisted rows of a run, their step numbers, and the manifest.
    """
    snapshots: Tuple[WaveField, ...]
    steps: Tuple[int, ...]
    manifest: RunManifest

    @property
    def final_field(self) -> WaveField:
        return self.snapshots[-1]

    @property
    def tv_sequence(self) -> List[float]:
        return [record.tv for record in self.manifest.snapshots]


@dataclass(frozen=True)
class ComparisonRow:
    """
    Two runs at one common persisted step.
    """
    step: int
    time: float
    tv_a: float
    tv_b: float
    l2_diff: float
    l2_a: Optional[float]
    linf_a: Optional[float]
    l2_b: Optional[float]
    linf_b: Optional[float]


@dataclass(frozen=True)
class Comparison:
    """
    Both runs and their per-snapshot comparison.
    """
    result_a: RunResult
    result_b: RunResult
    rows: Tuple[ComparisonRow, ...]
