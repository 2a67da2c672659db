# File: wave_field.py
# Description: Discrete solution row at one time level
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from advection_solver.errors import DomainError

if TYPE_CHECKING:
    from .discretization import Grid1D


@dataclass(frozen=True, eq=False)
class WaveField:
    """
    Values of the solution at the nx + 1 grid points at one time.

    The values are stored as a read-only copy. Non-finite values are only accepted together with
    the blown_up marker.
    """
    grid: 'Grid1D'
    time: float
    values: np.ndarray
    blown_up: bool = False

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=float)
        if values.shape != (self.grid.point_count,):
            raise DomainError(f"WaveField needs {self.grid.point_count} values, got shape {values.shape}")
        if not self.blown_up and not np.all(np.isfinite(values)):
            raise DomainError("WaveField values must be finite unless the field is marked blown up")

        values.flags.writeable = False
        object.__setattr__(self, 'values', values)
        object.__setattr__(self, 'time', float(self.time))

    @property
    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.values)))

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    def at_time(self, time: float) -> 'WaveField':
        """Same values, re-stamped with another time."""
        return WaveField(self.grid, time, self.values, self.blown_up)
