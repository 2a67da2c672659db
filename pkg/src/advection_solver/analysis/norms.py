# File: norms.py
# Description: Error norms, total variation and drift of discrete fields
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from advection_solver.errors import GridMismatch
from advection_solver.grid.wave_field import WaveField


class DriftDirection(Enum):
    """
    Enumeration for the displacement of a field's center of mass.
    """
    LEFT = 'left'
    RIGHT = 'right'
    NONE = 'none'


@dataclass(frozen=True)
class ErrorReport:
    """
    l2 = sqrt(sum((phi - ref)^2) * dx), linf = max |phi - ref|, tv = total variation of phi.
    """
    l2: float
    linf: float
    tv: float


class Norms:
    """
    Norms of discrete fields
    """

    @staticmethod
    def total_variation(field: WaveField) -> float:
        """
        Sum of |phi_{i+1} - phi_i| over the grid.

        :param field: WaveField, the field
        :return: float, the total variation
        """
        return float(np.sum(np.abs(np.diff(field.values))))

    @staticmethod
    def l2_norm(values: np.ndarray, dx: float) -> float:
        """Discrete L2 norm sqrt(sum(v^2) * dx), scaled by max|v| so that squaring cannot overflow."""
        scale = float(np.max(np.abs(values))) if np.size(values) else 0.0
        if scale == 0.0 or not math.isfinite(scale):
            return scale
        return scale * math.sqrt(float(np.sum(np.square(np.asarray(values) / scale))) * dx)

    @staticmethod
    def error_norms(field: WaveField, reference: WaveField) -> ErrorReport:
        """
        Compare a field with a reference on the same grid.

        :param field: WaveField, the computed field
        :param reference: WaveField, the reference (e.g. an oracle field)
        :return: ErrorReport, tv is computed on field alone

        :raises GridMismatch: If the grids differ.
        """
        if field.grid != reference.grid:
            raise GridMismatch(f"Cannot compare fields on {field.grid} and {reference.grid}")

        difference = field.values - reference.values
        return ErrorReport(Norms.l2_norm(difference, field.grid.dx),
                           float(np.max(np.abs(difference))),
                           Norms.total_variation(field))

    @staticmethod
    def center_of_mass(field: WaveField) -> float:
        """
        |phi|-weighted mean coordinate; the grid midpoint for an all-zero field.
        """
        weights = np.abs(field.values)
        total = float(np.sum(weights))
        if total == 0:
            return (field.grid.a + field.grid.b) / 2
        return float(np.sum(weights * field.grid.coordinates)) / total

    @staticmethod
    def drift_direction(first: WaveField, last: WaveField) -> DriftDirection:
        """
        Direction in which the center of mass moved between two fields.

        Displacements below 1e-9 of the domain length count as no drift.
        """
        displacement = Norms.center_of_mass(last) - Norms.center_of_mass(first)
        if abs(displacement) <= 1e-9 * (first.grid.b - first.grid.a):
            return DriftDirection.NONE
        return DriftDirection.RIGHT if displacement > 0 else DriftDirection.LEFT
