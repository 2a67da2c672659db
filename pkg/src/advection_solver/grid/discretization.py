# File: discretization.py
# Description: Spatial and temporal partitions of the computational domain
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import math
from dataclasses import dataclass

import numpy as np

from advection_solver.errors import DomainError, EvalError
from .initial_condition import InitialCondition
from .wave_field import WaveField

MIN_SUBINTERVALS = 3


def _is_integer(value) -> bool:
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


@dataclass(frozen=True)
class Grid1D:
    """
    Uniform partition of [a, b] into nx subintervals, with nx + 1 points a + i*dx.
    """
    a: float
    b: float
    nx: int

    def __post_init__(self) -> None:
        if not _is_integer(self.nx):
            raise DomainError(f"nx must be an integer, got {self.nx!r}")
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"Grid endpoints must be finite, got [{self.a}, {self.b}]")
        if self.b <= self.a:
            raise DomainError(f"Grid requires b > a, got [{self.a}, {self.b}]")
        if self.nx < MIN_SUBINTERVALS:
            raise DomainError(f"Grid requires nx >= {MIN_SUBINTERVALS}, got {self.nx}")

        object.__setattr__(self, 'a', float(self.a))
        object.__setattr__(self, 'b', float(self.b))
        object.__setattr__(self, 'nx', int(self.nx))

    @property
    def dx(self) -> float:
        return (self.b - self.a) / self.nx

    @property
    def point_count(self) -> int:
        return self.nx + 1

    @property
    def coordinates(self) -> np.ndarray:
        """Point coordinates a + i*dx for i in 0..nx."""
        return self.a + np.arange(self.nx + 1) * self.dx

    def coordinate(self, index: int) -> float:
        return self.a + index * self.dx


@dataclass(frozen=True)
class TimeGrid:
    """
    Uniform partition of [0, t_end] into nt steps of length dt.
    """
    t_end: float
    nt: int

    def __post_init__(self) -> None:
        if not _is_integer(self.nt):
            raise DomainError(f"nt must be an integer, got {self.nt!r}")
        if not math.isfinite(self.t_end) or self.t_end <= 0:
            raise DomainError(f"t_end must be positive and finite, got {self.t_end}")
        if self.nt < 1:
            raise DomainError(f"nt must be at least 1, got {self.nt}")

        object.__setattr__(self, 't_end', float(self.t_end))
        object.__setattr__(self, 'nt', int(self.nt))

    @property
    def dt(self) -> float:
        return self.t_end / self.nt

    def time_at(self, step: int) -> float:
        return step * self.dt


class Discretization:
    """
    Construction of grids and of the initial time level
    """

    @staticmethod
    def build_grid(a: float, b: float, nx: int) -> Grid1D:
        """
        Partition [a, b] into nx subintervals.

        :param a: float, left endpoint
        :param b: float, right endpoint
        :param nx: int, number of subintervals
        :return: Grid1D with dx = (b - a) / nx and nx + 1 points

        :raises DomainError: If b <= a or nx < 3.
        """
        return Grid1D(a, b, nx)

    @staticmethod
    def build_time_grid(t_end: float, nt: int) -> TimeGrid:
        """
        Partition [0, t_end] into nt steps.

        :param t_end: float, total simulated time
        :param nt: int, number of steps
        :return: TimeGrid with dt = t_end / nt

        :raises DomainError: If t_end <= 0 or nt < 1.
        """
        return TimeGrid(t_end, nt)

    @staticmethod
    def sample_initial(grid: Grid1D, initial: InitialCondition) -> WaveField:
        """
        Sample the initial condition at every grid point.

        :param grid: Grid1D, the spatial grid
        :param initial: InitialCondition, the function of x to sample
        :return: WaveField at time 0 with values[i] = f(a + i*dx)

        :raises EvalError: If f is not finite at some grid point; the message names the point.
        """
        coordinates = grid.coordinates
        try:
            values = initial.evaluate(coordinates)
        except EvalError as error:
            if error.index is None:
                raise
            raise EvalError(f"Initial condition failed at x = {float(coordinates[error.index])!r}: {error}",
                            error.index) from error

        return WaveField(grid, 0.0, values)
