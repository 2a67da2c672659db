# File: courant.py
# Description: Courant number monitor for a velocity law on a run's domain
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from typing import Tuple

from advection_solver.expression.expression import Expression
from advection_solver.expression.nodes import ExpressionNode
from advection_solver.grid.discretization import Grid1D, TimeGrid


@dataclass(frozen=True)
class CourantReport:
    """
    Largest Courant number |zeta|*dt/dx over the sampled run box and the (x, t) where it occurs.
    """
    nu_max: float
    attained_at: Tuple[float, float]

    @property
    def exceeds_unit_bound(self) -> bool:
        return self.nu_max > 1.0


class Courant:
    """
    Courant number computations
    """

    @staticmethod
    def cfl_number(zeta: ExpressionNode, grid: Grid1D, time_grid: TimeGrid, u_range: Tuple[float, float],
                   samples: int) -> CourantReport:
        """
        Largest Courant number of a velocity law over [a, b] x [0, t_end] x u_range.

        The maximum is taken over a sample lattice, so it is a lower bound on the true supremum.

        :param zeta: ExpressionNode, velocity law
        :param grid: Grid1D, supplies [a, b] and dx
        :param time_grid: TimeGrid, supplies [0, t_end] and dt
        :param u_range: Tuple[float, float], range of the solution values
        :param samples: int, lattice points per axis (>= 2)
        :return: CourantReport

        :raises ValueError: If samples < 2.
        :raises EvalError: Propagated from zeta.
        """
        maximum = Expression.locate_max_abs(zeta, (grid.a, grid.b), (0.0, time_grid.t_end), u_range, samples)
        return CourantReport(maximum.value * time_grid.dt / grid.dx, (maximum.x, maximum.t))
