# File: shock.py
# Description: Wave-breaking time and pre-shock implicit solutions for velocities depending on u only
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from advection_solver.errors import NoBracket, PostShock, UnsupportedVelocity
from advection_solver.expression.expression import Expression
from advection_solver.expression.nodes import ExpressionNode
from advection_solver.grid.discretization import Grid1D
from advection_solver.grid.initial_condition import InitialCondition
from advection_solver.schemes.step_context import SignConvention

logger = logging.getLogger(__name__)

MAX_BRACKET_DOUBLINGS = 64
MAX_BISECTIONS = 200
BISECTION_TOLERANCE = 1e-12
SHOCK_SEARCH_CELLS = 1000


@dataclass(frozen=True)
class ShockReport:
    """
    First crossing time of characteristics (inf when they never cross) and where it happens.
    """
    shock_time: float
    location_hint: float


class ShockAnalysis:
    """
    Shock formation for phi_t + s*speed(phi)*phi_x = 0
    """

    @staticmethod
    def _require_state_only(speed: ExpressionNode) -> None:
        extra = Expression.variables(speed) - {'u'}
        if extra:
            raise UnsupportedVelocity(f"Speed must depend on u only, found {', '.join(sorted(extra))}")

    @staticmethod
    def _signed_speed(f: InitialCondition, speed: ExpressionNode, x, sign: SignConvention):
        return sign.orientation * Expression.evaluate(speed, 0.0, 0.0, f.evaluate(x))

    @staticmethod
    def detect_shock(f: InitialCondition, speed: ExpressionNode, grid: Grid1D, sign: SignConvention) -> ShockReport:
        """
        Estimate the wave-breaking time t* = -1 / min D_i, where D_i is the centered difference of
        s*speed(f(x)) at the interior grid points.

        :param f: InitialCondition, the initial data
        :param speed: ExpressionNode, speed law in u only
        :param grid: Grid1D, points where the slope is sampled
        :param sign: SignConvention, the transport direction convention
        :return: ShockReport, shock_time = inf when every D_i >= 0

        :raises UnsupportedVelocity: If speed depends on x or t.
        """
        ShockAnalysis._require_state_only(speed)

        coordinates = grid.coordinates
        velocity = np.broadcast_to(ShockAnalysis._signed_speed(f, speed, coordinates, sign), coordinates.shape)
        slopes = (velocity[2:] - velocity[:-2]) / (2 * grid.dx)

        steepest = int(np.argmin(slopes))
        min_slope = float(slopes[steepest])
        origin = float(coordinates[steepest + 1])

        if min_slope >= 0:
            return ShockReport(float('inf'), origin)

        shock_time = -1.0 / min_slope
        return ShockReport(shock_time, origin + float(velocity[steepest + 1]) * shock_time)

    @staticmethod
    def implicit_state_solution(f: InitialCondition, speed: ExpressionNode, x: Union[float, np.ndarray], t: float,
                                sign: SignConvention,
                                shock_time: Optional[float] = None) -> Union[float, np.ndarray]:
        """
        Solve x0 + s*speed(f(x0))*t = x for the foot point x0 and return f(x0).

        The foot point is bracketed by doubling a symmetric interval around x, starting from
        half-width 1 + |speed(f(x))|*t, then refined by bisection.

        :param f: InitialCondition, the initial data
        :param speed: ExpressionNode, speed law in u only
        :param x: float or np.ndarray, coordinate(s)
        :param t: float, time (>= 0)
        :param sign: SignConvention, the transport direction convention
        :param shock_time: Optional[float], known breaking time; detected on a fine grid around x when omitted
        :return: float or np.ndarray, the solution value(s)

        :raises UnsupportedVelocity: If speed depends on x or t.
        :raises PostShock: If t is at or after the breaking time.
        :raises NoBracket: If no sign change is found while widening the search interval.
        """
        ShockAnalysis._require_state_only(speed)
        if t < 0:
            raise ValueError(f"Time must be non-negative, got {t}")

        targets = np.asarray(x, dtype=float)
        if t == 0:
            return f.evaluate(x)

        half_width = 1.0 + np.abs(ShockAnalysis._signed_speed(f, speed, targets, sign)) * t

        if shock_time is None:
            low = float(np.min(targets - half_width))
            high = float(np.max(targets + half_width))
            shock_time = ShockAnalysis.detect_shock(f, speed, Grid1D(low, high, SHOCK_SEARCH_CELLS), sign).shock_time
        if t >= shock_time:
            raise PostShock(f"t = {t} is at or after the breaking time {shock_time}")

        def residual(foot):
            return foot + ShockAnalysis._signed_speed(f, speed, foot, sign) * t - targets

        half_width = np.broadcast_to(half_width, targets.shape).astype(float)
        for _ in range(MAX_BRACKET_DOUBLINGS):
            low = targets - half_width
            high = targets + half_width
            residual_low = residual(low)
            residual_high = residual(high)
            bracketed = residual_low * residual_high <= 0
            if np.all(bracketed):
                break
            half_width = np.where(bracketed, half_width, 2 * half_width)
        else:
            raise NoBracket(f"No sign change found for the foot point at t = {t}")

        low_is_negative = residual_low <= 0
        for _ in range(MAX_BISECTIONS):
            middle = (low + high) / 2
            if np.all(high - low <= BISECTION_TOLERANCE * (1 + np.abs(middle))):
                break
            middle_is_low_side = (residual(middle) <= 0) == low_is_negative
            low = np.where(middle_is_low_side, middle, low)
            high = np.where(middle_is_low_side, high, middle)

        foot = (low + high) / 2
        logger.debug("Solved %d implicit foot points at t=%g", foot.size, t)
        return f.evaluate(foot if foot.ndim else float(foot))
