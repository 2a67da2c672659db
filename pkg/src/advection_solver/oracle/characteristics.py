# File: characteristics.py
# Description: Method-of-characteristics solutions for velocities depending on x and t
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from advection_solver.errors import EvalError, NonFiniteTrajectory, NonFiniteValue, UnsupportedVelocity
from advection_solver.expression.expression import Expression
from advection_solver.expression.nodes import DependenceClass, ExpressionNode
from advection_solver.grid.discretization import Grid1D
from advection_solver.grid.initial_condition import InitialCondition
from advection_solver.grid.wave_field import WaveField
from advection_solver.schemes.step_context import SignConvention

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacteristicTrace:
    """
    A characteristic traced back from (arrival, t) to its foot point at t = 0.
    """
    foot: float
    arrival: float
    steps: int
    rk_dt: float


class Characteristics:
    """
    Fourth-order Runge-Kutta tracing of dx/dtau = s*zeta(x, tau)
    """

    @staticmethod
    def _require_traceable(zeta: ExpressionNode) -> None:
        if Expression.classify(zeta) is DependenceClass.STATE_DEPENDENT:
            raise UnsupportedVelocity("Characteristics oracle needs a velocity independent of u")

    @staticmethod
    def _validate_rk_dt(rk_dt: float) -> None:
        if not math.isfinite(rk_dt) or rk_dt <= 0:
            raise ValueError(f"rk_dt must be positive and finite, got {rk_dt}")

    @staticmethod
    def _integrate(zeta: ExpressionNode, start: np.ndarray, t: np.ndarray, sign: SignConvention,
                   rk_dt: float, backward: bool, drop_escaped_rows: bool = False) -> Tuple[np.ndarray, np.ndarray]:
        """
        Integrate from tau = t down to 0 (backward) or from 0 up to t, elementwise.

        Element i takes ceil(t_i / rk_dt) equal steps of h_i = t_i / steps_i; elements with t_i = 0
        are returned unchanged. With drop_escaped_rows, a row (last axis) in which some trace leaves
        the representable range is set to nan and no longer advanced; otherwise that raises.
        """
        orientation = sign.orientation
        position, t = np.broadcast_arrays(np.asarray(start, dtype=float), np.asarray(t, dtype=float))
        position = position.astype(float)

        steps = np.ceil(t / rk_dt).astype(np.int64)
        h = np.divide(t, steps, out=np.zeros_like(t), where=steps > 0)
        direction = -1.0 if backward else 1.0
        delta = direction * h
        escaped = np.zeros(position.shape, dtype=bool)

        def velocity(x, tau):
            if drop_escaped_rows:
                return orientation * Expression.evaluate(zeta, x, tau, 0.0, allow_non_finite=True)
            if not np.all(np.isfinite(x)):
                raise NonFiniteTrajectory("Characteristic left the representable range")
            try:
                return orientation * Expression.evaluate(zeta, x, tau, 0.0)
            except NonFiniteValue as error:
                raise NonFiniteTrajectory(f"Velocity overflowed on a characteristic: {error}") from error

        max_steps = int(steps.max()) if steps.size else 0
        for n in range(max_steps):
            # finished elements rest at their end time with a zero step
            active = (n < steps) & ~escaped
            if not active.any():
                break
            elapsed = np.minimum(n, steps) * h
            tau = t - elapsed if backward else elapsed
            step = np.where(active, delta, 0.0)

            with np.errstate(all='ignore'):
                k1 = velocity(position, tau)
                k2 = velocity(position + step / 2 * k1, tau + step / 2)
                k3 = velocity(position + step / 2 * k2, tau + step / 2)
                k4 = velocity(position + step * k3, tau + step)
                updated = position + step / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
            position = np.where(active, updated, position)

            left_range = active & ~np.isfinite(position)
            if not left_range.any():
                continue
            if not drop_escaped_rows:
                raise NonFiniteTrajectory(f"Characteristic left the representable range after {n + 1} steps")
            escaped |= np.any(left_range, axis=-1, keepdims=True)
            position = np.where(escaped, np.nan, position)

        return position, steps

    @staticmethod
    def trace_characteristic(zeta: ExpressionNode, x: float, t: float, sign: SignConvention,
                             rk_dt: float) -> CharacteristicTrace:
        """
        Trace the characteristic through (x, t) back to t = 0.

        :param zeta: ExpressionNode, velocity law in x and t
        :param x: float, arrival coordinate
        :param t: float, arrival time (>= 0)
        :param sign: SignConvention, Standard integrates dx/dtau = zeta, PaperFaithful dx/dtau = -zeta
        :param rk_dt: float, largest integration step
        :return: CharacteristicTrace with the foot point x0

        :raises UnsupportedVelocity: If zeta depends on u.
        :raises ValueError: If rk_dt is not positive or t is negative.
        :raises EvalError: Propagated from zeta.
        :raises NonFiniteTrajectory: If the trace leaves the representable range.
        """
        Characteristics._require_traceable(zeta)
        Characteristics._validate_rk_dt(rk_dt)
        if t < 0:
            raise ValueError(f"Arrival time must be non-negative, got {t}")

        foot, steps = Characteristics._integrate(zeta, np.array(float(x)), np.array(float(t)), sign,
                                                 rk_dt, backward=True)
        return CharacteristicTrace(float(foot), float(x), int(steps), rk_dt)

    @staticmethod
    def integrate_forward(zeta: ExpressionNode, foot: float, t: float, sign: SignConvention, rk_dt: float) -> float:
        """
        Follow the characteristic from (foot, 0) forward to time t.

        :return: float, the arrival coordinate at time t
        """
        Characteristics._require_traceable(zeta)
        Characteristics._validate_rk_dt(rk_dt)

        arrival, _ = Characteristics._integrate(zeta, np.array(float(foot)), np.array(float(t)), sign,
                                                rk_dt, backward=False)
        return float(arrival)

    @staticmethod
    def oracle_fields(grid: Grid1D, times: Sequence[float], f: InitialCondition, zeta: ExpressionNode,
                      sign: SignConvention, rk_dt: float) -> List[WaveField]:
        """
        Method-of-characteristics solution at several times, traced in one vectorized pass.

        :param grid: Grid1D, the spatial grid
        :param times: Sequence[float], non-negative times
        :param f: InitialCondition, evaluated at the foot points
        :param zeta: ExpressionNode, velocity law in x and t
        :param sign: SignConvention, the transport direction convention
        :param rk_dt: float, largest integration step
        :return: List[WaveField], one per time, values[i] = f(foot of (x_i, t))
        """
        Characteristics._require_traceable(zeta)
        Characteristics._validate_rk_dt(rk_dt)

        time_values = np.asarray(times, dtype=float).reshape(-1, 1)
        if np.any(time_values < 0):
            raise ValueError("Oracle times must be non-negative")
        if time_values.size == 0:
            return []

        logger.debug("Tracing %d characteristics at %d times with rk_dt=%g",
                     grid.point_count, time_values.shape[0], rk_dt)

        feet, _ = Characteristics._integrate(zeta, grid.coordinates.reshape(1, -1), time_values, sign,
                                             rk_dt, backward=True)
        values = f.evaluate(feet)
        return [WaveField(grid, float(time_values[k, 0]), values[k]) for k in range(time_values.shape[0])]

    @staticmethod
    def traceable_oracle_fields(grid: Grid1D, times: Sequence[float], f: InitialCondition, zeta: ExpressionNode,
                                sign: SignConvention, rk_dt: float) -> List[Optional[WaveField]]:
        """
        Like oracle_fields, but a time at which some characteristic leaves the representable range,
        or at which f fails at a foot point, gives None instead of raising.

        :return: List[Optional[WaveField]], one entry per time

        :raises EvalError: If zeta has a singularity on a characteristic (e.g. division by zero).
        """
        Characteristics._require_traceable(zeta)
        Characteristics._validate_rk_dt(rk_dt)

        time_values = np.asarray(times, dtype=float).reshape(-1, 1)
        if np.any(time_values < 0):
            raise ValueError("Oracle times must be non-negative")

        feet, _ = Characteristics._integrate(zeta, grid.coordinates.reshape(1, -1), time_values, sign,
                                             rk_dt, backward=True, drop_escaped_rows=True)
        fields: List[Optional[WaveField]] = []
        for k in range(time_values.shape[0]):
            time = float(time_values[k, 0])
            if not np.all(np.isfinite(feet[k])):
                logger.debug("Characteristics at t=%g leave the representable range", time)
                fields.append(None)
                continue
            try:
                fields.append(WaveField(grid, time, f.evaluate(feet[k])))
            except EvalError as error:
                logger.debug("Initial condition fails at a foot point for t=%g: %s", time, error)
                fields.append(None)
        return fields

    @staticmethod
    def oracle_field(grid: Grid1D, t: float, f: InitialCondition, zeta: ExpressionNode, sign: SignConvention,
                     rk_dt: float) -> WaveField:
        """
        Method-of-characteristics solution at one time.

        :return: WaveField at time t
        """
        return Characteristics.oracle_fields(grid, [t], f, zeta, sign, rk_dt)[0]
