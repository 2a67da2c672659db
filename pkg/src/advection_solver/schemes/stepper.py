# File: stepper.py
# Description: One time step of an explicit scheme, including the boundary policy
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import numpy as np

from advection_solver.errors import BlownUpField, EvalError, GridMismatch, MissingPreviousLevel
from advection_solver.expression.expression import Expression
from advection_solver.grid.wave_field import WaveField
from advection_solver.schemes.definitions.scheme_definition import SchemeId
from advection_solver.schemes.step_context import BoundaryKind, BoundaryPolicy, StepContext
from advection_solver.schemes.stencil import Stencil

_ONE_LEVEL_STENCILS = {
    SchemeId.FTCS_CENTERED: Stencil.ftcs_centered,
    SchemeId.FORWARD_BIASED: Stencil.forward_biased,
    SchemeId.UPWIND: Stencil.upwind,
    SchemeId.LAX_FRIEDRICHS: Stencil.lax_friedrichs,
    SchemeId.LAX_WENDROFF: Stencil.lax_wendroff,
}


class Stepper:
    """
    Advances a WaveField by one time step
    """

    @staticmethod
    def courant_numbers(field: WaveField, ctx: StepContext) -> np.ndarray:
        """
        Local Courant numbers nu_i = zeta(x_i, t, phi_i)*dt/dx.

        :param field: WaveField, the current level
        :param ctx: StepContext, supplies zeta and dt
        :return: np.ndarray, nu at every grid point

        :raises EvalError: If zeta fails at a grid point; the message names x and t.
        """
        coordinates = field.grid.coordinates
        try:
            zeta = Expression.evaluate(ctx.zeta, coordinates, field.time, field.values)
        except EvalError as error:
            if error.index is None:
                raise EvalError(f"Velocity failed at t = {field.time!r}: {error}") from error
            raise EvalError(f"Velocity failed at x = {float(coordinates[error.index])!r}, t = {field.time!r}: {error}",
                            error.index) from error
        return zeta * ctx.dt / field.grid.dx

    @staticmethod
    def step(field: WaveField, ctx: StepContext, scheme: SchemeId) -> WaveField:
        """
        Advance a field by ctx.dt.

        Non-finite results are returned in a field marked blown up; detecting and handling the
        blow-up is up to the caller.

        :param field: WaveField, the current level
        :param ctx: StepContext, velocity, sign, boundary, dt and (for Leapfrog) the previous level
        :param scheme: SchemeId, the scheme
        :return: WaveField at field.time + ctx.dt

        :raises BlownUpField: If the field is marked blown up.
        :raises MissingPreviousLevel: If a two-level scheme is stepped without ctx.previous.
        :raises GridMismatch: If ctx.previous lives on another grid.
        :raises EvalError: Propagated from zeta, with the failing (x, t).
        """
        if field.blown_up:
            raise BlownUpField(f"Cannot step a blown-up field at t = {field.time}")

        courant = ctx.sign.orientation * Stepper.courant_numbers(field, ctx)
        neighbors = Stencil.neighbors(field.values, ctx.boundary.kind is BoundaryKind.PERIODIC)

        if scheme is SchemeId.LEAPFROG:
            if ctx.previous is None:
                raise MissingPreviousLevel("Leapfrog needs the previous time level")
            if ctx.previous.grid != field.grid:
                raise GridMismatch("Previous time level lives on a different grid")
            new_values = Stencil.leapfrog(neighbors, ctx.previous.values, courant)
        else:
            new_values = _ONE_LEVEL_STENCILS[scheme](neighbors, courant)

        new_values = Stepper.apply_boundary(new_values, ctx.boundary)
        return WaveField(field.grid, field.time + ctx.dt, new_values,
                         blown_up=not bool(np.all(np.isfinite(new_values))))

    @staticmethod
    def apply_boundary(new_row: np.ndarray, policy: BoundaryPolicy) -> np.ndarray:
        """
        Fill the endpoints of an updated row.

        :param new_row: np.ndarray, the row with its interior already updated
        :param policy: BoundaryPolicy, the endpoint treatment
        :return: np.ndarray, a copy of the row with endpoints set
        """
        row = np.array(new_row, dtype=float)

        if policy.kind is BoundaryKind.COPY_NEIGHBOR:
            row[0] = row[1]
            row[-1] = row[-2]
        elif policy.kind is BoundaryKind.PERIODIC:
            row[-1] = row[0]
        elif policy.kind is BoundaryKind.FIXED:
            row[0] = policy.left_value
            row[-1] = policy.right_value

        return row
