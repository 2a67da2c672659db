# File: amplification.py
# Description: Von Neumann amplification factors, analytic and measured
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from advection_solver.expression.expression import Expression
from advection_solver.grid.discretization import Grid1D
from advection_solver.grid.wave_field import WaveField
from advection_solver.schemes.definitions.scheme_definition import SchemeId
from advection_solver.schemes.step_context import BoundaryKind, BoundaryPolicy, SignConvention, StepContext
from advection_solver.schemes.stepper import Stepper

logger = logging.getLogger(__name__)

GROWTH_LIMIT = 1e10


@dataclass(frozen=True)
class AmplificationFactor:
    """
    Per-step multiplier g of the Fourier mode exp(i*theta*j) under a scheme.
    """
    scheme: SchemeId
    nu: float
    theta: float
    g: complex

    @property
    def magnitude(self) -> float:
        return abs(self.g)


class Amplification:
    """
    Von Neumann analysis for constant velocity on a periodic grid
    """

    @staticmethod
    def _validate_theta(theta: float) -> None:
        if not 0 <= theta <= math.pi:
            raise ValueError(f"theta must lie in [0, pi], got {theta}")

    @staticmethod
    def amplification_factor(scheme: SchemeId, nu: float, theta: float, sign: SignConvention) -> AmplificationFactor:
        """
        Analytic amplification factor from substituting a single Fourier mode into the stencil.

        With c = s*nu: FTCS 1 - i*c*sin(theta); forward 1 - c*(e^{i*theta} - 1); upwind
        1 - c*(1 - e^{-i*theta}) for c > 0 and the forward factor for c < 0; Lax-Friedrichs
        cos(theta) - i*c*sin(theta); Lax-Wendroff 1 - i*c*sin(theta) - c^2*(1 - cos(theta));
        leapfrog the larger-magnitude root of g^2 + 2i*c*sin(theta)*g - 1 = 0.

        :param scheme: SchemeId, the scheme
        :param nu: float, Courant number zeta*dt/dx
        :param theta: float, wave number times dx, in [0, pi]
        :param sign: SignConvention, the transport direction convention
        :return: AmplificationFactor

        :raises ValueError: If theta is outside [0, pi].
        """
        Amplification._validate_theta(theta)
        c = sign.orientation * nu
        sine = math.sin(theta)
        cosine = math.cos(theta)

        if scheme is SchemeId.FTCS_CENTERED:
            g = 1 - 1j * c * sine
        elif scheme is SchemeId.FORWARD_BIASED:
            g = 1 - c * (cmath.exp(1j * theta) - 1)
        elif scheme is SchemeId.UPWIND:
            if c > 0:
                g = 1 - c * (1 - cmath.exp(-1j * theta))
            elif c < 0:
                g = 1 - c * (cmath.exp(1j * theta) - 1)
            else:
                g = complex(1.0)
        elif scheme is SchemeId.LAX_FRIEDRICHS:
            g = cosine - 1j * c * sine
        elif scheme is SchemeId.LAX_WENDROFF:
            g = 1 - 1j * c * sine - c * c * (1 - cosine)
        else:
            root = cmath.sqrt(1 - (c * sine) ** 2)
            g = max((-1j * c * sine + root, -1j * c * sine - root), key=abs)

        return AmplificationFactor(scheme, nu, theta, complex(g))

    @staticmethod
    def _isolate_mode(field: WaveField, mode: int) -> tuple[WaveField, float]:
        """
        Project a periodic field onto the real Fourier mode with the given index.

        :param field: WaveField, periodic field whose last point repeats the first
        :param mode: int, mode index m in [0, size/2]
        :return: tuple of the field holding only that mode and the magnitude of its coefficient
        """
        size = field.grid.point_count - 1
        coefficient = np.fft.fft(field.values[:-1])[mode]
        phase = np.exp(2j * np.pi * mode * np.arange(size + 1) / size)
        weight = 1.0 if mode == 0 or 2 * mode == size else 2.0
        values = weight * np.real(coefficient * phase) / size
        return WaveField(field.grid, field.time, values), float(abs(coefficient))

    @staticmethod
    def empirical_growth(scheme: SchemeId, nu: float, theta: float, steps: int, grid_size: int,
                         sign: SignConvention) -> float:
        """
        Measured per-step growth of a single Fourier mode cos(theta*j).

        Runs the scheme on a periodic grid with dx = dt = 1 and constant velocity nu. After every
        step the field is projected back onto the seeded mode, so rounding error never builds up
        in other modes, and the result is (|c_n| / |c_0|)^(1/n) for the mode coefficient c.
        Leapfrog's second level is seeded with the real part of g*exp(i*theta*j) for the analytic
        g. When the coefficient grows past 1e10 times its start the run stops early, a warning is
        logged, and the growth up to that step is returned. A mode wiped out exactly returns 0.

        :param scheme: SchemeId, the scheme
        :param nu: float, Courant number
        :param theta: float, wave number, must equal 2*pi*m/grid_size for an integer m
        :param steps: int, number of steps (>= 1)
        :param grid_size: int, number of periodic points
        :param sign: SignConvention, the transport direction convention
        :return: float, geometric-mean growth per step

        :raises ValueError: If theta is outside [0, pi] or not resolvable on the grid, or steps < 1.
        """
        Amplification._validate_theta(theta)
        if steps < 1:
            raise ValueError(f"steps must be at least 1, got {steps}")
        mode_number = theta * grid_size / (2 * math.pi)
        if abs(mode_number - round(mode_number)) > 1e-9:
            raise ValueError(f"theta = {theta} is not resolvable on a grid of {grid_size} points")
        mode = int(round(mode_number))

        grid = Grid1D(0, grid_size, grid_size)
        ctx = StepContext(Expression.constant(nu), sign, BoundaryPolicy(BoundaryKind.PERIODIC), 1.0)
        index = np.arange(grid.point_count)
        current, reference = Amplification._isolate_mode(WaveField(grid, 0.0, np.cos(theta * index)), mode)

        previous = None
        step_count = 0
        log_growth = 0.0
        if scheme is SchemeId.LEAPFROG:
            g = Amplification.amplification_factor(scheme, nu, theta, sign).g
            previous = current
            current, amplitude = Amplification._isolate_mode(
                WaveField(grid, 1.0, np.real(g * np.exp(1j * theta * index))), mode)
            log_growth = math.log(amplitude / reference)
            reference = amplitude
            step_count = 1

        # both levels are rescaled each step so the mode keeps the amplitude it was seeded with
        while step_count < steps and log_growth <= math.log(GROWTH_LIMIT):
            context = StepContext(ctx.zeta, ctx.sign, ctx.boundary, ctx.dt, previous)
            advanced, amplitude = Amplification._isolate_mode(Stepper.step(current, context, scheme), mode)
            step_count += 1
            if amplitude == 0.0:
                logger.debug("%s at nu=%g, theta=%g annihilated the mode after %d steps",
                             scheme.value, nu, theta, step_count)
                return 0.0
            ratio = amplitude / reference
            log_growth += math.log(ratio)
            previous = WaveField(grid, current.time, current.values / ratio)
            current = WaveField(grid, advanced.time, advanced.values / ratio)

        if log_growth > math.log(GROWTH_LIMIT):
            logger.warning("%s at nu=%g, theta=%g exceeded %g after %d steps",
                           scheme.value, nu, theta, GROWTH_LIMIT, step_count)

        return math.exp(log_growth / step_count)
