# File: traveling_wave.py
# Description: Exact traveling-wave solutions for constant velocity
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from advection_solver.grid.discretization import Grid1D
from advection_solver.grid.initial_condition import InitialCondition
from advection_solver.grid.wave_field import WaveField
from advection_solver.schemes.step_context import SignConvention


@dataclass(frozen=True)
class TravelingWave:
    """
    Two-wave solution f_right(x - c0*t) + f_left(x + c0*t) for the Standard sign.
    Without f_left only the right-moving wave remains.
    """
    f_right: InitialCondition
    c0: float
    f_left: Optional[InitialCondition] = None


class TravelingWaveOracle:
    """
    Evaluation of traveling waves
    """

    @staticmethod
    def eval_traveling(wave: TravelingWave, x: Union[float, np.ndarray], t: float,
                       sign: SignConvention) -> Union[float, np.ndarray]:
        """
        Evaluate a traveling wave.

        Standard gives f_right(x - c0*t) + f_left(x + c0*t); PaperFaithful flips both shifts.

        :param wave: TravelingWave, the wave
        :param x: float or np.ndarray, coordinate(s)
        :param t: float, time
        :param sign: SignConvention, the transport direction convention
        :return: float or np.ndarray, the solution value(s)

        :raises EvalError: Propagated from the component expressions.
        """
        shift = sign.orientation * wave.c0 * t
        value = wave.f_right.evaluate(x - shift)
        if wave.f_left is not None:
            value = value + wave.f_left.evaluate(x + shift)
        return value

    @staticmethod
    def traveling_field(grid: Grid1D, wave: TravelingWave, t: float, sign: SignConvention) -> WaveField:
        """
        Sample a traveling wave at every grid point.

        :return: WaveField at time t
        """
        values = TravelingWaveOracle.eval_traveling(wave, grid.coordinates, t, sign)
        return WaveField(grid, t, np.broadcast_to(values, (grid.point_count,)))
