# File: convergence.py
# Description: Observed order of accuracy from a refinement ladder at fixed Courant number
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from advection_solver.analysis.norms import Norms
from advection_solver.errors import UnstableRun, UnsupportedVelocity
from advection_solver.simulation.run_config import RunConfig
from advection_solver.simulation.simulation import Simulation

logger = logging.getLogger(__name__)

NOISE_FLOOR = 1e-9


@dataclass(frozen=True)
class ConvergenceLevel:
    """Final-time L2 error of one refinement level."""
    level: int
    nx: int
    nt: int
    dx: float
    l2: float


@dataclass(frozen=True)
class ConvergenceReport:
    """
    Refinement ladder and the fitted order; order is None when an error lies below the noise floor.
    """
    levels: Tuple[ConvergenceLevel, ...]
    order: Optional[float]


class Convergence:
    """
    Refinement studies
    """

    @staticmethod
    def fit_order(dx_values: Sequence[float], errors: Sequence[float]) -> Optional[float]:
        """
        Least-squares slope of log(error) against log(dx).

        :param dx_values: Sequence[float], grid spacings
        :param errors: Sequence[float], errors at those spacings
        :return: Optional[float], the slope, or None if any error is below 1e-9
        """
        if any(error < NOISE_FLOOR for error in errors):
            return None
        slope, _ = np.polyfit(np.log(np.asarray(dx_values, dtype=float)), np.log(np.asarray(errors, dtype=float)), 1)
        return float(slope)

    @staticmethod
    def convergence_order(base_config: RunConfig, levels: int) -> ConvergenceReport:
        """
        Run the configuration with nx and nt doubled per level and fit the order of the final-time
        L2 error against the oracle.

        :param base_config: RunConfig, the coarsest level
        :param levels: int, number of levels (>= 3)
        :return: ConvergenceReport

        :raises ValueError: If levels < 3.
        :raises UnsupportedVelocity: If no oracle exists for the configuration's velocity.
        :raises UnstableRun: If any level blows up.
        """
        if levels < 3:
            raise ValueError(f"A refinement study needs at least 3 levels, got {levels}")

        ladder = []
        for level in range(levels):
            config = base_config.refined(2 ** level)
            result = Simulation.run(config, with_oracle=False)
            if result.manifest.blown_up:
                raise UnstableRun(f"Level {level} (nx={config.nx}, nt={config.nt}) blew up")

            final = result.final_field
            references = Simulation.reference_fields(config, [final.time])
            if references is None or references[0] is None:
                raise UnsupportedVelocity(f"No oracle available for velocity '{config.velocity}' at t={final.time}")

            l2 = Norms.error_norms(final, references[0]).l2
            ladder.append(ConvergenceLevel(level, config.nx, config.nt, config.grid.dx, l2))
            logger.info("Level %d: nx=%d nt=%d l2=%g", level, config.nx, config.nt, l2)

        order = Convergence.fit_order([entry.dx for entry in ladder], [entry.l2 for entry in ladder])
        if order is None:
            logger.info("Errors below the noise floor %g; order undefined", NOISE_FLOOR)
        return ConvergenceReport(tuple(ladder), order)
