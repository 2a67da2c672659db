# File: simulation.py
# Description: Run orchestration: time stepping, blow-up detection, oracle diagnostics and comparisons
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import logging
from typing import List, Optional, Sequence

import numpy as np

from advection_solver.analysis.courant import Courant, CourantReport
from advection_solver.analysis.norms import Norms
from advection_solver.errors import ConfigError, EvalError, NonFiniteTrajectory, UnsupportedVelocity
from advection_solver.expression.expression import Expression
from advection_solver.expression.nodes import DependenceClass
from advection_solver.grid.discretization import Discretization
from advection_solver.grid.wave_field import WaveField
from advection_solver.oracle.characteristics import Characteristics
from advection_solver.oracle.shock import ShockAnalysis
from advection_solver.oracle.traveling_wave import TravelingWave, TravelingWaveOracle
from advection_solver.schemes.definitions.register.register_scheme_definitions import build_scheme_registry
from advection_solver.schemes.definitions.scheme_definition import SchemeId
from advection_solver.schemes.step_context import StepContext
from advection_solver.schemes.stepper import Stepper
from .run_config import RunConfig
from .run_result import Comparison, ComparisonRow, RunManifest, RunResult, SnapshotRecord

logger = logging.getLogger(__name__)

BLOW_UP_THRESHOLD = 1e10
CFL_SAMPLES_PER_AXIS = 33
BOOTSTRAP_SCHEME = SchemeId.UPWIND


class Simulation:
    """
    Runs configured simulations
    """

    @staticmethod
    def snapshot_steps(config: RunConfig) -> List[int]:
        """Steps persisted by a full run: 0, every snapshot_every-th step, and nt."""
        nt = config.time_grid.nt
        return [0] + [step for step in range(1, nt + 1) if step % config.snapshot_every == 0 or step == nt]

    @staticmethod
    def run(config: RunConfig, with_oracle: bool = True) -> RunResult:
        """
        Run a configuration: sample the initial condition, then take nt steps of the scheme.

        After every step the new row is checked; any non-finite value or max|phi| > 1e10 marks the
        run blown up and stops it, keeping the rows persisted so far plus the last finite row.
        Two-level schemes take their first step with the upwind scheme. The exact scheme is
        delegated to run_exact.

        :param config: RunConfig, the run
        :param with_oracle: bool, compute oracle error norms for the persisted rows
        :return: RunResult

        :raises EvalError: Propagated from the initial condition or velocity, with its location.
        """
        if config.is_exact:
            return Simulation.run_exact(config, with_oracle)

        grid, time_grid = config.grid, config.time_grid
        scheme_id = config.scheme_id
        definition = build_scheme_registry().get_scheme(scheme_id)

        initial = Discretization.sample_initial(grid, config.initial_condition)
        courant = Simulation._courant(config, initial)

        logger.info("Running %s (%s, %s) on nx=%d, nt=%d, nu_max=%g",
                    definition.name, config.boundary.token, config.sign.value, grid.nx, time_grid.nt,
                    courant.nu_max)

        fields = [initial]
        steps = [0]
        previous: Optional[WaveField] = None
        current = initial
        completed = 0
        blown_up = False

        for step in range(1, time_grid.nt + 1):
            scheme = scheme_id
            if definition.time_levels == 2 and previous is None:
                scheme = BOOTSTRAP_SCHEME
            ctx = StepContext(config.velocity_expression, config.sign, config.boundary, time_grid.dt, previous)
            advanced = Stepper.step(current, ctx, scheme)

            if advanced.blown_up or advanced.max_abs > BLOW_UP_THRESHOLD:
                blown_up = True
                logger.warning("Run blew up at step %d (t=%g); keeping %d rows", step,
                               time_grid.time_at(step), len(fields))
                break

            previous, current = current, advanced.at_time(time_grid.time_at(step))
            completed = step
            if step % config.snapshot_every == 0 or step == time_grid.nt:
                fields.append(current)
                steps.append(step)

        if steps[-1] != completed:
            fields.append(current)
            steps.append(completed)

        return Simulation._assemble(config, fields, steps, blown_up, courant, with_oracle)

    @staticmethod
    def run_exact(config: RunConfig, with_oracle: bool = True) -> RunResult:
        """
        Propagate the initial condition by exact translation; valid for constant velocity only.

        :param config: RunConfig, the run
        :param with_oracle: bool, compute oracle error norms for the persisted rows
        :return: RunResult

        :raises ConfigError: If the velocity is not constant.
        """
        if Expression.classify(config.velocity_expression) is not DependenceClass.CONSTANT:
            raise ConfigError(f"Exact propagation needs a constant velocity, got '{config.velocity}'")

        grid, time_grid = config.grid, config.time_grid
        wave = TravelingWave(config.initial_condition, float(Expression.evaluate(config.velocity_expression)))
        steps = Simulation.snapshot_steps(config)
        fields = [TravelingWaveOracle.traveling_field(grid, wave, time_grid.time_at(step), config.sign)
                  for step in steps]

        logger.info("Exact translation with c0=%g on nx=%d, %d rows", wave.c0, grid.nx, len(fields))
        courant = Simulation._courant(config, fields[0])
        return Simulation._assemble(config, fields, steps, False, courant, with_oracle)

    @staticmethod
    def run_oracle(config: RunConfig) -> RunResult:
        """
        Oracle solution at the run's persisted steps. For speeds in u only, rows stop at the
        breaking time.

        :param config: RunConfig, the run
        :return: RunResult whose rows are oracle fields

        :raises UnsupportedVelocity: If no oracle exists for the velocity law.
        """
        steps = Simulation.snapshot_steps(config)
        references = Simulation.reference_fields(config, [config.time_grid.time_at(step) for step in steps])
        if references is None:
            raise UnsupportedVelocity(f"No oracle available for velocity '{config.velocity}'")

        fields = []
        for reference in references:
            if reference is None:
                break
            fields.append(reference)
        if not fields:
            raise UnsupportedVelocity(f"No oracle available for velocity '{config.velocity}' at t=0")
        if len(fields) < len(references):
            logger.warning("Oracle rows stop at t=%g (wave breaking or untraceable characteristics)",
                           fields[-1].time)

        steps = steps[:len(fields)]
        courant = Simulation._courant(config, fields[0])
        return Simulation._assemble(config, fields, steps, False, courant, True, references[:len(fields)])

    @staticmethod
    def reference_fields(config: RunConfig, times: Sequence[float]) -> Optional[List[Optional[WaveField]]]:
        """
        Oracle fields at the given times, chosen by the velocity's dependence class.

        Constant velocity uses exact translation, velocity in x and t traces characteristics with
        rk_dt = dt / rk_dt_divisor (None at times where a characteristic leaves the representable
        range), and speed in u only uses the implicit solution, giving None at
        and after the breaking time.

        :param config: RunConfig, the run
        :param times: Sequence[float], the times
        :return: one field (or None) per time, or None when no oracle exists for the velocity
        """
        grid = config.grid
        zeta = config.velocity_expression
        dependence = Expression.classify(zeta)

        if dependence is DependenceClass.CONSTANT:
            wave = TravelingWave(config.initial_condition, float(Expression.evaluate(zeta)))
            return [TravelingWaveOracle.traveling_field(grid, wave, t, config.sign) for t in times]

        if dependence is not DependenceClass.STATE_DEPENDENT:
            try:
                traced = Characteristics.traceable_oracle_fields(grid, times, config.initial_condition, zeta,
                                                                 config.sign, config.rk_dt)
            except (EvalError, NonFiniteTrajectory) as error:
                logger.warning("No oracle available for velocity '%s': %s", config.velocity, error)
                return None
            missing = [t for t, reference in zip(times, traced) if reference is None]
            if missing:
                logger.warning("No oracle at %d of %d times from t=%g on; characteristics leave the "
                               "representable range", len(missing), len(traced), missing[0])
            return traced

        if Expression.variables(zeta) != frozenset('u'):
            logger.warning("No oracle available for velocity '%s'; skipping error norms", config.velocity)
            return None

        shock = ShockAnalysis.detect_shock(config.initial_condition, zeta, grid, config.sign)
        references: List[Optional[WaveField]] = []
        for t in times:
            if t >= shock.shock_time:
                references.append(None)
                continue
            values = ShockAnalysis.implicit_state_solution(config.initial_condition, zeta, grid.coordinates, t,
                                                           config.sign, shock.shock_time)
            references.append(WaveField(grid, t, values))

        if any(reference is None for reference in references):
            logger.warning("Characteristics cross at t=%g; no oracle from then on", shock.shock_time)
        return references

    @staticmethod
    def compare(config_a: RunConfig, config_b: RunConfig, with_oracle: bool = True) -> Comparison:
        """
        Run two configurations on the same domain and compare them at their common persisted steps.

        :param config_a: RunConfig, first run
        :param config_b: RunConfig, second run; may differ in scheme, boundary, sign and cadence
        :param with_oracle: bool, compute oracle error norms for both runs
        :return: Comparison

        :raises ConfigError: If grid, time grid, initial condition or velocity differ.
        """
        config_a.check_same_domain(config_b)
        result_a = Simulation.run(config_a, with_oracle)
        result_b = Simulation.run(config_b, with_oracle)

        index_b = {step: index for index, step in enumerate(result_b.steps)}
        rows = []
        for index_a, step in enumerate(result_a.steps):
            if step not in index_b:
                continue
            field_a = result_a.snapshots[index_a]
            field_b = result_b.snapshots[index_b[step]]
            record_a = result_a.manifest.snapshots[index_a]
            record_b = result_b.manifest.snapshots[index_b[step]]
            rows.append(ComparisonRow(step, field_a.time, record_a.tv, record_b.tv,
                                      Norms.error_norms(field_a, field_b).l2,
                                      record_a.l2_vs_oracle, record_a.linf_vs_oracle,
                                      record_b.l2_vs_oracle, record_b.linf_vs_oracle))

        return Comparison(result_a, result_b, tuple(rows))

    @staticmethod
    def _courant(config: RunConfig, initial: WaveField) -> CourantReport:
        u_range = (float(np.min(initial.values)), float(np.max(initial.values)))
        return Courant.cfl_number(config.velocity_expression, config.grid, config.time_grid, u_range,
                                  CFL_SAMPLES_PER_AXIS)

    @staticmethod
    def _assemble(config: RunConfig, fields: List[WaveField], steps: List[int], blown_up: bool,
                  courant: CourantReport, with_oracle: bool,
                  references: Optional[List[Optional[WaveField]]] = None) -> RunResult:
        if courant.exceeds_unit_bound:
            logger.warning("Courant number %g exceeds 1 at x=%g, t=%g", courant.nu_max, *courant.attained_at)

        if with_oracle and references is None:
            references = Simulation.reference_fields(config, [field.time for field in fields])
        oracle_available = with_oracle and references is not None

        records = []
        for index, (step, field) in enumerate(zip(steps, fields)):
            reference = references[index] if oracle_available else None
            if reference is None:
                records.append(SnapshotRecord(step, field.time, Norms.total_variation(field)))
                continue
            report = Norms.error_norms(field, reference)
            records.append(SnapshotRecord(step, field.time, report.tv, report.l2, report.linf))
            logger.debug("step %d: tv=%g l2=%g linf=%g", step, report.tv, report.l2, report.linf)

        manifest = RunManifest(config, courant.nu_max, oracle_available, tuple(records), blown_up,
                               fields[-1].time, Norms.drift_direction(fields[0], fields[-1]))
        return RunResult(tuple(fields), tuple(steps), manifest)
