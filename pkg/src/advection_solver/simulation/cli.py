# File: cli.py
# Description: Command-line interface: run, oracle, compare, convergence, stability and schemes
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import argparse
import json
import logging
import math
import sys
from typing import List, Optional

from advection_solver import __version__
from advection_solver.analysis.amplification import Amplification
from advection_solver.analysis.convergence import Convergence
from advection_solver.errors import UnstableRun
from advection_solver.schemes.definitions.register.register_scheme_definitions import build_scheme_registry
from advection_solver.schemes.definitions.scheme_definition import SchemeId
from advection_solver.schemes.step_context import SignConvention
from .output_writer import OutputWriter
from .run_config import RunConfig
from .simulation import Simulation

logger = logging.getLogger(__name__)

EXIT_SUCCESS = 0
EXIT_INPUT_ERROR = 1
EXIT_BLOWN_UP = 2
EXIT_IO_ERROR = 3

STABILITY_COLUMNS = ('scheme', 'nu', 'theta', 'analytic_mag', 'empirical_mag', 'rel_err')
CONVERGENCE_COLUMNS = ('level', 'nx', 'nt', 'dx', 'l2')


def cmd_run(args: argparse.Namespace) -> int:
    """Run a configuration and write its snapshots and manifest."""
    config = RunConfig.from_file(args.config)
    result = Simulation.run(config)
    OutputWriter.write_outputs(result, args.out)

    if result.manifest.blown_up:
        print(f"error: run blew up; reached t = {result.manifest.final_time_reached!r} of {config.t_end!r}",
              file=sys.stderr)
        return EXIT_BLOWN_UP
    return EXIT_SUCCESS


def cmd_oracle(args: argparse.Namespace) -> int:
    """Write the oracle solution of a configuration with the run's snapshot cadence."""
    config = RunConfig.from_file(args.config)
    OutputWriter.write_outputs(Simulation.run_oracle(config), args.out)
    return EXIT_SUCCESS


def cmd_compare(args: argparse.Namespace) -> int:
    """Run two configurations on the same domain and write both plus comparison.csv."""
    config_a = RunConfig.from_file(args.config_a)
    config_b = RunConfig.from_file(args.config_b)
    comparison = Simulation.compare(config_a, config_b)
    OutputWriter.write_comparison(comparison, args.out)

    if comparison.result_a.manifest.blown_up or comparison.result_b.manifest.blown_up:
        print("error: at least one run blew up", file=sys.stderr)
        return EXIT_BLOWN_UP
    return EXIT_SUCCESS


def cmd_convergence(args: argparse.Namespace) -> int:
    """Print the refinement ladder and the fitted order."""
    config = RunConfig.from_file(args.config)
    report = Convergence.convergence_order(config, args.levels)

    print(",".join(CONVERGENCE_COLUMNS))
    for level in report.levels:
        print(f"{level.level},{level.nx},{level.nt},{OutputWriter.format_number(level.dx)},"
              f"{OutputWriter.format_number(level.l2)}")
    print(f"order,{'undefined' if report.order is None else OutputWriter.format_number(report.order)}")
    return EXIT_SUCCESS


def cmd_stability(args: argparse.Namespace) -> int:
    """Print analytic and measured amplification on theta = pi*m/k, m = 1..k."""
    if args.theta_samples < 1:
        raise ValueError(f"--theta-samples must be at least 1, got {args.theta_samples}")

    schemes = list(SchemeId) if args.scheme == 'all' else [SchemeId(args.scheme)]
    sign = SignConvention(args.sign)
    grid_size = 2 * args.theta_samples

    print(",".join(STABILITY_COLUMNS))
    for scheme in schemes:
        for m in range(1, args.theta_samples + 1):
            theta = math.pi * m / args.theta_samples
            analytic = Amplification.amplification_factor(scheme, args.nu, theta, sign).magnitude
            empirical = Amplification.empirical_growth(scheme, args.nu, theta, args.steps, grid_size, sign)
            rel_err = abs(empirical - analytic) / analytic if analytic > 0 else abs(empirical - analytic)
            print(",".join([scheme.value] + [OutputWriter.format_number(value)
                                             for value in (args.nu, theta, analytic, empirical, rel_err)]))
    return EXIT_SUCCESS


def cmd_schemes(args: argparse.Namespace) -> int:
    """Print the scheme registry as JSON."""
    print(json.dumps(build_scheme_registry().as_dict(), indent=2))
    return EXIT_SUCCESS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='advection-solver',
        description='1D advection solvers, characteristics oracle and stability diagnostics.')
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='logging level for messages on stderr (default: WARNING)')
    subparsers = parser.add_subparsers(dest='command', required=True)

    run_parser = subparsers.add_parser('run', help='run a configuration')
    run_parser.add_argument('config', help='configuration file')
    run_parser.add_argument('--out', required=True, help='output directory')
    run_parser.set_defaults(handler=cmd_run)

    oracle_parser = subparsers.add_parser('oracle', help='write the oracle solution of a configuration')
    oracle_parser.add_argument('config', help='configuration file')
    oracle_parser.add_argument('--out', required=True, help='output directory')
    oracle_parser.set_defaults(handler=cmd_oracle)

    compare_parser = subparsers.add_parser('compare', help='compare two runs on the same domain')
    compare_parser.add_argument('config_a', help='first configuration file')
    compare_parser.add_argument('config_b', help='second configuration file')
    compare_parser.add_argument('--out', required=True, help='output directory')
    compare_parser.set_defaults(handler=cmd_compare)

    convergence_parser = subparsers.add_parser('convergence', help='measure the order of accuracy')
    convergence_parser.add_argument('config', help='configuration file of the coarsest level')
    convergence_parser.add_argument('--levels', type=int, default=4, help='refinement levels (default: 4)')
    convergence_parser.set_defaults(handler=cmd_convergence)

    stability_parser = subparsers.add_parser('stability', help='tabulate amplification factors')
    stability_parser.add_argument('--scheme', required=True, choices=[s.value for s in SchemeId] + ['all'])
    stability_parser.add_argument('--nu', type=float, required=True, help='Courant number')
    stability_parser.add_argument('--theta-samples', type=int, default=8, help='wave numbers in (0, pi] (default: 8)')
    stability_parser.add_argument('--sign', default=SignConvention.PAPER_FAITHFUL.value,
                                  choices=[s.value for s in SignConvention])
    stability_parser.add_argument('--steps', type=int, default=100, help='steps of the measured growth (default: 100)')
    stability_parser.set_defaults(handler=cmd_stability)

    schemes_parser = subparsers.add_parser('schemes', help='print the scheme registry as JSON')
    schemes_parser.set_defaults(handler=cmd_schemes)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point. Returns 0 on success, 1 on configuration, parse or evaluation errors, 2 when a
    run blew up, and 3 on I/O errors.
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(level=getattr(logging, args.log_level), stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

    try:
        return args.handler(args)
    except UnstableRun as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_BLOWN_UP
    except OSError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_IO_ERROR
    except (ValueError, ArithmeticError) as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
