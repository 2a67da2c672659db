# File: run_config.py
# Description: Run configuration: line-oriented key = value files, validation and serialization
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, Optional

from advection_solver.errors import ConfigError, DomainError, EvalError, ParseError
from advection_solver.expression.expression import Expression
from advection_solver.expression.nodes import DependenceClass, ExpressionNode
from advection_solver.file.file_system import FileSystem
from advection_solver.grid.discretization import Grid1D, TimeGrid
from advection_solver.grid.initial_condition import InitialCondition
from advection_solver.schemes.definitions.register.register_scheme_definitions import build_scheme_registry
from advection_solver.schemes.definitions.scheme_definition import SchemeId
from advection_solver.schemes.step_context import BoundaryPolicy, SignConvention

EXACT_SCHEME = 'exact'
CONFIG_CONSTANTS = {'pi': math.pi}
DEFAULT_RK_DT_DIVISOR = 10

CONFIG_KEYS = ('grid.a', 'grid.b', 'grid.nx', 'time.t_end', 'time.nt', 'initial', 'velocity', 'scheme',
               'boundary', 'sign', 'snapshot_every', 'rk_dt_divisor')
REQUIRED_KEYS = ('grid.a', 'grid.b', 'grid.nx', 'time.t_end', 'time.nt', 'initial', 'velocity', 'scheme', 'sign')


def default_snapshot_every(nt: int) -> int:
    """About 100 persisted rows per run, at least every step."""
    return max(1, nt // 100)


@dataclass(frozen=True)
class RunConfig:
    """
    Every knob of one run. Construction validates the whole configuration.

    USAGE:
        config = RunConfig.from_file("configs/linear_sine.cfg")
        grid, time_grid = config.grid, config.time_grid
    """
    a: float
    b: float
    nx: int
    t_end: float
    nt: int
    initial: str
    velocity: str
    scheme: str
    boundary: Optional[BoundaryPolicy]
    sign: SignConvention
    snapshot_every: int
    rk_dt_divisor: int = DEFAULT_RK_DT_DIVISOR

    _grid: Grid1D = field(init=False, repr=False, compare=False)
    _time_grid: TimeGrid = field(init=False, repr=False, compare=False)
    _initial_condition: InitialCondition = field(init=False, repr=False, compare=False)
    _velocity_expression: ExpressionNode = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        try:
            object.__setattr__(self, '_grid', Grid1D(self.a, self.b, self.nx))
            object.__setattr__(self, '_time_grid', TimeGrid(self.t_end, self.nt))
        except DomainError as error:
            raise ConfigError(str(error)) from error

        try:
            initial_condition = InitialCondition.from_text(self.initial, CONFIG_CONSTANTS)
        except ParseError as error:
            raise ConfigError(f"initial: {error}") from error
        except DomainError as error:
            raise ConfigError(f"initial: {error}") from error
        object.__setattr__(self, '_initial_condition', initial_condition)

        try:
            object.__setattr__(self, '_velocity_expression', Expression.parse(self.velocity, CONFIG_CONSTANTS))
        except ParseError as error:
            raise ConfigError(f"velocity: {error}") from error

        if self.scheme != EXACT_SCHEME and not build_scheme_registry().is_key_present(self.scheme):
            valid = ', '.join(build_scheme_registry().list_keys() + [EXACT_SCHEME])
            raise ConfigError(f"scheme: unknown scheme '{self.scheme}' (valid: {valid})")
        if self.scheme != EXACT_SCHEME and self.boundary is None:
            raise ConfigError(f"boundary: required for scheme '{self.scheme}'")

        if self.snapshot_every < 1 or self.snapshot_every > self.nt:
            raise ConfigError(f"snapshot_every: must lie in 1..{self.nt}, got {self.snapshot_every}")
        if self.rk_dt_divisor < 1:
            raise ConfigError(f"rk_dt_divisor: must be at least 1, got {self.rk_dt_divisor}")

    @property
    def grid(self) -> Grid1D:
        return self._grid

    @property
    def time_grid(self) -> TimeGrid:
        return self._time_grid

    @property
    def initial_condition(self) -> InitialCondition:
        return self._initial_condition

    @property
    def velocity_expression(self) -> ExpressionNode:
        return self._velocity_expression

    @property
    def is_exact(self) -> bool:
        return self.scheme == EXACT_SCHEME

    @property
    def scheme_id(self) -> Optional[SchemeId]:
        return None if self.is_exact else SchemeId(self.scheme)

    @property
    def rk_dt(self) -> float:
        """Largest oracle integration step, dt / rk_dt_divisor."""
        return self.time_grid.dt / self.rk_dt_divisor

    def refined(self, factor: int) -> 'RunConfig':
        """
        The same run with nx, nt and snapshot_every multiplied by factor (fixed Courant number).
        """
        return replace(self, nx=self.nx * factor, nt=self.nt * factor, snapshot_every=self.snapshot_every * factor)

    def check_same_domain(self, other: 'RunConfig') -> None:
        """
        :raises ConfigError: If grid, time grid, initial condition or velocity differ.
        """
        mine = (self.grid, self.time_grid, self.initial_condition.expression, self.velocity_expression)
        theirs = (other.grid, other.time_grid, other.initial_condition.expression, other.velocity_expression)
        names = ('grid', 'time', 'initial', 'velocity')
        for name, left, right in zip(names, mine, theirs):
            if left != right:
                raise ConfigError(f"Configurations differ in {name}")

    def as_dict(self) -> Dict[str, Any]:
        """
        Convert this RunConfig to a dictionary for JSON serialization, keys in config file order.

        :return: Dictionary representation of the configuration
        """
        return {
            'grid.a': self.a,
            'grid.b': self.b,
            'grid.nx': self.nx,
            'time.t_end': self.t_end,
            'time.nt': self.nt,
            'initial': self.initial,
            'velocity': self.velocity,
            'scheme': self.scheme,
            'boundary': self.boundary.token if self.boundary is not None else None,
            'sign': self.sign.value,
            'snapshot_every': self.snapshot_every,
            'rk_dt_divisor': self.rk_dt_divisor,
        }

    def to_text(self) -> str:
        """
        Serialize as a configuration file that from_text reads back to an equal RunConfig.
        """
        lines = []
        for key, value in self.as_dict().items():
            if value is None:
                continue
            lines.append(f"{key} = {value!r}" if isinstance(value, float) else f"{key} = {value}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunConfig':
        """
        Create a RunConfig from a dictionary keyed like the configuration file.

        Values may be strings as read from a file, or numbers as produced by as_dict().

        :param data: dict[str, Any], configuration values
        :return: RunConfig

        :raises ConfigError: If keys are unknown or missing, or a value is invalid.
        """
        unknown = [key for key in data if key not in CONFIG_KEYS]
        if unknown:
            raise ConfigError(f"Unknown configuration key(s): {', '.join(unknown)}")
        missing = [key for key in REQUIRED_KEYS if key not in data or data[key] is None]
        if missing:
            raise ConfigError(f"Missing configuration key(s): {', '.join(missing)}")

        scheme = str(data['scheme']).strip()
        nt = cls._to_integer('time.nt', data['time.nt'])

        boundary = None
        if data.get('boundary') is not None and scheme != EXACT_SCHEME:
            try:
                boundary = BoundaryPolicy.from_token(str(data['boundary']))
            except ValueError as error:
                raise ConfigError(f"boundary: {error}") from error

        try:
            sign = SignConvention(str(data['sign']).strip())
        except ValueError:
            raise ConfigError(f"sign: unknown sign convention '{data['sign']}' (valid: paper, standard)")

        snapshot_every = (cls._to_integer('snapshot_every', data['snapshot_every'])
                          if data.get('snapshot_every') is not None else default_snapshot_every(nt))
        rk_dt_divisor = (cls._to_integer('rk_dt_divisor', data['rk_dt_divisor'])
                         if data.get('rk_dt_divisor') is not None else DEFAULT_RK_DT_DIVISOR)

        return cls(
            a=cls._to_real('grid.a', data['grid.a']),
            b=cls._to_real('grid.b', data['grid.b']),
            nx=cls._to_integer('grid.nx', data['grid.nx']),
            t_end=cls._to_real('time.t_end', data['time.t_end']),
            nt=nt,
            initial=str(data['initial']).strip(),
            velocity=str(data['velocity']).strip(),
            scheme=scheme,
            boundary=boundary,
            sign=sign,
            snapshot_every=snapshot_every,
            rk_dt_divisor=rk_dt_divisor
        )

    @classmethod
    def from_text(cls, text: str, source: str = "<text>") -> 'RunConfig':
        """
        Parse a configuration file body.

        Lines are `key = value`; blank lines and lines starting with '#' are ignored.

        :param text: str, the file contents
        :param source: str, name used in error messages
        :return: RunConfig

        :raises ConfigError: On malformed lines, unknown or duplicated keys, and invalid values.
        """
        data: Dict[str, str] = {}
        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.strip()
            if not line or line.startswith('#'):
                continue
            if '=' not in line:
                raise ConfigError(f"{source}:{line_number}: expected 'key = value', got '{line}'")
            key, value = (part.strip() for part in line.split('=', 1))
            if key not in CONFIG_KEYS:
                raise ConfigError(f"{source}:{line_number}: unknown key '{key}'")
            if key in data:
                raise ConfigError(f"{source}:{line_number}: duplicated key '{key}'")
            if not value:
                raise ConfigError(f"{source}:{line_number}: empty value for '{key}'")
            data[key] = value

        return cls.from_dict(data)

    @classmethod
    def from_file(cls, file_path: str) -> 'RunConfig':
        """
        Read and parse a configuration file.

        :raises IoError: If the file cannot be read.
        :raises ConfigError: If the contents are invalid.
        """
        return cls.from_text(FileSystem.read_text_file(file_path), file_path)

    @staticmethod
    def _to_real(key: str, value: Any) -> float:
        if isinstance(value, (int, float)) and not isinstance(value, bool):
            return float(value)
        try:
            node = Expression.parse(str(value), CONFIG_CONSTANTS)
        except ParseError as error:
            raise ConfigError(f"{key}: {error}") from error
        if Expression.classify(node) is not DependenceClass.CONSTANT:
            raise ConfigError(f"{key}: must be a constant expression, got '{value}'")
        try:
            return float(Expression.evaluate(node))
        except EvalError as error:
            raise ConfigError(f"{key}: {error}") from error

    @staticmethod
    def _to_integer(key: str, value: Any) -> int:
        if isinstance(value, int) and not isinstance(value, bool):
            return value
        try:
            return int(str(value).strip())
        except ValueError:
            raise ConfigError(f"{key}: must be an integer, got '{value}'")
