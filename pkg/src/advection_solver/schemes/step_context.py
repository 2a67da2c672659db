# File: step_context.py
# Description: Sign convention, boundary policy and per-step context for the steppers
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from advection_solver.errors import DomainError
from advection_solver.expression.nodes import ExpressionNode
from advection_solver.grid.wave_field import WaveField


class SignConvention(Enum):
    """
    Enumeration for the sign of the transport term. Values are the config tokens.
    """
    PAPER_FAITHFUL = 'paper'   # phi_t - zeta*phi_x = 0, transport velocity -zeta
    STANDARD = 'standard'      # phi_t + zeta*phi_x = 0, transport velocity +zeta

    @property
    def orientation(self) -> float:
        """The factor s in phi_t + s*zeta*phi_x = 0."""
        return 1.0 if self is SignConvention.STANDARD else -1.0


class BoundaryKind(Enum):
    """
    Enumeration for endpoint treatments. Values are the config tokens.
    """
    COPY_NEIGHBOR = 'copy'             # endpoint takes the adjacent updated value
    DEGENERATE_STENCIL = 'one_sided'   # a missing neighbor is replaced by the point itself
    PERIODIC = 'periodic'              # point nx is identified with point 0
    FIXED = 'fixed'                    # endpoints pinned to configured values


@dataclass(frozen=True)
class BoundaryPolicy:
    """
    Endpoint treatment, with the pinned values used by BoundaryKind.FIXED.
    """
    kind: BoundaryKind
    left_value: float = 0.0
    right_value: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.left_value) and math.isfinite(self.right_value)):
            raise ValueError(f"Fixed boundary values must be finite, got {self.left_value}, {self.right_value}")

    @classmethod
    def from_token(cls, token: str) -> 'BoundaryPolicy':
        """
        Parse a boundary token: copy | one_sided | periodic | fixed:<left>,<right>

        :param token: str, the token
        :return: BoundaryPolicy

        :raises ValueError: If the token is not recognized or the fixed values are not finite numbers.
        """
        token = token.strip()
        prefix = BoundaryKind.FIXED.value + ':'

        if token.startswith(prefix):
            parts = token[len(prefix):].split(',')
            if len(parts) != 2:
                raise ValueError(f"Fixed boundary needs two values as fixed:<left>,<right>, got '{token}'")
            try:
                left_value, right_value = (float(part) for part in parts)
            except ValueError:
                raise ValueError(f"Fixed boundary values must be numbers, got '{token}'")
            return cls(BoundaryKind.FIXED, left_value, right_value)

        try:
            kind = BoundaryKind(token)
        except ValueError:
            raise ValueError(f"Unknown boundary '{token}'")
        if kind is BoundaryKind.FIXED:
            raise ValueError(f"Fixed boundary needs two values as fixed:<left>,<right>, got '{token}'")
        return cls(kind)

    @property
    def token(self) -> str:
        if self.kind is BoundaryKind.FIXED:
            return f"{self.kind.value}:{self.left_value!r},{self.right_value!r}"
        return self.kind.value


@dataclass(frozen=True)
class StepContext:
    """
    Everything a stepper needs besides the field being advanced.
    """
    zeta: ExpressionNode
    sign: SignConvention
    boundary: BoundaryPolicy
    dt: float
    previous: Optional[WaveField] = None   # level one dt older; read by two-level schemes only

    def __post_init__(self) -> None:
        if not math.isfinite(self.dt) or self.dt <= 0:
            raise DomainError(f"dt must be positive and finite, got {self.dt}")
