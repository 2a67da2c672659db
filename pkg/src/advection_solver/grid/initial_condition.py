# File: initial_condition.py
# Description: Initial data given as an expression of x
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from dataclasses import dataclass
from typing import Dict, Optional, Union

import numpy as np

from advection_solver.errors import DomainError
from advection_solver.expression.expression import Expression
from advection_solver.expression.nodes import ExpressionNode


@dataclass(frozen=True)
class InitialCondition:
    """
    Initial data f(x). The expression may only use the variable x.
    """
    expression: ExpressionNode

    def __post_init__(self) -> None:
        extra = Expression.variables(self.expression) - {'x'}
        if extra:
            raise DomainError(f"Initial condition may only depend on x, found {', '.join(sorted(extra))}")

    @classmethod
    def from_text(cls, source: str, constants: Optional[Dict[str, float]] = None) -> 'InitialCondition':
        return cls(Expression.parse(source, constants))

    def evaluate(self, x: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
        """
        :param x: float or np.ndarray, coordinate(s)
        :return: f(x), same shape as x

        :raises EvalError: If f is not finite at some coordinate.
        """
        return Expression.evaluate(self.expression, x=x)

    def to_text(self) -> str:
        return Expression.to_text(self.expression)
