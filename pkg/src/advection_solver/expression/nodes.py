# File: nodes.py
# Description: Abstract syntax tree nodes for velocity laws and initial conditions
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union


VARIABLES = ('x', 't', 'u')
FUNCTIONS = ('sin', 'cos', 'exp')


class BinaryOperator(Enum):
    """
    Enumeration for binary operators of the expression grammar.
    """
    ADD = '+'
    SUBTRACT = '-'
    MULTIPLY = '*'
    DIVIDE = '/'
    POWER = '^'


class DependenceClass(Enum):
    """
    Enumeration for the variables a velocity law depends on.
    """
    CONSTANT = 'constant'               # none of x, t, u occurs
    SPACE_ONLY = 'space_only'           # x only
    TIME_ONLY = 'time_only'             # t only
    SPACE_TIME = 'space_time'           # x and t
    STATE_DEPENDENT = 'state_dependent' # u occurs, possibly together with x and t


@dataclass(frozen=True)
class Constant:
    """A non-negative real literal. Negative values are expressed with Negation."""
    value: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value) or self.value < 0:
            raise ValueError(f"Constant must be finite and non-negative, got {self.value}")


@dataclass(frozen=True)
class Variable:
    """One of the variables x, t, u."""
    name: str

    def __post_init__(self) -> None:
        if self.name not in VARIABLES:
            raise ValueError(f"Unknown variable '{self.name}'")


@dataclass(frozen=True)
class Negation:
    """Unary minus."""
    operand: 'ExpressionNode'


@dataclass(frozen=True)
class BinaryOperation:
    """Binary operator node; the left operand is evaluated first."""
    operator: BinaryOperator
    left: 'ExpressionNode'
    right: 'ExpressionNode'


@dataclass(frozen=True)
class FunctionCall:
    """Call of a built-in function of one argument."""
    name: str
    argument: 'ExpressionNode'

    def __post_init__(self) -> None:
        if self.name not in FUNCTIONS:
            raise ValueError(f"Unknown function '{self.name}'")


ExpressionNode = Union[Constant, Variable, Negation, BinaryOperation, FunctionCall]
