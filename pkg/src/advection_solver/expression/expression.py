# File: expression.py
# Description: Parsing, printing, classification and vectorized evaluation of expression trees
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from typing import Dict, FrozenSet, NamedTuple, Optional, Tuple, Union

import numpy as np

from advection_solver.errors import EvalError, NonFiniteValue
from .nodes import (BinaryOperation, BinaryOperator, Constant, DependenceClass, ExpressionNode, FunctionCall,
                    Negation, Variable)
from .parser import ExpressionParser

ArrayLike = Union[float, np.ndarray]

# Integer exponents in this range evaluate by repeated multiplication.
MAX_MULTIPLICATION_EXPONENT = 16

_PRECEDENCE_ADDITIVE = 1
_PRECEDENCE_MULTIPLICATIVE = 2
_PRECEDENCE_NEGATION = 3
_PRECEDENCE_POWER = 4
_PRECEDENCE_ATOM = 5

_FUNCTIONS = {'sin': np.sin, 'cos': np.cos, 'exp': np.exp}


class BoxMaximum(NamedTuple):
    """Largest |value| found on a sample lattice and where it was attained."""
    value: float
    x: float
    t: float
    u: float


class Expression:
    """
    Expression tree operations
    """

    @staticmethod
    def parse(source: str, constants: Optional[Dict[str, float]] = None) -> ExpressionNode:
        """
        Parse expression text into a tree.

        :param source: str, the expression text, e.g. "x^2 + t^2"
        :param constants: Optional[Dict[str, float]], named constants accepted as identifiers
        :return: ExpressionNode, the root of the parsed tree

        :raises ParseError: If the text is empty, malformed, or uses an unknown identifier.
        """
        return ExpressionParser(source, constants).parse()

    @staticmethod
    def constant(value: float) -> ExpressionNode:
        """
        Build the tree for a real constant of any sign.

        :param value: float, the constant
        :return: ExpressionNode, a Constant, or a Negation of one for negative values
        """
        return Constant(float(value)) if value >= 0 else Negation(Constant(-float(value)))

    @staticmethod
    def to_text(node: ExpressionNode) -> str:
        """
        Print a tree as expression text that parses back to the same tree.

        :param node: ExpressionNode, the tree to print
        :return: str, the expression text
        """
        text, _ = Expression._to_text(node)
        return text

    @staticmethod
    def _to_text(node: ExpressionNode) -> Tuple[str, int]:
        if isinstance(node, Constant):
            value = float(node.value)
            text = str(int(value)) if value.is_integer() and value < 1e16 else repr(value)
            return text, _PRECEDENCE_ATOM

        if isinstance(node, Variable):
            return node.name, _PRECEDENCE_ATOM

        if isinstance(node, FunctionCall):
            return f"{node.name}({Expression.to_text(node.argument)})", _PRECEDENCE_ATOM

        if isinstance(node, Negation):
            return "-" + Expression._operand_text(node.operand, _PRECEDENCE_NEGATION), _PRECEDENCE_NEGATION

        if node.operator == BinaryOperator.POWER:
            base = Expression._operand_text(node.left, _PRECEDENCE_ATOM)
            exponent = Expression._operand_text(node.right, _PRECEDENCE_NEGATION)
            return f"{base}^{exponent}", _PRECEDENCE_POWER

        if node.operator in (BinaryOperator.ADD, BinaryOperator.SUBTRACT):
            precedence = _PRECEDENCE_ADDITIVE
        else:
            precedence = _PRECEDENCE_MULTIPLICATIVE

        # Left-associative: the right operand needs strictly higher precedence.
        left = Expression._operand_text(node.left, precedence)
        right = Expression._operand_text(node.right, precedence + 1)
        return f"{left} {node.operator.value} {right}", precedence

    @staticmethod
    def _operand_text(node: ExpressionNode, minimum_precedence: int) -> str:
        text, precedence = Expression._to_text(node)
        return text if precedence >= minimum_precedence else f"({text})"

    @staticmethod
    def variables(node: ExpressionNode) -> FrozenSet[str]:
        """
        Collect the variable names occurring in a tree.

        :param node: ExpressionNode, the tree
        :return: FrozenSet[str], subset of {'x', 't', 'u'}
        """
        if isinstance(node, Variable):
            return frozenset((node.name,))
        if isinstance(node, Constant):
            return frozenset()
        if isinstance(node, Negation):
            return Expression.variables(node.operand)
        if isinstance(node, FunctionCall):
            return Expression.variables(node.argument)
        return Expression.variables(node.left) | Expression.variables(node.right)

    @staticmethod
    def classify(node: ExpressionNode) -> DependenceClass:
        """
        Classify a tree by the variables it depends on.

        :param node: ExpressionNode, the tree
        :return: DependenceClass, STATE_DEPENDENT exactly when u occurs
        """
        names = Expression.variables(node)
        if 'u' in names:
            return DependenceClass.STATE_DEPENDENT
        if 'x' in names and 't' in names:
            return DependenceClass.SPACE_TIME
        if 'x' in names:
            return DependenceClass.SPACE_ONLY
        if 't' in names:
            return DependenceClass.TIME_ONLY
        return DependenceClass.CONSTANT

    @staticmethod
    def evaluate(node: ExpressionNode, x: ArrayLike = 0.0, t: ArrayLike = 0.0, u: ArrayLike = 0.0,
                 allow_non_finite: bool = False) -> ArrayLike:
        """
        Evaluate a tree with real arithmetic, left operand first.

        Arguments broadcast against each other like numpy arrays. Scalar arguments give a float,
        array arguments give an array of the broadcast shape.

        :param node: ExpressionNode, the tree
        :param x: float or np.ndarray, the space coordinate(s)
        :param t: float or np.ndarray, the time(s)
        :param u: float or np.ndarray, the state value(s)
        :param allow_non_finite: bool, return inf/nan elements instead of raising NonFiniteValue
        :return: float or np.ndarray, the value(s)

        :raises EvalError: On division by zero or a negative base with a non-integer exponent.
                           For array arguments, EvalError.index is the flat index
                           of the first offending element in the broadcast shape.
        :raises NonFiniteValue: On a non-finite result, unless allow_non_finite is set.
        """
        variables = {'x': np.asarray(x, dtype=float), 't': np.asarray(t, dtype=float),
                     'u': np.asarray(u, dtype=float)}
        shape = np.broadcast_shapes(*(value.shape for value in variables.values()))

        with np.errstate(all='ignore'):
            result = np.asarray(Expression._evaluate_node(node, variables, shape), dtype=float)

        non_finite = ~np.isfinite(result)
        if non_finite.any() and not allow_non_finite:
            raise NonFiniteValue("Expression evaluated to a non-finite value",
                                 Expression._first_index(non_finite, shape))

        if not shape:
            return float(result)
        return np.broadcast_to(result, shape).copy() if result.shape != shape else result

    @staticmethod
    def _evaluate_node(node: ExpressionNode, variables: Dict[str, np.ndarray], shape: tuple):
        if isinstance(node, Constant):
            return node.value

        if isinstance(node, Variable):
            return variables[node.name]

        if isinstance(node, Negation):
            return -Expression._evaluate_node(node.operand, variables, shape)

        if isinstance(node, FunctionCall):
            return _FUNCTIONS[node.name](Expression._evaluate_node(node.argument, variables, shape))

        left = Expression._evaluate_node(node.left, variables, shape)
        right = Expression._evaluate_node(node.right, variables, shape)

        if node.operator == BinaryOperator.ADD:
            return left + right
        if node.operator == BinaryOperator.SUBTRACT:
            return left - right
        if node.operator == BinaryOperator.MULTIPLY:
            return left * right
        if node.operator == BinaryOperator.DIVIDE:
            zero = np.asarray(right) == 0
            if zero.any():
                raise EvalError("Division by zero", Expression._first_index(zero, shape))
            return left / right
        return Expression._power(left, right, shape)

    @staticmethod
    def _power(base, exponent, shape: tuple):
        exponent_values = np.asarray(exponent, dtype=float)

        if exponent_values.size:
            first = float(exponent_values.flat[0])
            is_uniform = bool(np.all(exponent_values == first))
            if is_uniform and first.is_integer() and 0 <= first <= MAX_MULTIPLICATION_EXPONENT:
                power_shape = np.broadcast_shapes(np.shape(base), exponent_values.shape)
                count = int(first)
                if count == 0:
                    return np.ones(power_shape)
                result = base
                for _ in range(count - 1):
                    result = result * base
                if np.shape(result) != power_shape:
                    result = np.broadcast_to(result, power_shape)
                return result

        fractional_negative = (np.asarray(base) < 0) & (exponent_values != np.floor(exponent_values))
        if fractional_negative.any():
            raise EvalError("Negative base with non-integer exponent",
                            Expression._first_index(fractional_negative, shape))
        return np.power(base, exponent)

    @staticmethod
    def _first_index(mask: np.ndarray, shape: tuple) -> Optional[int]:
        if not shape:
            return None
        flat = np.flatnonzero(np.broadcast_to(mask, shape))
        return int(flat[0]) if flat.size else None

    @staticmethod
    def locate_max_abs(node: ExpressionNode, x_range: Tuple[float, float], t_range: Tuple[float, float],
                       u_range: Tuple[float, float], samples_per_axis: int) -> BoxMaximum:
        """
        Find the largest |value| of a tree on a tensor lattice of sample points.

        Axes of variables that do not occur in the tree collapse to their lower end. The result is
        a lower bound on the true supremum, exact for expressions monotone along each axis.

        :param node: ExpressionNode, the tree
        :param x_range: Tuple[float, float], closed interval for x
        :param t_range: Tuple[float, float], closed interval for t
        :param u_range: Tuple[float, float], closed interval for u
        :param samples_per_axis: int, lattice points per axis including both ends
        :return: BoxMaximum, the maximum of |value| and its location

        :raises ValueError: If samples_per_axis < 2.
        :raises EvalError: Propagated from evaluation.
        """
        if samples_per_axis < 2:
            raise ValueError(f"samples_per_axis must be at least 2, got {samples_per_axis}")

        names = Expression.variables(node)
        axes = []
        for name, (low, high) in (('x', x_range), ('t', t_range), ('u', u_range)):
            if name in names:
                axes.append(np.linspace(low, high, samples_per_axis))
            else:
                axes.append(np.array([float(low)]))

        x_values, t_values, u_values = np.meshgrid(*axes, indexing='ij')
        magnitude = np.abs(Expression.evaluate(node, x_values, t_values, u_values))
        position = np.unravel_index(int(np.argmax(magnitude)), magnitude.shape)

        return BoxMaximum(float(magnitude[position]), float(x_values[position]),
                          float(t_values[position]), float(u_values[position]))

    @staticmethod
    def max_abs_on_box(node: ExpressionNode, x_range: Tuple[float, float], t_range: Tuple[float, float],
                       u_range: Tuple[float, float], samples_per_axis: int) -> float:
        """
        Largest |value| of a tree on a tensor lattice of sample points.

        :return: float, see locate_max_abs
        """
        return Expression.locate_max_abs(node, x_range, t_range, u_range, samples_per_axis).value
