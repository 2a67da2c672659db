# File: expression_test_cases.py
# Description: Test case fixtures for expression parsing, evaluation and classification
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import math

from advection_solver.expression.nodes import (BinaryOperation, BinaryOperator, Constant, DependenceClass,
                                               FunctionCall, Negation, Variable)

X = Variable('x')
T = Variable('t')
U = Variable('u')

PARSE_TESTS = [
    {
        "id": "sum_of_variables",
        "description": "Velocity law x + t",
        "input": "x + t",
        "expected": BinaryOperation(BinaryOperator.ADD, X, T),
    },
    {
        "id": "time_squared",
        "description": "Velocity law t^2",
        "input": "t^2",
        "expected": BinaryOperation(BinaryOperator.POWER, T, Constant(2.0)),
    },
    {
        "id": "sum_of_squares",
        "description": "Velocity law x^2 + t^2",
        "input": "x^2 + t^2",
        "expected": BinaryOperation(BinaryOperator.ADD,
                                    BinaryOperation(BinaryOperator.POWER, X, Constant(2.0)),
                                    BinaryOperation(BinaryOperator.POWER, T, Constant(2.0))),
    },
    {
        "id": "negation_looser_than_power",
        "description": "-x^2 is -(x^2)",
        "input": "-x^2",
        "expected": Negation(BinaryOperation(BinaryOperator.POWER, X, Constant(2.0))),
    },
    {
        "id": "negation_tighter_than_product",
        "description": "-x * t is (-x) * t",
        "input": "-x * t",
        "expected": BinaryOperation(BinaryOperator.MULTIPLY, Negation(X), T),
    },
    {
        "id": "power_right_associative",
        "description": "x^2^3 is x^(2^3)",
        "input": "x^2^3",
        "expected": BinaryOperation(BinaryOperator.POWER, X,
                                    BinaryOperation(BinaryOperator.POWER, Constant(2.0), Constant(3.0))),
    },
    {
        "id": "negative_exponent",
        "description": "The exponent may carry a unary minus",
        "input": "2^-1",
        "expected": BinaryOperation(BinaryOperator.POWER, Constant(2.0), Negation(Constant(1.0))),
    },
    {
        "id": "subtraction_left_associative",
        "description": "x - t - u is (x - t) - u",
        "input": "x - t - u",
        "expected": BinaryOperation(BinaryOperator.SUBTRACT, BinaryOperation(BinaryOperator.SUBTRACT, X, T), U),
    },
    {
        "id": "function_call",
        "description": "Built-in function with a parenthesized argument",
        "input": "sin(x) * exp(-t)",
        "expected": BinaryOperation(BinaryOperator.MULTIPLY, FunctionCall('sin', X),
                                    FunctionCall('exp', Negation(T))),
    },
    {
        "id": "whitespace_insignificant",
        "description": "Whitespace between tokens is ignored",
        "input": "  ( x+t ) /2 ",
        "expected": BinaryOperation(BinaryOperator.DIVIDE, BinaryOperation(BinaryOperator.ADD, X, T), Constant(2.0)),
    },
    {
        "id": "scientific_number",
        "description": "Numbers accept exponents",
        "input": "1.5e-3",
        "expected": Constant(1.5e-3),
    },
]

PARSE_ERROR_TESTS = [
    {
        "id": "operator_after_operator",
        "description": "Malformed input reports the offset of the offending token",
        "input": "2 + * 3",
        "offset": 4,
    },
    {
        "id": "empty",
        "description": "Empty input",
        "input": "",
        "offset": 0,
    },
    {
        "id": "blank",
        "description": "Whitespace-only input",
        "input": "   ",
        "offset": 0,
    },
    {
        "id": "unknown_identifier",
        "description": "Identifiers other than variables, functions and constants are rejected",
        "input": "x + y",
        "offset": 4,
    },
    {
        "id": "unknown_character",
        "description": "Characters outside the grammar",
        "input": "x $ 2",
        "offset": 2,
    },
    {
        "id": "missing_close_paren",
        "description": "Unbalanced parentheses",
        "input": "(x + t",
        "offset": 6,
    },
    {
        "id": "function_without_paren",
        "description": "Function names need an argument list",
        "input": "sin x",
        "offset": 4,
    },
    {
        "id": "trailing_token",
        "description": "Two atoms in a row",
        "input": "x t",
        "offset": 2,
    },
    {
        "id": "trailing_operator",
        "description": "Missing right operand",
        "input": "x +",
        "offset": 3,
    },
]

EVALUATION_TESTS = [
    {
        "id": "sum_of_squares",
        "description": "x^2 + t^2 at (2, 3)",
        "input": "x^2 + t^2",
        "x": 2.0, "t": 3.0, "u": 0.0,
        "expected": 13.0,
    },
    {
        "id": "sum_at_run_extremes",
        "description": "x + t at the far corner of a [0, 4 pi] x [0, 15] run",
        "input": "x + t",
        "x": 4 * math.pi, "t": 15.0, "u": 0.0,
        "expected": 4 * math.pi + 15.0,
    },
    {
        "id": "state",
        "description": "u evaluates to the state argument",
        "input": "u",
        "x": 1.0, "t": 2.0, "u": -0.5,
        "expected": -0.5,
    },
    {
        "id": "negative_base_integer_exponent",
        "description": "Negative base with an integer exponent",
        "input": "x^3",
        "x": -2.0, "t": 0.0, "u": 0.0,
        "expected": -8.0,
    },
    {
        "id": "large_integer_exponent",
        "description": "Integer exponent beyond the multiplication range",
        "input": "x^20",
        "x": -1.0, "t": 0.0, "u": 0.0,
        "expected": 1.0,
    },
    {
        "id": "zero_exponent",
        "description": "x^0 is 1",
        "input": "x^0",
        "x": 0.0, "t": 0.0, "u": 0.0,
        "expected": 1.0,
    },
    {
        "id": "fractional_exponent",
        "description": "Positive base with a fractional exponent",
        "input": "x^0.5",
        "x": 4.0, "t": 0.0, "u": 0.0,
        "expected": 2.0,
    },
    {
        "id": "functions",
        "description": "cos(0) + exp(0) + sin(0)",
        "input": "cos(x) + exp(t) + sin(u)",
        "x": 0.0, "t": 0.0, "u": 0.0,
        "expected": 2.0,
    },
]

EVALUATION_ERROR_TESTS = [
    {
        "id": "division_by_zero",
        "description": "1/x at x = 0",
        "input": "1/x",
        "x": 0.0, "t": 0.0, "u": 0.0,
    },
    {
        "id": "negative_base_fractional_exponent",
        "description": "(-8)^(1/3) has no real value here",
        "input": "x^(1/3)",
        "x": -8.0, "t": 0.0, "u": 0.0,
    },
    {
        "id": "overflow",
        "description": "exp of a large argument is not finite",
        "input": "exp(x)",
        "x": 1000.0, "t": 0.0, "u": 0.0,
    },
]

CLASSIFY_TESTS = [
    {"id": "constant", "description": "No variables", "input": "1", "expected": DependenceClass.CONSTANT},
    {"id": "constant_expression", "description": "Constant arithmetic", "input": "2*3 - 1", "expected": DependenceClass.CONSTANT},
    {"id": "space_only", "description": "x only", "input": "x^2", "expected": DependenceClass.SPACE_ONLY},
    {"id": "time_only", "description": "t only", "input": "t^2", "expected": DependenceClass.TIME_ONLY},
    {"id": "space_time", "description": "x and t", "input": "x + t", "expected": DependenceClass.SPACE_TIME},
    {"id": "state", "description": "u alone", "input": "u", "expected": DependenceClass.STATE_DEPENDENT},
    {"id": "state_with_space", "description": "u dominates x and t", "input": "x * t + u", "expected": DependenceClass.STATE_DEPENDENT},
]

MAX_ABS_TESTS = [
    {
        "id": "constant",
        "description": "A constant on any box",
        "input": "1",
        "x_range": (-5.0, 5.0), "t_range": (0.0, 10.0), "u_range": (-1.0, 1.0),
        "expected": 1.0,
    },
    {
        "id": "sum_corner",
        "description": "x + t attains its maximum at the far corner",
        "input": "x + t",
        "x_range": (0.0, 4 * math.pi), "t_range": (0.0, 15.0), "u_range": (0.0, 0.0),
        "expected": 4 * math.pi + 15.0,
    },
    {
        "id": "time_squared",
        "description": "t^2 up to t = 100",
        "input": "t^2",
        "x_range": (0.0, 1.0), "t_range": (0.0, 100.0), "u_range": (0.0, 0.0),
        "expected": 10000.0,
    },
    {
        "id": "negative_values",
        "description": "The maximum is taken of the magnitude",
        "input": "-u",
        "x_range": (0.0, 1.0), "t_range": (0.0, 1.0), "u_range": (-3.0, 1.0),
        "expected": 3.0,
    },
]
