# File: errors.py
# Description: Exception types raised by the advection solver
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

from typing import Optional


class DomainError(ValueError):
    """
    Raised when grid, time grid or field parameters violate their invariants.
    """


class ParseError(ValueError):
    """
    Raised when expression text cannot be parsed.

    :param message: str, description of the problem
    :param offset: int, character offset into the source where parsing failed
    :param expected: str, description of the token that was expected at the offset
    """

    def __init__(self, message: str, offset: int, expected: str = "") -> None:
        self.offset = offset
        self.expected = expected
        super().__init__(f"{message} at offset {offset}" + (f" (expected {expected})" if expected else ""))


class EvalError(ValueError):
    """
    Raised when an expression cannot be evaluated to a finite real.

    :param message: str, description of the problem
    :param index: Optional[int], flat index of the first offending element for array evaluation
    """

    def __init__(self, message: str, index: Optional[int] = None) -> None:
        self.index = index
        super().__init__(message)


class NonFiniteValue(EvalError):
    """
    Raised when an expression overflows or otherwise evaluates to inf or nan at finite arguments.
    """


class UnsupportedVelocity(ValueError):
    """
    Raised when an oracle is asked to handle a velocity law outside its dependence class.
    """


class MissingPreviousLevel(ValueError):
    """
    Raised when a two-level scheme is stepped without the previous time level.
    """


class BlownUpField(ValueError):
    """
    Raised when a field carrying the blown-up marker is passed to a stepper.
    """


class NonFiniteTrajectory(ArithmeticError):
    """
    Raised when a characteristic trace leaves the representable range.
    """


class NoBracket(ValueError):
    """
    Raised when no sign change is found while bracketing a characteristic foot point.
    """


class PostShock(ValueError):
    """
    Raised when an implicit solution is requested at or after the wave-breaking time.
    """


class GridMismatch(ValueError):
    """
    Raised when two fields that must share a grid do not.
    """


class UnstableRun(RuntimeError):
    """
    Raised when a refinement study contains a run that blew up.
    """


class ConfigError(ValueError):
    """
    Raised when a run configuration is invalid.
    """


class IoError(OSError):
    """
    Raised when reading or writing a file fails.

    :param message: str, description of the problem
    :param path: str, the path involved
    """

    def __init__(self, message: str, path: str) -> None:
        self.path = path
        super().__init__(f"{message}: {path}")
