# File: parser.py
# Description: Recursive-descent parser for velocity laws and initial conditions
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import math
from typing import Dict, List, Optional

from advection_solver.errors import ParseError
from .nodes import (BinaryOperation, BinaryOperator, Constant, ExpressionNode, FunctionCall, FUNCTIONS,
                    Negation, Variable, VARIABLES)
from .tokenizer import Token, Tokenizer


class ExpressionParser:
    """
    Recursive-descent parser for the expression grammar.

    Grammar, lowest precedence first:
        expression := term (('+' | '-') term)*
        term       := unary (('*' | '/') unary)*
        unary      := '-' unary | power
        power      := atom ('^' unary)?
        atom       := number | variable | function '(' expression ')' | '(' expression ')'

    Power is right-associative and binds tighter than unary minus, so '-x^2' is -(x^2)
    and '2^-1' is 2^(-1).

    USAGE:
        node = ExpressionParser("x^2 + t^2").parse()
    """

    _ADDITIVE = {'+': BinaryOperator.ADD, '-': BinaryOperator.SUBTRACT}
    _MULTIPLICATIVE = {'*': BinaryOperator.MULTIPLY, '/': BinaryOperator.DIVIDE}

    def __init__(self, source: str, constants: Optional[Dict[str, float]] = None) -> None:
        """
        Initialize the parser over a source text.

        :param source: str, the expression text
        :param constants: Optional[Dict[str, float]], named constants accepted as identifiers (e.g. {'pi': math.pi})
        """
        self._source = source
        self._constants = dict(constants) if constants else {}
        self._tokens: List[Token] = []
        self._position = 0

    def parse(self) -> ExpressionNode:
        """
        Parse the whole source into an expression tree.

        :return: ExpressionNode, the root of the tree

        :raises ParseError: If the source is empty, malformed, or contains an unknown identifier.
        """
        if not self._source.strip():
            raise ParseError("Empty expression", 0, "an expression")

        self._tokens = Tokenizer.tokenize(self._source)
        self._position = 0

        node = self._parse_expression()
        token = self._peek()
        if token.kind != 'end':
            raise ParseError(f"Unexpected '{token.text}'", token.offset, "an operator or end of input")
        return node

    def _peek(self) -> Token:
        return self._tokens[self._position]

    def _advance(self) -> Token:
        token = self._tokens[self._position]
        if token.kind != 'end':
            self._position += 1
        return token

    def _is_operator(self, token: Token, symbols) -> bool:
        return token.kind == 'operator' and token.text in symbols

    def _parse_expression(self) -> ExpressionNode:
        node = self._parse_term()
        while self._is_operator(self._peek(), self._ADDITIVE):
            operator = self._ADDITIVE[self._advance().text]
            node = BinaryOperation(operator, node, self._parse_term())
        return node

    def _parse_term(self) -> ExpressionNode:
        node = self._parse_unary()
        while self._is_operator(self._peek(), self._MULTIPLICATIVE):
            operator = self._MULTIPLICATIVE[self._advance().text]
            node = BinaryOperation(operator, node, self._parse_unary())
        return node

    def _parse_unary(self) -> ExpressionNode:
        if self._is_operator(self._peek(), '-'):
            self._advance()
            return Negation(self._parse_unary())
        return self._parse_power()

    def _parse_power(self) -> ExpressionNode:
        base = self._parse_atom()
        if self._is_operator(self._peek(), '^'):
            self._advance()
            return BinaryOperation(BinaryOperator.POWER, base, self._parse_unary())
        return base

    def _parse_atom(self) -> ExpressionNode:
        token = self._advance()

        if token.kind == 'number':
            value = float(token.text)
            if not math.isfinite(value):
                raise ParseError(f"Number '{token.text}' is out of range", token.offset)
            return Constant(value)

        if token.kind == 'lparen':
            node = self._parse_expression()
            self._expect('rparen', "')'")
            return node

        if token.kind == 'identifier':
            return self._parse_identifier(token)

        description = f"'{token.text}'" if token.text else "end of input"
        raise ParseError(f"Unexpected {description}", token.offset, "a number, variable, function or '('")

    def _parse_identifier(self, token: Token) -> ExpressionNode:
        name = token.text

        if name in VARIABLES:
            return Variable(name)

        if name in FUNCTIONS:
            self._expect('lparen', f"'(' after '{name}'")
            argument = self._parse_expression()
            self._expect('rparen', "')'")
            return FunctionCall(name, argument)

        if name in self._constants:
            value = float(self._constants[name])
            return Constant(value) if value >= 0 else Negation(Constant(-value))

        raise ParseError(f"Unknown identifier '{name}'", token.offset,
                         "one of " + ", ".join(VARIABLES + FUNCTIONS + tuple(self._constants)))

    def _expect(self, kind: str, expected: str) -> Token:
        token = self._peek()
        if token.kind != kind:
            description = f"'{token.text}'" if token.text else "end of input"
            raise ParseError(f"Unexpected {description}", token.offset, expected)
        return self._advance()
