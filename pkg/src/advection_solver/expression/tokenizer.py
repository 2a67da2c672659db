# File: tokenizer.py
# Description: Tokenizer for the expression grammar
#
# Copyright (c) 2025 Jason Stuber
# Licensed under the MIT License. See the LICENSE file for more details.

import re
from typing import List, NamedTuple

from advection_solver.errors import ParseError


class Token(NamedTuple):
    """Represents a token in the expression source."""
    kind: str    # 'number', 'identifier', 'operator', 'lparen', 'rparen', 'end'
    text: str
    offset: int


class Tokenizer:
    """
    Expression tokenizer.

    Recognizes:
    - numbers: 12, 1.5, .5, 2e-3, 1.0E+16
    - identifiers: letters, digits and underscores, starting with a letter or underscore
    - operators: + - * / ^
    - parentheses
    Whitespace between tokens is insignificant.
    """

    _TOKEN_PATTERN = re.compile(
        r'(?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)'
        r'|(?P<identifier>[A-Za-z_][A-Za-z0-9_]*)'
        r'|(?P<operator>[-+*/^])'
        r'|(?P<lparen>\()'
        r'|(?P<rparen>\))'
    )
    _WHITESPACE_PATTERN = re.compile(r'\s+')

    @staticmethod
    def tokenize(source: str) -> List[Token]:
        """
        Split the source into tokens, terminated by an 'end' token.

        :param source: str, the expression text
        :return: List[Token], tokens in source order, the last one of kind 'end'

        :raises ParseError: If a character does not start any token.
        """
        tokens = []
        position = 0

        while position < len(source):
            whitespace = Tokenizer._WHITESPACE_PATTERN.match(source, position)
            if whitespace:
                position = whitespace.end()
                continue

            match = Tokenizer._TOKEN_PATTERN.match(source, position)
            if not match:
                raise ParseError(f"Unexpected character '{source[position]}'", position, "a number, variable, function, operator or parenthesis")

            tokens.append(Token(match.lastgroup, match.group(), position))
            position = match.end()

        tokens.append(Token('end', '', len(source)))
        return tokens
