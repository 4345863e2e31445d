# -*- coding: utf-8 -*-
# Copyright 2026 The global-fields Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
#     Unless required by applicable law or agreed to in writing, software
#     distributed under the License is distributed on an "AS IS" BASIS,
#     WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#     See the License for the specific language governing permissions and
#     limitations under the License.

"""Tokenizer and expression parser shared by every literal grammar.

Expressions are evaluated while they are parsed: numbers become Fractions
(or whatever the `constant` callable makes of them), names are looked up in
a dictionary and operators are the Python operators of the values, so the
same parser reads integer polynomials, field elements and divisor
coefficients.  Implicit multiplication is accepted (`2x`, `3log(2)`).
"""
from __future__ import absolute_import

import collections
from fractions import Fraction
import re

from global_fields import errors


Token = collections.namedtuple('Token', ('kind', 'value', 'position'))

NUMBER = 'number'
NAME = 'name'
OP = 'op'
END = 'end'

_TOKEN_RE = re.compile(r'\s*(?:(?P<number>\d+(?:\.\d+)?)|'
                       r'(?P<name>[A-Za-z_][A-Za-z_0-9]*)|'
                       r'(?P<op>[-+*/^()\[\],=~]))')


def tokenize(text, offset=0):
    """Split text into tokens, positions are offset by `offset`."""
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise errors.ParseError('unexpected character %r' % text[col],
                                    offset + col)
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind),
                            offset + match.start(kind)))
        pos = match.end()
    tokens.append(Token(END, None, offset + len(text)))
    return tokens


class Parser(object):
    """Recursive descent parser evaluating arithmetic expressions.

    :param text: Text to parse
    :type text: str
    :param names: Values of the variables
    :type names: dict
    :param functions: Callables taking (value, token) for `name(expr)`
    :type functions: dict
    :param constant: Maps a Fraction to a value of the target ring
    :type constant: callable
    :param offset: Position of text inside the full literal
    :type offset: int
    :param parens: Whether `(` opens a sub expression
    :type parens: bool
    """

    def __init__(self, text, names=None, functions=None, constant=None,
                 offset=0, parens=True):
        self.text = text
        self.tokens = tokenize(text, offset)
        self.index = 0
        self.names = names or {}
        self.functions = functions or {}
        self.constant = constant or (lambda q: q)
        self.offset = offset
        self.parens = parens

    # Token helpers

    def peek(self, ahead=0):
        return self.tokens[min(self.index + ahead, len(self.tokens) - 1)]

    def advance(self):
        token = self.peek()
        if token.kind != END:
            self.index += 1
        return token

    def at_end(self):
        return self.peek().kind == END

    def is_op(self, value, ahead=0):
        token = self.peek(ahead)
        return token.kind == OP and token.value == value

    def expect(self, value):
        token = self.peek()
        if token.kind != OP or token.value != value:
            self.error('expected %r' % value, token)
        return self.advance()

    def error(self, message, token=None):
        token = token or self.peek()
        found = 'end of input' if token.kind == END else repr(token.value)
        raise errors.ParseError('%s, found %s' % (message, found),
                                token.position)

    def starts_factor(self, token):
        if token.kind == NUMBER:
            return True
        if token.kind == NAME:
            return token.value in self.names or token.value in self.functions
        if token.kind == OP:
            return token.value == '[' or (self.parens and token.value == '(')
        return False

    # Grammar

    def parse(self):
        value = self.expression()
        if not self.at_end():
            self.error('unexpected token')
        return value

    def expression(self):
        value = self.term()
        while self.is_op('+') or self.is_op('-'):
            token = self.advance()
            rhs = self.term()
            value = self._apply(token, value, rhs)
        return value

    def term(self):
        value = self.unary()
        while True:
            token = self.peek()
            if token.kind == OP and token.value in '*/':
                if not self.starts_factor(self.peek(1)) and not (
                        self.peek(1).kind == OP and
                        self.peek(1).value in '-+'):
                    break
                self.advance()
                rhs = self.unary()
                value = self._apply(token, value, rhs)
            elif self.starts_factor(token):
                rhs = self.power()
                value = self._apply(Token(OP, '*', token.position), value,
                                    rhs)
            else:
                break
        return value

    def unary(self):
        if self.is_op('-'):
            self.advance()
            return -self.unary()
        if self.is_op('+'):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.is_op('^'):
            token = self.advance()
            sign = 1
            if self.is_op('-'):
                self.advance()
                sign = -1
            exponent = self.peek()
            if exponent.kind != NUMBER or '.' in exponent.value:
                self.error('expected an integer exponent', exponent)
            self.advance()
            base = self._apply(token, base, sign * int(exponent.value))
        return base

    def atom(self):
        token = self.peek()
        if token.kind == NUMBER:
            self.advance()
            return self.constant(Fraction(token.value))
        if token.kind == NAME:
            if token.value in self.functions:
                self.advance()
                self.expect('(')
                saved, self.parens = self.parens, True
                argument = self.expression()
                self.parens = saved
                self.expect(')')
                return self.functions[token.value](argument, token)
            if token.value in self.names:
                self.advance()
                return self.names[token.value]
            self.error('unknown name %r' % token.value, token)
        if token.kind == OP and (token.value == '[' or
                                 (self.parens and token.value == '(')):
            closing = ']' if token.value == '[' else ')'
            self.advance()
            saved, self.parens = self.parens, True
            value = self.expression()
            self.parens = saved
            self.expect(closing)
            return value
        self.error('expected a number, a name or a parenthesis', token)

    def _apply(self, token, lhs, rhs):
        try:
            if token.value == '+':
                return lhs + rhs
            if token.value == '-':
                return lhs - rhs
            if token.value == '*':
                return lhs * rhs
            if token.value == '/':
                return lhs / rhs
            return lhs ** rhs
        except ZeroDivisionError:
            raise errors.ParseError('division by zero', token.position)
        except errors.ParseError:
            raise
        except errors.Error as exc:
            raise errors.ParseError(exc.message, token.position)
        except (TypeError, ValueError) as exc:
            raise errors.ParseError('cannot evaluate %r: %s' %
                                    (token.value, exc), token.position)


def split_prefix(text, separator=':'):
    """Split `a:b:c` keeping the position of every part."""
    parts = []
    start = 0
    while True:
        end = text.find(separator, start)
        if end < 0:
            parts.append((text[start:], start))
            return parts
        parts.append((text[start:end], start))
        start = end + 1
