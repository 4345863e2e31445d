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

"""Exact log-linear real numbers.

A LogExpr is c0 + sum(c_p * log p) with rational coefficients and rational
primes p, plus optional deferred terms c * L where L is an object with an
`evaluate(precision)` method returning a CertReal (a logarithm that has no
exact representation, like log |theta_P(alpha)| for a real embedding).

Since 1 and the logarithms of distinct primes are linearly independent over
the rationals, an expression without deferred terms is zero exactly when all
its coefficients are, which is what makes archimedean divisor coefficients
comparable without rounding.
"""
from __future__ import absolute_import

from fractions import Fraction
import math
import numbers

from sympy import factorint

from global_fields import certreal
from global_fields import errors


def _fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError('Expected a rational coefficient, got %r' % (value,))


def _fmt(q):
    if q.denominator == 1:
        return str(q.numerator)
    return '%s/%s' % (q.numerator, q.denominator)


class LogExpr(object):
    __slots__ = ('constant', 'logs', 'deferred')

    def __init__(self, constant=0, logs=None, deferred=None):
        self.constant = _fraction(constant)
        self.logs = tuple(sorted((p, c) for p, c in (logs or {}).items()
                                 if c))
        self.deferred = tuple(sorted(((k, c) for k, c in
                                      (deferred or {}).items() if c),
                                     key=lambda kc: repr(kc[0].key)))

    @classmethod
    def rational(cls, value):
        return cls(constant=_fraction(value))

    @classmethod
    def log(cls, value):
        """Exact log of a positive rational number."""
        value = _fraction(value)
        if value <= 0:
            raise errors.DomainError('log(%s) is undefined.' % value)
        logs = {}
        for p, k in factorint(value.numerator).items():
            logs[int(p)] = Fraction(k)
        for p, k in factorint(value.denominator).items():
            logs[int(p)] = logs.get(int(p), 0) - k
        return cls(logs=logs)

    @classmethod
    def deferred_log(cls, term, coefficient=1):
        return cls(deferred={term: _fraction(coefficient)})

    # Views

    @property
    def is_exact(self):
        """No deferred terms."""
        return not self.deferred

    def is_zero(self):
        """Structural zero test, exact for expressions without deferred
        terms."""
        return not (self.constant or self.logs or self.deferred)

    def rational_value(self):
        """The value when it is rational, else None."""
        if self.logs or self.deferred:
            return None
        return self.constant

    def exp_power(self):
        """(R, m) with exp(self)^m == R exactly, or None.

        Only possible when there is no rational constant and no deferred
        term; m is the least common denominator of the log coefficients.
        """
        if self.constant or self.deferred:
            return None
        m = 1
        for _, c in self.logs:
            m = m * c.denominator // math.gcd(m, c.denominator)
        value = Fraction(1)
        for p, c in self.logs:
            k = int(c * m)
            value *= Fraction(p) ** k
        return value, m

    def exp_rational(self):
        """exp(self) when it is a rational number, else None."""
        power = self.exp_power()
        if power is None or power[1] != 1:
            return None
        return power[0]

    def evaluate(self, precision=None):
        """CertReal enclosure of the value."""
        value = certreal.CertReal.exact(self.constant, precision)
        precision = value.precision
        for p, c in self.logs:
            value = value + certreal.CertReal.exact(p, precision).log() * c
        for term, c in self.deferred:
            value = value + term.evaluate(precision=precision) * c
        return value

    def exp(self, precision=None):
        """exp(self), exact Fraction when rational, CertReal otherwise."""
        exact = self.exp_rational()
        if exact is not None:
            return exact
        return self.evaluate(precision).exp()

    def sign(self, precision=None):
        """Certified sign, raises Indeterminate when undecided."""
        if self.is_exact and self.is_zero():
            return 0
        value = self.evaluate(precision)
        order = value.cmp(0)
        if order is certreal.Ordering.GREATER:
            return 1
        if order is certreal.Ordering.LESS:
            return -1
        raise errors.Indeterminate('Sign of %s undecided at %s bits.' %
                                   (self.to_literal(), value.precision))

    # Arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, LogExpr):
            return other
        return LogExpr.rational(_fraction(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        logs = dict(self.logs)
        for p, c in other.logs:
            logs[p] = logs.get(p, 0) + c
        deferred = dict(self.deferred)
        for k, c in other.deferred:
            deferred[k] = deferred.get(k, 0) + c
        return LogExpr(self.constant + other.constant, logs, deferred)

    __radd__ = __add__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, LogExpr):
            value = other.rational_value()
            if value is None:
                value = self.rational_value()
                if value is None:
                    raise errors.Unsupported('Product of two logarithmic '
                                             'expressions.')
                return other * value
            other = value
        try:
            c = _fraction(other)
        except TypeError:
            return NotImplemented
        return LogExpr(self.constant * c,
                       dict((p, v * c) for p, v in self.logs),
                       dict((k, v * c) for k, v in self.deferred))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LogExpr):
            value = other.rational_value()
            if value is None:
                raise errors.Unsupported('Division by a logarithmic '
                                         'expression.')
            other = value
        return self * (1 / _fraction(other))

    def __pow__(self, exponent):
        if exponent != int(exponent) or int(exponent) < 0:
            raise errors.Unsupported('Only natural powers are supported.')
        result = LogExpr.rational(1)
        for _ in range(int(exponent)):
            result = result * self
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return (self.constant == other.constant and
                self.logs == other.logs and
                self.deferred == other.deferred)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.constant, self.logs, self.deferred))

    # Printing

    def to_literal(self):
        """Literal accepted by the divisor coefficient grammar.

        Deferred terms are printed as their numerical value prefixed by
        `~` and do not re-parse.
        """
        parts = []
        if self.constant or not (self.logs or self.deferred):
            parts.append(_fmt(self.constant))
        for p, c in self.logs:
            if c == 1:
                parts.append('log(%s)' % p)
            elif c == -1:
                parts.append('-log(%s)' % p)
            elif c.denominator == 1:
                parts.append('%slog(%s)' % (c.numerator, p))
            else:
                parts.append('%s*log(%s)' % (_fmt(c), p))
        for term, c in self.deferred:
            parts.append('%s*~%s' % (_fmt(c),
                                     format(float(term.evaluate()), '.12g')))
        text = parts[0]
        for part in parts[1:]:
            text += part if part.startswith('-') else '+' + part
        return text

    def __repr__(self):
        return 'LogExpr(%s)' % self.to_literal()

    __str__ = to_literal

    def __float__(self):
        return float(self.evaluate())
