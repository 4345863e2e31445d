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

"""Certified real numbers.

A CertReal is a closed interval [lo, hi] with MPFR endpoints.  Every
operation rounds the lower endpoint down and the upper endpoint up, so the
exact result of the operation applied to any values inside the operands is
inside the result.  Midpoint and radius are derived views of the endpoints.
"""
from __future__ import absolute_import

import enum
from fractions import Fraction
import numbers

import gmpy2

from global_fields import common
from global_fields import errors


class Ordering(enum.Enum):
    """Outcome of a certified comparison."""
    LESS = -1
    EQUAL = 0
    GREATER = 1
    INDETERMINATE = None

    @property
    def decided(self):
        return self is not Ordering.INDETERMINATE


def _down(precision):
    return gmpy2.context(precision=precision, round=gmpy2.RoundDown)


def _up(precision):
    return gmpy2.context(precision=precision, round=gmpy2.RoundUp)


def to_fraction(value):
    """Exact rational value of a finite mpfr."""
    num, den = value.as_integer_ratio()
    return Fraction(int(num), int(den))


def _below(q, precision):
    """Largest precision-bit float not above the rational q."""
    with _down(precision):
        x = gmpy2.mpfr(gmpy2.mpq(q.numerator, q.denominator))
        while to_fraction(x) > q:
            x = gmpy2.next_below(x)
    return x


def _above(q, precision):
    """Smallest precision-bit float not below the rational q."""
    with _up(precision):
        x = gmpy2.mpfr(gmpy2.mpq(q.numerator, q.denominator))
        while to_fraction(x) < q:
            x = gmpy2.next_above(x)
    return x


class CertReal(object):
    """Error-bounded real number.

    :param lo: Lower endpoint
    :type lo: gmpy2.mpfr
    :param hi: Upper endpoint
    :type hi: gmpy2.mpfr
    :param precision: Working precision in bits of derived operations
    :type precision: int
    """
    __slots__ = ('lo', 'hi', 'precision')

    def __init__(self, lo, hi, precision=None):
        if lo > hi:
            raise errors.DomainError('Empty enclosure [%s, %s].' % (lo, hi))
        self.lo = lo
        self.hi = hi
        self.precision = common.working_precision(precision)

    @classmethod
    def exact(cls, value, precision=None):
        """Enclosure of an integer or rational value."""
        return cls.from_interval(value, value, precision)

    @classmethod
    def from_interval(cls, lo, hi, precision=None):
        """Enclosure of the rational interval [lo, hi]."""
        precision = common.working_precision(precision)
        return cls(_below(Fraction(lo), precision),
                   _above(Fraction(hi), precision), precision)

    @classmethod
    def pi(cls, precision=None):
        """Enclosure of pi."""
        precision = common.working_precision(precision)
        with _down(precision):
            lo = gmpy2.const_pi()
        with _up(precision):
            hi = gmpy2.const_pi()
        return cls(lo, hi, precision)

    @classmethod
    def coerce(cls, value, precision=None):
        if isinstance(value, CertReal):
            return value
        if isinstance(value, (numbers.Rational, Fraction)):
            return cls.exact(Fraction(value), precision)
        raise TypeError('Cannot certify %r' % (value,))

    # Views

    @property
    def midpoint(self):
        with gmpy2.context(precision=self.precision + 2,
                           round=gmpy2.RoundToNearest):
            return (self.lo + self.hi) / 2

    @property
    def radius(self):
        mid = self.midpoint
        with _up(self.precision):
            return max(self.hi - mid, mid - self.lo)

    @property
    def width(self):
        with _up(self.precision):
            return self.hi - self.lo

    @property
    def is_point(self):
        return self.lo == self.hi

    def lower_fraction(self):
        return to_fraction(self.lo)

    def upper_fraction(self):
        return to_fraction(self.hi)

    def __float__(self):
        return float(self.midpoint)

    def __repr__(self):
        return 'CertReal(%s, %s)' % (self.lo, self.hi)

    def __str__(self):
        return '%s ± %s' % (format(self.midpoint, '.20g'),
                            format(self.radius, '.3g'))

    # Arithmetic

    def _other(self, other):
        return CertReal.coerce(other, self.precision)

    def _prec(self, other):
        return max(self.precision, other.precision)

    def __neg__(self):
        # exact at the wider endpoint precision
        with gmpy2.context(precision=max(self.lo.precision,
                                         self.hi.precision)):
            return CertReal(-self.hi, -self.lo, self.precision)

    def __pos__(self):
        return self

    def __add__(self, other):
        try:
            other = self._other(other)
        except TypeError:
            return NotImplemented
        prec = self._prec(other)
        with _down(prec):
            lo = self.lo + other.lo
        with _up(prec):
            hi = self.hi + other.hi
        return CertReal(lo, hi, prec)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = self._other(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        try:
            other = self._other(other)
        except TypeError:
            return NotImplemented
        prec = self._prec(other)
        pairs = ((self.lo, other.lo), (self.lo, other.hi),
                 (self.hi, other.lo), (self.hi, other.hi))
        with _down(prec):
            lo = min(a * b for a, b in pairs)
        with _up(prec):
            hi = max(a * b for a, b in pairs)
        return CertReal(lo, hi, prec)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.lo <= 0 <= self.hi:
            if self.lo == self.hi:
                raise errors.DomainError('Division by zero.')
            raise errors.Indeterminate('Divisor enclosure %s contains 0.' %
                                       self)
        with _down(self.precision):
            lo = 1 / self.hi
        with _up(self.precision):
            hi = 1 / self.lo
        return CertReal(lo, hi, self.precision)

    def __truediv__(self, other):
        try:
            other = self._other(other)
        except TypeError:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self._other(other) / self

    def __abs__(self):
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return CertReal(gmpy2.mpfr(0), max((-self).hi, self.hi),
                        self.precision)

    def square(self):
        return self ** 2

    def __pow__(self, exponent):
        if isinstance(exponent, numbers.Integral):
            return self._int_pow(int(exponent))
        if isinstance(exponent, Fraction) and exponent.denominator == 1:
            return self._int_pow(exponent.numerator)
        return (self._other(exponent) * self.log()).exp()

    def _int_pow(self, n):
        if n == 0:
            return CertReal.exact(1, self.precision)
        if n < 0:
            return self._int_pow(-n).reciprocal()
        base = self if n % 2 else abs(self)
        with _down(self.precision):
            lo = base.lo ** n
        with _up(self.precision):
            hi = base.hi ** n
        return CertReal(lo, hi, self.precision)

    def sqrt(self):
        if self.hi < 0:
            raise errors.DomainError('Square root of negative %s.' % self)
        with _down(self.precision):
            lo = gmpy2.sqrt(max(self.lo, gmpy2.mpfr(0)))
        with _up(self.precision):
            hi = gmpy2.sqrt(self.hi)
        return CertReal(lo, hi, self.precision)

    def log(self):
        if self.lo <= 0:
            raise errors.DomainError('Logarithm of enclosure %s touching '
                                     '0.' % self)
        with _down(self.precision):
            lo = gmpy2.log(self.lo)
        with _up(self.precision):
            hi = gmpy2.log(self.hi)
        return CertReal(lo, hi, self.precision)

    def exp(self):
        with _down(self.precision):
            lo = gmpy2.exp(self.lo)
        with _up(self.precision):
            hi = gmpy2.exp(self.hi)
        return CertReal(lo, hi, self.precision)

    # Comparison

    def cmp(self, other):
        """Certified comparison.

        :returns: LESS or GREATER when the enclosures are disjoint,
                  INDETERMINATE otherwise.
        :rtype: Ordering
        """
        other = self._other(other)
        if self.hi < other.lo:
            return Ordering.LESS
        if self.lo > other.hi:
            return Ordering.GREATER
        return Ordering.INDETERMINATE

    def contains(self, value):
        """Whether the exact value (or the whole enclosure) is inside."""
        if isinstance(value, CertReal):
            return value.is_within(self)
        q = Fraction(value)
        return self.lower_fraction() <= q <= self.upper_fraction()

    def contains_zero(self):
        return self.lo <= 0 <= self.hi

    def is_within(self, other):
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other):
        other = self._other(other)
        return not (self.hi < other.lo or other.hi < self.lo)

    def hull(self, other):
        other = self._other(other)
        return CertReal(min(self.lo, other.lo), max(self.hi, other.hi),
                        self._prec(other))


class CertComplex(object):
    """Rectangle enclosure of a complex number."""
    __slots__ = ('re', 'im')

    def __init__(self, re, im=None):
        self.re = re
        self.im = im if im is not None else CertReal.exact(0, re.precision)

    @property
    def precision(self):
        return max(self.re.precision, self.im.precision)

    def _other(self, other):
        if isinstance(other, CertComplex):
            return other
        return CertComplex(CertReal.coerce(other, self.precision))

    def __add__(self, other):
        other = self._other(other)
        return CertComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        return CertComplex(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return CertComplex(-self.re, -self.im)

    def __mul__(self, other):
        other = self._other(other)
        return CertComplex(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, CertComplex):
            den = other.abs2()
            num = self * other.conjugate()
            return CertComplex(num.re / den, num.im / den)
        other = CertReal.coerce(other, self.precision)
        return CertComplex(self.re / other, self.im / other)

    def conjugate(self):
        return CertComplex(self.re, -self.im)

    def abs2(self):
        return self.re.square() + self.im.square()

    def __abs__(self):
        return self.abs2().sqrt()

    def __repr__(self):
        return 'CertComplex(%r, %r)' % (self.re, self.im)
