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

"""Global fields and their elements.

Three kinds of global fields are supported:

* NumberField: Q(theta) for a monic irreducible integral polynomial f whose
  ring of integers is Z[theta] (checked with Dedekind's criterion).
* RationalFunctionField: F_p(t).
* QuadraticFunctionField: F_p(t, y) with y^2 = f(t), p odd, f squarefree of
  degree 1, 2 or 3.

Field literals are `nf:<poly in x>`, `ff:<p>` and `ff:<p>:y^2=<poly in t>`.
"""
from __future__ import absolute_import

from fractions import Fraction
import functools
import logging
import math

from sympy import Poly, Rational, Symbol, factorint
from sympy.polys import galoistools as gf
from sympy.polys.densearith import dup_add, dup_mul, dup_rem, dup_sub
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import (dup_discriminant, dup_invert,
                                     dup_resultant)

from global_fields import certreal
from global_fields import errors
from global_fields import exactnum
from global_fields import literals


LOG = logging.getLogger(__name__)

#: Marker of the infinite place of F_p(t) in place and divisor data.
INFINITY = 'inf'


def _strip(f):
    f = [int(c) for c in f]
    i = 0
    while i < len(f) and not f[i]:
        i += 1
    return f[i:]


def _fmt(q):
    if q.denominator == 1:
        return str(q.numerator)
    return '%s/%s' % (q.numerator, q.denominator)


def poly_to_str(coefficients, var='x'):
    """Literal of a polynomial with rational coefficients."""
    coefficients = [Fraction(c) for c in coefficients]
    degree = len(coefficients) - 1
    parts = []
    for i, c in enumerate(coefficients):
        k = degree - i
        if not c:
            continue
        mono = '' if k == 0 else (var if k == 1 else '%s^%s' % (var, k))
        if not mono:
            parts.append(_fmt(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append('-' + mono)
        elif c.denominator == 1:
            parts.append('%s%s' % (c.numerator, mono))
        else:
            parts.append('%s*%s' % (_fmt(c), mono))
    if not parts:
        return '0'
    text = parts[0]
    for part in parts[1:]:
        text += part if part.startswith('-') else '+' + part
    return text


def parse_polynomial(text, var, offset=0):
    """Parse a polynomial in one variable with rational coefficients.

    :returns: Fraction coefficients, highest degree first
    :rtype: list
    """
    symbol = Symbol(var)

    def constant(q):
        return Poly(Rational(q.numerator, q.denominator), symbol, domain=QQ)

    parser = literals.Parser(text, names={var: Poly(symbol, symbol,
                                                    domain=QQ)},
                             constant=constant, offset=offset)
    value = parser.parse()
    if not isinstance(value, Poly):
        raise errors.ParseError('not a polynomial in %s' % var, offset)
    return [Fraction(int(c.p), int(c.q)) for c in value.all_coeffs()]


def _dedekind_index_divisible(f, p):
    """Dedekind's criterion: whether p divides [O_K : Z[theta]]."""
    factors = exactnum.poly_factor_mod_p(f, p)
    g, h = [1], [1]
    for factor, k in factors:
        g = dup_mul(g, list(factor), ZZ)
        for _ in range(k - 1):
            h = dup_mul(h, list(factor), ZZ)
    diff = dup_sub(dup_mul(g, h, ZZ), list(f), ZZ)
    big_f = gf.gf_from_int_poly([int(c) // p for c in diff], p)
    common = gf.gf_gcd(gf.gf_gcd(big_f, gf.gf_from_int_poly(g, p), p, ZZ),
                       gf.gf_from_int_poly(h, p), p, ZZ)
    return gf.gf_degree(common) > 0


class GlobalField(object):
    """Base class of global fields.

    Fields are immutable values: two fields built from the same data are
    equal and hash alike.
    """
    characteristic = None
    #: Degree over the base field K0 (Q or F_p(t)).
    degree = None

    @property
    def key(self):
        raise NotImplementedError()

    @property
    def literal(self):
        raise NotImplementedError()

    @property
    def is_number_field(self):
        return self.characteristic == 0

    def __eq__(self, other):
        return isinstance(other, GlobalField) and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.key)

    def __str__(self):
        return self.literal

    def __repr__(self):
        return '%s(%r)' % (self.__class__.__name__, self.literal)

    def base_field(self):
        raise NotImplementedError()

    def element(self, value):
        raise NotImplementedError()

    def element_names(self):
        raise NotImplementedError()

    def zero(self):
        return self.element(0)

    def one(self):
        return self.element(1)

    def parse_element(self, text, offset=0):
        """Parse an element literal."""
        parser = literals.Parser(text, names=self.element_names(),
                                 constant=self.element, offset=offset)
        value = parser.parse()
        return self.element(value)


class NumberField(GlobalField):
    """Q(theta), theta a root of a monic irreducible integral polynomial.

    :param minpoly: Integer coefficients of f, highest degree first
    :type minpoly: sequence of int
    """
    characteristic = 0

    def __init__(self, minpoly):
        coefficients = [Fraction(c) for c in minpoly]
        while coefficients and not coefficients[0]:
            coefficients.pop(0)
        if len(coefficients) < 2:
            raise errors.InvalidInput('The minimal polynomial must have '
                                      'degree at least 1.')
        if any(c.denominator != 1 for c in coefficients):
            raise errors.InvalidInput('%s has non integral coefficients.' %
                                      poly_to_str(coefficients))
        if coefficients[0] != 1:
            raise errors.InvalidInput('%s is not monic.' %
                                      poly_to_str(coefficients))
        self.minpoly = tuple(int(c) for c in coefficients)
        self.degree = len(self.minpoly) - 1
        if not Poly(list(self.minpoly), Symbol('x'),
                    domain=ZZ).is_irreducible:
            raise errors.NotIrreducible('%s is reducible over Q.' %
                                        poly_to_str(self.minpoly))
        self.discriminant = int(dup_discriminant(list(self.minpoly), ZZ))
        self._check_monogenic()

    def _check_monogenic(self):
        for p, k in factorint(abs(self.discriminant)).items():
            if k >= 2 and _dedekind_index_divisible(self.minpoly, p):
                raise errors.NotMonogenic(
                    '%s: Z[theta] is not the ring of integers, %s divides '
                    'its index.' % (poly_to_str(self.minpoly), p))

    @property
    def key(self):
        return ('nf', self.minpoly)

    @property
    def literal(self):
        return 'nf:' + poly_to_str(self.minpoly, 'x')

    def base_field(self):
        return RATIONALS

    @property
    def signature(self):
        """(r1, r2): real embeddings and conjugate pairs."""
        r1 = Poly(list(self.minpoly), Symbol('x'), domain=ZZ).count_roots()
        return r1, (self.degree - r1) // 2

    def roots(self, precision=None):
        return exactnum.complex_roots(self.minpoly, precision)

    def element(self, value):
        if isinstance(value, NumberFieldElement):
            if value.field != self:
                raise errors.FieldMismatch('%s is not in %s.' %
                                           (value, self))
            return value
        return NumberFieldElement.from_fractions(self, [Fraction(value)])

    def generator(self):
        return NumberFieldElement(self, [1, 0])

    def element_names(self):
        theta = self.generator()
        return {'x': theta, 'theta': theta}

    def reduce(self, num):
        """Integer polynomial reduced modulo the minimal polynomial."""
        return _strip(dup_rem([ZZ(c) for c in num],
                              [ZZ(c) for c in self.minpoly], ZZ))


class NumberFieldElement(object):
    """num(theta) / den with integral num of degree < n and den > 0."""
    __slots__ = ('field', 'num', 'den')

    def __init__(self, field, num, den=1):
        num = field.reduce(num) if num else []
        den = int(den)
        if den == 0:
            raise errors.DomainError('Zero denominator.')
        if den < 0:
            num, den = [-c for c in num], -den
        g = den
        for c in num:
            g = math.gcd(g, c)
        if not num:
            den = 1
        elif g > 1:
            num = [c // g for c in num]
            den //= g
        self.field = field
        self.num = tuple(num)
        self.den = den

    @classmethod
    def from_fractions(cls, field, coefficients):
        """Element from rational coefficients, highest degree first."""
        coefficients = [Fraction(c) for c in coefficients]
        den = 1
        for c in coefficients:
            den = den * c.denominator // math.gcd(den, c.denominator)
        return cls(field, [int(c * den) for c in coefficients], den)

    # Views

    def is_zero(self):
        return not self.num

    def is_integral(self):
        return self.den == 1

    def is_rational(self):
        return len(self.num) <= 1

    def rational_value(self):
        if not self.is_rational():
            return None
        return Fraction(self.num[0] if self.num else 0, self.den)

    def coords(self):
        """Rational coordinates on 1, theta, ..., lowest degree first."""
        n = self.field.degree
        low = list(reversed(self.num)) + [0] * (n - len(self.num))
        return [Fraction(c, self.den) for c in low]

    def norm(self):
        """Exact norm to Q."""
        if not self.num:
            return Fraction(0)
        n = self.field.degree
        if len(self.num) == 1:
            value = self.num[0] ** n
        else:
            value = int(dup_resultant([ZZ(c) for c in self.field.minpoly],
                                      [ZZ(c) for c in self.num], ZZ))
        return Fraction(value, self.den ** n)

    def embed(self, root):
        """CertComplex value at a root enclosure."""
        value = certreal.CertComplex(
            certreal.CertReal.exact(0, root.precision))
        theta = root.value
        for c in self.num:
            value = value * theta + c
        return value / self.den

    def to_literal(self):
        return poly_to_str([Fraction(c, self.den) for c in self.num], 'x')

    # Arithmetic

    def _other(self, other):
        return self.field.element(other)

    def __add__(self, other):
        other = self._other(other)
        num = dup_add(dup_mul(list(self.num), [other.den], ZZ),
                      dup_mul(list(other.num), [self.den], ZZ), ZZ)
        return NumberFieldElement(self.field, num, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return NumberFieldElement(self.field, [-c for c in self.num],
                                  self.den)

    def __sub__(self, other):
        return self + (-self._other(other))

    def __rsub__(self, other):
        return self._other(other) - self

    def __mul__(self, other):
        other = self._other(other)
        num = dup_mul(list(self.num), list(other.num), ZZ)
        return NumberFieldElement(self.field, num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError('0 has no inverse.')
        f = [QQ(c) for c in self.field.minpoly]
        a = [QQ(c) for c in self.num]
        inv = dup_invert(a, f, QQ) if len(a) > 1 else [QQ(1) / a[0]]
        coefficients = [Fraction(int(c.numerator), int(c.denominator)) *
                        self.den for c in inv]
        return NumberFieldElement.from_fractions(self.field, coefficients)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** -n
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, NumberFieldElement):
            return (self.field == other.field and self.num == other.num and
                    self.den == other.den)
        if isinstance(other, (int, Fraction)):
            return self == self.field.element(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field, self.num, self.den))

    def __repr__(self):
        return '<%s in %s>' % (self.to_literal(), self.field)

    __str__ = to_literal


class FunctionField(GlobalField):
    """Common part of the function fields over F_p."""

    def __init__(self, p):
        self.p = exactnum.check_prime(p)
        self.characteristic = p

    def base_field(self):
        return RationalFunctionField(self.p)

    def gf(self, coefficients):
        return exactnum.gf_poly(coefficients, self.p)

    def parse_base(self, text, offset=0):
        """Parse a monic irreducible polynomial in t."""
        poly = self.gf(parse_polynomial(text, 't', offset))
        if not poly or poly[0] != 1 or len(poly) < 2:
            raise errors.InvalidInput('Base %s must be a monic polynomial of '
                                      'positive degree.' % text)
        if not gf.gf_irreducible_p(poly, self.p, ZZ):
            raise errors.InvalidInput('Base %s is composite mod %s.' %
                                      (text, self.p))
        return tuple(poly)


class RationalFunctionField(FunctionField):
    """F_p(t)."""
    degree = 1
    genus = 0

    @property
    def key(self):
        return ('ff', self.p)

    @property
    def literal(self):
        return 'ff:%s' % self.p

    def element(self, value):
        if isinstance(value, RationalFunction):
            if value.field != self:
                raise errors.FieldMismatch('%s is not in %s.' %
                                           (value, self))
            return value
        return RationalFunction(self, self.gf([Fraction(value)]))

    def t(self):
        return RationalFunction(self, [1, 0])

    def element_names(self):
        return {'t': self.t()}


class RationalFunction(object):
    """num / den with num, den in F_p[t], den monic, coprime."""
    __slots__ = ('field', 'num', 'den')

    def __init__(self, field, num, den=(1,)):
        p = field.p
        num = gf.gf_strip([int(c) % p for c in num])
        den = gf.gf_strip([int(c) % p for c in den])
        if not den:
            raise ZeroDivisionError('Zero denominator.')
        if not num:
            den = [1]
        else:
            g = gf.gf_gcd(num, den, p, ZZ)
            if len(g) > 1:
                num = gf.gf_quo(num, g, p, ZZ)
                den = gf.gf_quo(den, g, p, ZZ)
            lc = pow(int(den[0]), -1, p)
            num = gf.gf_mul_ground(num, lc, p, ZZ)
            den = gf.gf_mul_ground(den, lc, p, ZZ)
        self.field = field
        self.num = tuple(int(c) for c in num)
        self.den = tuple(int(c) for c in den)

    @property
    def p(self):
        return self.field.p

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return self.den == (1,)

    def valuation(self, pi):
        """Exponent of the irreducible pi, None for zero."""
        if not self.num:
            return None
        return (exactnum.gf_valuation(list(self.num), list(pi), self.p) -
                exactnum.gf_valuation(list(self.den), list(pi), self.p))

    def degree_valuation(self):
        """Valuation at the infinite place of F_p(t)."""
        if not self.num:
            return None
        return len(self.den) - len(self.num)

    def to_literal(self):
        num = exactnum.gf_to_str(self.num)
        if self.is_polynomial():
            return num
        den = exactnum.gf_to_str(self.den)
        if len([c for c in self.num if c]) > 1:
            num = '(%s)' % num
        return '%s/(%s)' % (num, den)

    def _other(self, other):
        if isinstance(other, RationalFunction):
            if other.field != self.field:
                raise errors.FieldMismatch('%s and %s mixed.' %
                                           (self.field, other.field))
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        p = self.p
        num = gf.gf_add(gf.gf_mul(list(self.num), list(other.den), p, ZZ),
                        gf.gf_mul(list(other.num), list(self.den), p, ZZ),
                        p, ZZ)
        return RationalFunction(self.field, num,
                                gf.gf_mul(list(self.den), list(other.den),
                                          p, ZZ))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.field, gf.gf_neg(list(self.num), self.p,
                                                      ZZ), self.den)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        p = self.p
        return RationalFunction(
            self.field, gf.gf_mul(list(self.num), list(other.num), p, ZZ),
            gf.gf_mul(list(self.den), list(other.den), p, ZZ))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError('0 has no inverse.')
        return RationalFunction(self.field, self.den, self.num)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** -n
        p = self.p
        return RationalFunction(self.field,
                                gf.gf_pow(list(self.num), n, p, ZZ),
                                gf.gf_pow(list(self.den), n, p, ZZ))

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field, self.num, self.den))

    def __repr__(self):
        return '<%s in %s>' % (self.to_literal(), self.field)

    __str__ = to_literal


class QuadraticFunctionField(FunctionField):
    """F_p(t, y) with y^2 = f(t), p odd and f squarefree of degree 1..3.

    :param p: Odd prime
    :type p: int
    :param f: Coefficients of f, highest degree first
    :type f: sequence
    """
    degree = 2

    def __init__(self, p, f):
        super(QuadraticFunctionField, self).__init__(p)
        if p == 2:
            raise errors.Unsupported('Characteristic 2 curve models are not '
                                     'supported.')
        f = self.gf(f)
        if len(f) - 1 not in (1, 2, 3):
            raise errors.Unsupported('y^2 = f(t) needs deg f in {1, 2, 3}, '
                                     'got %s.' % (len(f) - 1))
        if not gf.gf_sqf_p(f, p, ZZ):
            raise errors.InvalidInput('%s is not squarefree mod %s.' %
                                      (exactnum.gf_to_str(f), p))
        self.f = tuple(f)
        self.genus = (len(f) - 2) // 2
        #: y / t^k is integral at infinity
        self.k_inf = (len(f) - 1 + 1) // 2
        #: model w^2 = f_star(s) at infinity, s = 1/t, w = y / t^k_inf
        self.f_star = tuple(exactnum.gf_reverse(list(f), 2 * self.k_inf))

    @property
    def key(self):
        return ('ffq', self.p, self.f)

    @property
    def literal(self):
        return 'ff:%s:y^2=%s' % (self.p, exactnum.gf_to_str(self.f))

    def element(self, value):
        if isinstance(value, QuadraticElement):
            if value.field != self:
                raise errors.FieldMismatch('%s is not in %s.' %
                                           (value, self))
            return value
        base = self.base_field()
        return QuadraticElement(self, base.element(value), base.zero())

    def element_names(self):
        base = self.base_field()
        return {'t': QuadraticElement(self, base.t(), base.zero()),
                'y': QuadraticElement(self, base.zero(), base.one())}

    def f_element(self):
        return RationalFunction(self.base_field(), self.f)


class QuadraticElement(object):
    """a + b*y with a, b in F_p(t)."""
    __slots__ = ('field', 'a', 'b')

    def __init__(self, field, a, b):
        self.field = field
        self.a = a
        self.b = b

    def is_zero(self):
        return self.a.is_zero() and self.b.is_zero()

    def norm(self):
        """a^2 - b^2 f, the norm to F_p(t)."""
        return self.a * self.a - self.b * self.b * self.field.f_element()

    def conjugate(self):
        return QuadraticElement(self.field, self.a, -self.b)

    def integral_parts(self):
        """(A, B, D) polynomials with self = (A + B y) / D, D monic."""
        p = self.field.p
        d = gf.gf_lcm(list(self.a.den), list(self.b.den), p, ZZ)
        a = gf.gf_mul(list(self.a.num),
                      gf.gf_quo(d, list(self.a.den), p, ZZ), p, ZZ)
        b = gf.gf_mul(list(self.b.num),
                      gf.gf_quo(d, list(self.b.den), p, ZZ), p, ZZ)
        return a, b, d

    def to_literal(self):
        if self.b.is_zero():
            return self.a.to_literal()
        b = self.b.to_literal()
        b_part = 'y' if b == '1' else '(%s)*y' % b
        if self.a.is_zero():
            return b_part
        return '(%s)+%s' % (self.a.to_literal(), b_part)

    def _other(self, other):
        if isinstance(other, QuadraticElement):
            if other.field != self.field:
                raise errors.FieldMismatch('%s and %s mixed.' %
                                           (self.field, other.field))
            return other
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.field.element(other)
        return None

    def __add__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return QuadraticElement(self.field, self.a + other.a,
                                self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(self.field, -self.a, -self.b)

    def __sub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        f = self.field.f_element()
        return QuadraticElement(self.field,
                                self.a * other.a + self.b * other.b * f,
                                self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError('0 has no inverse.')
        n = self.norm()
        return QuadraticElement(self.field, self.a / n, -self.b / n)

    def __truediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.inverse() ** -n
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = self._other(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field, self.a, self.b))

    def __repr__(self):
        return '<%s in %s>' % (self.to_literal(), self.field)

    __str__ = to_literal


#: The field of rational numbers, nf:x.
RATIONALS = NumberField((1, 0))


@functools.lru_cache(maxsize=128)
def parse_field(text):
    """Parse a field literal.

    :param text: `nf:<poly in x>`, `ff:<p>` or `ff:<p>:y^2=<poly in t>`
    :type text: str
    :rtype: GlobalField
    """
    raw = text
    text = text.strip()
    shift = len(raw) - len(raw.lstrip())
    if text.startswith('nf:'):
        return NumberField(parse_polynomial(text[3:], 'x', shift + 3))
    if not text.startswith('ff:'):
        raise errors.ParseError("expected 'nf:' or 'ff:'", shift, raw)
    parts = literals.split_prefix(text[3:])
    p_text, p_pos = parts[0]
    if not p_text.strip().isdigit():
        raise errors.ParseError('expected a prime', shift + 3 + p_pos, raw)
    p = int(p_text)
    if len(parts) == 1:
        return RationalFunctionField(p)
    if len(parts) > 2:
        pos = shift + 3 + parts[2][1] - 1
        raise errors.ParseError("unexpected ':'", pos, raw)
    model, m_pos = parts[1]
    m_pos += shift + 3
    if '=' not in model:
        raise errors.ParseError("expected 'y^2=<poly in t>'",
                                m_pos + len(model), raw)
    lhs, rhs = model.split('=', 1)
    if lhs.replace(' ', '') != 'y^2':
        raise errors.ParseError("expected 'y^2' on the left", m_pos, raw)
    f = parse_polynomial(rhs, 't', m_pos + len(lhs) + 1)
    return QuadraticFunctionField(p, f)


def random_element(field, rng, height=3, nonzero=True):
    """Random element of small height, reproducible from rng."""
    while True:
        if field.is_number_field:
            coefficients = [Fraction(rng.randint(-height, height),
                                     rng.randint(1, height))
                            for _ in range(field.degree)]
            value = NumberFieldElement.from_fractions(field, coefficients)
        else:
            base = field.base_field()

            def rf():
                num = [rng.randrange(field.p) for _ in range(height)]
                den = [1] + [rng.randrange(field.p)
                             for _ in range(rng.randint(0, height - 1))]
                return RationalFunction(base, num, den)

            if isinstance(field, QuadraticFunctionField):
                value = QuadraticElement(field, rf(), rf())
            else:
                value = rf()
        if not (nonzero and value.is_zero()):
            return value
