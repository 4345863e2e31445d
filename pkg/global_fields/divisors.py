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

"""Divisors with integral finite and real archimedean coefficients.

Archimedean coefficients are LogExpr values, so sums like the canonical
divisor's a_inf term cancel exactly.  The degree is multiplicative:
deg D = prod N(P)^a_P, computed as the exponential of the exact
log_degree(D).
"""
from __future__ import absolute_import

from fractions import Fraction
import logging
import re

from sympy import Poly, Rational, Symbol, factorint
from sympy.polys.domains import QQ

from global_fields import certreal
from global_fields import constants
from global_fields import errors
from global_fields import exactnum
from global_fields import fields
from global_fields import literals
from global_fields import logexpr
from global_fields import places


__all__ = ('Divisor', 'DivisorParser', 'CanonicalChoice', 'parse_divisor',
           'log_degree', 'exact_degree', 'degree', 'principal_divisor',
           'ramification_divisor', 'canonical_divisor',
           'canonical_degree_identity')

LOG = logging.getLogger(__name__)

_INF_RE = re.compile(r'^inf(\d*)$')


def _coefficient(P, value):
    if P.is_archimedean:
        if isinstance(value, logexpr.LogExpr):
            return value
        return logexpr.LogExpr.rational(value)
    if isinstance(value, logexpr.LogExpr):
        q = value.rational_value()
        if q is None:
            raise errors.InvalidInput('Coefficient %s at the finite place %s '
                                      'is not an integer.' % (value, P))
        value = q
    value = Fraction(value)
    if value.denominator != 1:
        raise errors.InvalidInput('Coefficient %s at the finite place %s is '
                                  'not an integer.' % (value, P))
    return int(value)


def _is_zero(value):
    if isinstance(value, logexpr.LogExpr):
        return value.is_zero()
    return not value


class Divisor(object):
    """Finite formal sum of places of a field.

    :param field: Field of the places
    :type field: fields.GlobalField
    :param coefficients: Place to coefficient, ints at finite places and
                         rationals or LogExpr at archimedean places
    :type coefficients: dict
    """
    __slots__ = ('field', 'coefficients')

    def __init__(self, field, coefficients=None):
        result = {}
        for P, a in (coefficients or {}).items():
            if P.field != field:
                raise errors.FieldMismatch('%s is a place of %s, not of %s.' %
                                           (P.label, P.field, field))
            a = _coefficient(P, a)
            if not _is_zero(a):
                result[P] = a
        self.field = field
        self.coefficients = result

    @classmethod
    def zero(cls, field):
        return cls(field)

    # Views

    @property
    def support(self):
        return sorted(self.coefficients)

    def coefficient(self, P):
        if P.is_archimedean:
            return self.coefficients.get(P, logexpr.LogExpr.rational(0))
        return self.coefficients.get(P, 0)

    def items(self):
        return [(P, self.coefficients[P]) for P in self.support]

    def is_zero(self):
        return not self.coefficients

    def restrict(self, archimedean=True):
        """The part of the divisor at (non) archimedean places."""
        return Divisor(self.field,
                       dict((P, a) for P, a in self.coefficients.items()
                            if P.is_archimedean == archimedean))

    # Arithmetic

    def _check(self, other):
        if not isinstance(other, Divisor):
            raise TypeError('Expected a Divisor, got %r' % (other,))
        if other.field != self.field:
            raise errors.FieldMismatch('Divisors on %s and %s.' %
                                       (self.field, other.field))
        return other

    def __add__(self, other):
        other = self._check(other)
        result = dict(self.coefficients)
        for P, a in other.coefficients.items():
            result[P] = result[P] + a if P in result else a
        return Divisor(self.field, result)

    def __neg__(self):
        return Divisor(self.field, dict((P, -a) for P, a in
                                        self.coefficients.items()))

    def __sub__(self, other):
        return self + (-self._check(other))

    def scale(self, n):
        """n * D for a rational n, finite coefficients must stay integral."""
        return Divisor(self.field, dict((P, a * Fraction(n)) for P, a in
                                        self.coefficients.items()))

    def __eq__(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        return (self.field == other.field and
                self.coefficients == other.coefficients)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.field, frozenset(self.coefficients.items())))

    def __le__(self, other):
        """Coefficientwise order, Indeterminate when undecided."""
        other = self._check(other)
        for P in set(self.coefficients) | set(other.coefficients):
            difference = other.coefficient(P) - self.coefficient(P)
            if isinstance(difference, logexpr.LogExpr):
                if difference.sign() < 0:
                    return False
            elif difference < 0:
                return False
        return True

    def __ge__(self, other):
        return self._check(other) <= self

    # Printing

    def to_literal(self):
        """Literal in the divisor grammar, re-parsing to an equal divisor
        unless an archimedean coefficient has deferred terms."""
        terms = []
        for P, a in self.items():
            if isinstance(a, logexpr.LogExpr):
                text = a.to_literal()
                if len(a.logs) + len(a.deferred) + bool(a.constant) > 1:
                    text = '[%s]' % text
            else:
                text = str(a)
            terms.append('%s*%s' % (text, P.label))
        if not terms:
            return '0'
        text = terms[0]
        for term in terms[1:]:
            text += term if term.startswith('-') else '+' + term
        return text

    def __repr__(self):
        return '<Divisor %s on %s>' % (self.to_literal(), self.field)

    __str__ = to_literal


# Grammar

class DivisorParser(literals.Parser):
    """Parser of `<coeff>*(<base>[,<index>])` sums.

    Coefficients are rational expressions that may contain `log(<n>)`
    atoms; `[...]` groups a sum.  Places are `(<base>)`,
    `(<base>,<index>)`, `inf` and `inf<k>`.

    :param field: Field of the places
    :type field: fields.GlobalField
    :param variables: Extra names usable in coefficients, like the sweep
                      variable
    :type variables: dict
    """

    def __init__(self, field, text, variables=None, offset=0):
        names = dict((name, logexpr.LogExpr.rational(value)
                      if not isinstance(value, logexpr.LogExpr) else value)
                     for name, value in (variables or {}).items())
        super(DivisorParser, self).__init__(
            text, names=names, functions={'log': self._log},
            constant=logexpr.LogExpr.rational, offset=offset, parens=False)
        self.field = field

    def _log(self, value, token):
        q = value.rational_value() if isinstance(
            value, logexpr.LogExpr) else Fraction(value)
        if q is None or q <= 0:
            raise errors.ParseError('log needs a positive rational argument',
                                    token.position)
        return logexpr.LogExpr.log(q)

    def starts_place(self):
        token = self.peek()
        if token.kind == literals.OP:
            return token.value == '('
        return token.kind == literals.NAME and bool(
            _INF_RE.match(token.value))

    def parse(self):
        coefficients = {}
        first = True
        while first or not self.at_end():
            coefficient, place = self.divisor_term(first)
            first = False
            if place is None:
                if not coefficient.is_zero() or not self.at_end() or \
                        coefficients:
                    self.error('expected a place')
                break
            if place in coefficients:
                coefficients[place] = coefficients[place] + coefficient
            else:
                coefficients[place] = coefficient
        try:
            return Divisor(self.field, dict(
                (P, _coefficient(P, a)) for P, a in coefficients.items()))
        except errors.InvalidInput as exc:
            raise errors.ParseError(exc.message, self.offset)

    def divisor_term(self, first):
        if not first and not (self.is_op('+') or self.is_op('-')):
            self.error("expected '+' or '-'")
        sign = 1
        while self.is_op('+') or self.is_op('-'):
            if self.advance().value == '-':
                sign = -sign
        if self.starts_place():
            coefficient = logexpr.LogExpr.rational(1)
        else:
            coefficient = self.term()
            if self.is_op('*'):
                self.advance()
                if not self.starts_place():
                    self.error('expected a place')
            elif not self.starts_place():
                return coefficient * sign, None
        token = self.peek()
        try:
            place = self.place()
        except errors.ParseError:
            raise
        except errors.Error as exc:
            raise errors.ParseError(exc.message, token.position)
        return coefficient * sign, place

    def place(self):
        token = self.advance()
        if token.kind == literals.NAME:
            digits = _INF_RE.match(token.value).group(1)
            index = int(digits) if digits else None
            if self.field.is_number_field:
                return places.find_place(self.field, None, index)
            return places.find_place(self.field, places.INFINITY, index)
        base = self._base()
        index = None
        if self.is_op(','):
            self.advance()
            number = self.peek()
            if number.kind != literals.NUMBER or '.' in number.value:
                self.error('expected a place index', number)
            self.advance()
            index = int(number.value)
        self.expect(')')
        return places.find_place(self.field, base, index)

    def _base(self):
        saved = (self.names, self.functions, self.constant, self.parens)
        if self.field.is_number_field:
            self.names, self.functions = {}, {}
            self.constant = lambda q: q
        else:
            t = Symbol('t')
            self.names = {'t': Poly(t, t, domain=QQ)}
            self.functions = {}
            self.constant = lambda q: Poly(Rational(q.numerator,
                                                    q.denominator), t,
                                           domain=QQ)
        self.parens = True
        start = self.peek()
        try:
            value = self.expression()
        finally:
            self.names, self.functions, self.constant, self.parens = saved
        if self.field.is_number_field:
            if not isinstance(value, Fraction) or value.denominator != 1:
                self.error('expected a rational prime', start)
            return int(value)
        if not isinstance(value, Poly):
            self.error('expected a polynomial in t', start)
        return tuple(self.field.gf([Fraction(int(c.p), int(c.q))
                                    for c in value.all_coeffs()]))


def parse_divisor(field, text, variables=None):
    """Parse a divisor literal on field.

    :rtype: Divisor
    """
    return DivisorParser(field, text, variables).parse()


# Degree

def log_degree(D):
    """log deg D = sum a_P log N(P), exact."""
    total = logexpr.LogExpr.rational(0)
    for P, a in D.items():
        total = total + places.log_norm(P) * a
    return total


def exact_degree(D):
    """deg D as a Fraction when it is rational, else None."""
    return log_degree(D).exp_rational()


def degree(D, precision=None):
    """deg D: a Fraction when rational, otherwise a CertReal."""
    value = exact_degree(D)
    if value is not None:
        return value
    return log_degree(D).evaluate(precision).exp()


# Principal divisors

class EmbeddingLog(object):
    """log phi_P(alpha) at an archimedean place, evaluated on demand."""
    __slots__ = ('place', 'alpha')

    def __init__(self, place, alpha):
        self.place = place
        self.alpha = alpha

    @property
    def key(self):
        return (self.place.label, self.alpha.field.literal,
                self.alpha.to_literal())

    def evaluate(self, precision=None):
        return places.normalized_valuation(self.place, self.alpha,
                                           precision).log()

    def __eq__(self, other):
        return isinstance(other, EmbeddingLog) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return 'EmbeddingLog(%s, %s)' % self.key[::2]


def _archimedean_coefficient(P, alpha):
    """(1/dim) log phi_P(alpha), exact whenever phi_P(alpha) is rational."""
    q = alpha.rational_value()
    if q is not None:
        return logexpr.LogExpr.log(abs(q))
    if P.kind == places.COMPLEX and alpha.field.degree == 2:
        # both embeddings are conjugate, |theta(alpha)|^2 is the norm
        return logexpr.LogExpr.log(alpha.norm()) / 2
    return logexpr.LogExpr.deferred_log(EmbeddingLog(P, alpha),
                                        Fraction(1, P.dim))


def principal_divisor(alpha):
    """(alpha) = sum -v_P(alpha) P + archimedean log terms."""
    if alpha.is_zero():
        raise errors.DomainError('0 has no principal divisor.')
    K = alpha.field
    coefficients = {}
    for P in places.all_places_in_support(alpha):
        if P.is_archimedean:
            coefficients[P] = _archimedean_coefficient(P, alpha)
        else:
            coefficients[P] = -places.finite_valuation_exponent(P, alpha)
    return Divisor(K, coefficients)


# Ramification and canonical divisors

def _as_extension(extension, K=None):
    if isinstance(extension, places.Extension):
        return extension
    L = extension
    return places.Extension(L, K if K is not None else L.base_field())


def ramification_divisor(extension, K=None):
    """R_{L/K} = sum r_Q Q over the places of L.

    :param extension: places.Extension, or L with K given separately
                      (default K0)
    """
    extension = _as_extension(extension, K)
    L = extension.L
    if extension.is_trivial:
        return Divisor.zero(L)
    coefficients = {}
    if L.is_number_field:
        candidates = []
        for p in sorted(factorint(abs(L.discriminant))):
            candidates.extend(places.places_above(L, int(p)))
        candidates.extend(places.archimedean_places(L))
    else:
        candidates = []
        if isinstance(L, fields.QuadraticFunctionField):
            for factor, _ in exactnum.poly_factor_mod_p(L.f, L.p):
                candidates.extend(places.places_above(L, factor))
        candidates.extend(places.places_above(L, places.INFINITY))
    for Q in candidates:
        coefficients[Q] = places.different_exponent(Q, extension)
    return Divisor(L, coefficients)


def default_p0(field):
    """First usable degree one base of a function field.

    (t) is tried first, then (t - c) for the smallest c, then the place at
    infinity.  A base is usable when the places above it are well defined
    and account for the whole degree of K over K0.
    """
    p = field.p
    candidates = ([constants.DEFAULT_P0_FUNCTION_FIELD] +
                  [(1, -c % p) for c in range(1, p)] + [places.INFINITY])
    for base in candidates:
        try:
            if places.fundamental_identity(field, base) == field.degree:
                return base
        except errors.Fatal as exc:
            LOG.debug('P0 candidate %s of %s rejected: %s', base, field, exc)
            continue
        LOG.warning('P0 candidate %s of %s is degenerate, trying the next '
                    'one', base, field)
    raise errors.Unsupported('No usable degree one base place on %s.' %
                             field)


class CanonicalChoice(object):
    """Choice of P0 (a finite place of K0) and Pinf (archimedean place).

    :param field: Field of the canonical divisor
    :type field: fields.GlobalField
    :param p0: Base of P0, a prime (char 0), a monic polynomial of degree 1
               in t or INFINITY (char p)
    :param pinf: 1-based index of the archimedean place (char 0)
    :type pinf: int
    """

    def __init__(self, field, p0=None, pinf=None):
        self.field = field
        if field.is_number_field:
            if p0 is None:
                p0 = constants.DEFAULT_P0_NUMBER_FIELD
            if pinf is None:
                pinf = 1
            if isinstance(pinf, places.Place):
                pinf = pinf.index
            self.pinf = places.find_place(field, None, pinf)
        else:
            if p0 is None:
                p0 = default_p0(field)
            if p0 != places.INFINITY:
                p0 = tuple(field.gf(p0))
                if len(p0) != 2:
                    raise errors.InvalidInput(
                        'P0 must have N(P0) = q, %s has degree %s.' %
                        (exactnum.gf_to_str(p0), len(p0) - 1))
            self.pinf = None
        self.p0 = places.check_base(field, p0)
        self.s0 = places.places_above(field, self.p0)

    @property
    def P0(self):
        return places.base_place(self.field, self.p0)

    def __repr__(self):
        return 'CanonicalChoice(%s, P0=%s, Pinf=%s)' % (
            self.field, self.P0.label,
            self.pinf.label if self.pinf is not None else None)


def canonical_divisor(K, choice=None):
    """omega' = R_{K/K0} - sum_{S0} 2 e_P P + a_inf P_inf.

    The a_inf term only exists in characteristic 0.
    """
    choice = choice or CanonicalChoice(K)
    if choice.field != K:
        raise errors.FieldMismatch('Choice made for %s, not %s.' %
                                   (choice.field, K))
    omega = ramification_divisor(K)
    s0_term = dict((P, 2 * P.e) for P in choice.s0)
    omega = omega - Divisor(K, s0_term)
    if K.is_number_field:
        a_inf = logexpr.LogExpr.rational(0)
        for P in choice.s0:
            a_inf = a_inf + places.log_norm(P) * (2 * P.e)
        a_inf = a_inf / choice.pinf.dim
        omega = omega + Divisor(K, {choice.pinf: a_inf})
    LOG.debug('omega\' of %s for %s: %s', K, choice, omega)
    return omega


def canonical_degree_identity(K, choice=None, precision=None):
    """(deg omega', expected) with expected |disc| / 2^S2 or q^(2g - 2)."""
    omega = canonical_divisor(K, choice)
    if K.is_number_field:
        __, s2 = places.s_counts(K)
        expected = Fraction(abs(K.discriminant), 2 ** s2)
    else:
        expected = Fraction(K.p) ** (2 * K.genus - 2)
    return degree(omega, precision), expected


def degree_enclosure(D, precision=None):
    """deg D as a CertReal even when it is rational."""
    value = degree(D, precision)
    if isinstance(value, certreal.CertReal):
        return value
    return certreal.CertReal.exact(value, precision)
