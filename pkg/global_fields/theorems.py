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

"""Riemann-Roch constants, the Euler-Minkowski characteristic and the
verifications built on them.

Every verification returns a report.VerificationReport.  Comparisons are
made on logarithms: log ratios are exact LogExpr values, so a bound that is
attained (ratio 1 with C = 1, or an exact rational C) is decided exactly
and only transcendental comparisons go through certified enclosures.
"""
from __future__ import absolute_import

import collections
from fractions import Fraction
import logging
import math
import random

from global_fields import certreal
from global_fields import common
from global_fields import constants
from global_fields import divisors
from global_fields import errors
from global_fields import fields
from global_fields import h0 as h0_module
from global_fields import logexpr
from global_fields import places
from global_fields import report


__all__ = ('PiMonomial', 'ConstantsBundle', 'ball_volume', 'constant_C',
           'constant_B', 'identity_constant', 'chi', 'chi_covolume',
           'i_function', 'verify_rr_sandwich', 'verify_rr_asymptotic',
           'verify_rh', 'verify_product_formula', 'verify_canonical_degree')

LOG = logging.getLogger(__name__)


def _fmt(q):
    if q.denominator == 1:
        return str(q.numerator)
    return '%s/%s' % (q.numerator, q.denominator)


class PiMonomial(object):
    """Exact positive real q * pi^k, q rational and k an integer."""
    __slots__ = ('q', 'k')

    def __init__(self, q, k=0):
        q = Fraction(q)
        if q <= 0:
            raise errors.DomainError('%s * pi^%s is not positive.' % (q, k))
        self.q = q
        self.k = int(k)

    @property
    def is_rational(self):
        return self.k == 0

    def log(self, precision=None):
        """log of the value: LogExpr when rational, CertReal otherwise."""
        exact = logexpr.LogExpr.log(self.q)
        if self.is_rational:
            return exact
        value = exact.evaluate(precision)
        return value + certreal.CertReal.pi(value.precision).log() * self.k

    def evaluate(self, precision=None):
        value = certreal.CertReal.exact(self.q, precision)
        if self.k:
            value = value * certreal.CertReal.pi(value.precision) ** self.k
        return value

    def _other(self, other):
        if isinstance(other, PiMonomial):
            return other
        return PiMonomial(other)

    def __mul__(self, other):
        other = self._other(other)
        return PiMonomial(self.q * other.q, self.k + other.k)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._other(other)
        return PiMonomial(self.q / other.q, self.k - other.k)

    def __rtruediv__(self, other):
        return self._other(other) / self

    def __pow__(self, n):
        return PiMonomial(self.q ** n, self.k * n)

    def __eq__(self, other):
        if isinstance(other, PiMonomial):
            return (self.q, self.k) == (other.q, other.k)
        if isinstance(other, (int, Fraction)):
            return self.k == 0 and self.q == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self.q, self.k))

    def to_literal(self):
        if not self.k:
            return _fmt(self.q)
        num, den = self.q.numerator, self.q.denominator
        pi = 'pi' if abs(self.k) == 1 else 'pi^%s' % abs(self.k)
        if self.k > 0:
            text = pi if num == 1 else '%s*%s' % (num, pi)
            return text if den == 1 else '%s/%s' % (text, den)
        if den == 1:
            return '%s/%s' % (num, pi)
        return '%s/(%s*%s)' % (num, den, pi)

    def __float__(self):
        return float(self.evaluate())

    def __repr__(self):
        return 'PiMonomial(%s)' % self.to_literal()

    __str__ = to_literal


ConstantsBundle = collections.namedtuple(
    'ConstantsBundle', ('C_theorem', 'C_remark', 'B', 'V1', 'V2'))


# Constants

def _check_signature(S1, S2):
    if S1 < 0 or S2 < 0:
        raise errors.InvalidInput('S1 and S2 must be non negative, got %s, '
                                  '%s.' % (S1, S2))
    if S2 % 2:
        raise errors.InvalidInput('S2 counts complex embeddings in '
                                  'conjugate pairs, got the odd %s.' % S2)


def ball_volume(n):
    """Volume of the unit ball of R^n, for n in {1, 2}."""
    if n == 1:
        return PiMonomial(2)
    if n == 2:
        return PiMonomial(1, 1)
    raise errors.Unsupported('Ball volumes are only needed in dimension 1 '
                             'and 2, got %s.' % n)


def constant_C(S1, S2):
    """(C_theorem, C_remark), the closed form and the corrected volume
    form of the sandwich constant.

    They agree when S2 == 0 and differ otherwise.
    """
    _check_signature(S1, S2)
    S = S1 + S2
    r1, r2 = S1, S2 // 2
    theorem = (PiMonomial(Fraction(6 ** S * math.factorial(S) * 2 ** S2,
                                   2 ** S1)) /
               PiMonomial(1, 1) ** S2)
    remark = (PiMonomial(math.factorial(S) * 2 ** (2 * r2) * 6 ** S) /
              ((ball_volume(1) * math.factorial(1)) ** r1 *
               (ball_volume(2) * math.factorial(2)) ** r2))
    return theorem, remark


def constant_B(S1, S2):
    """2^S1 * (2 pi)^(S2 / 2)."""
    _check_signature(S1, S2)
    return PiMonomial(2 ** S1) * (PiMonomial(2, 1) ** (S2 // 2))


def identity_constant(S1, S2):
    """2^S1 * pi^(S2 / 2), the value of (h0(D) / i(D)) * sqrt(deg omega') /
    deg D in characteristic 0."""
    _check_signature(S1, S2)
    return PiMonomial(2 ** S1, S2 // 2)


def constants_bundle(S1, S2):
    theorem, remark = constant_C(S1, S2)
    return ConstantsBundle(theorem, remark, constant_B(S1, S2),
                           ball_volume(1), ball_volume(2))


def field_constants(K):
    return constants_bundle(*places.s_counts(K))


# Euler-Minkowski characteristic and i(D)

def _choice(K, choice):
    if choice is None:
        return divisors.CanonicalChoice(K)
    if choice.field != K:
        raise errors.FieldMismatch('Choice made for %s, not %s.' %
                                   (choice.field, K))
    return choice


@common.requires_characteristic(True)
def chi(D, choice=None):
    """chi(D) = log deg D - 1/2 log deg omega', as an exact LogExpr."""
    omega = divisors.canonical_divisor(D.field, _choice(D.field, choice))
    return divisors.log_degree(D) - divisors.log_degree(omega) / 2


def _determinant(matrix):
    """Determinant of a positive definite matrix of enclosures.

    Gaussian elimination without pivoting; raises Indeterminate when a
    pivot enclosure touches 0.
    """
    rows = [list(row) for row in matrix]
    n = len(rows)
    det = rows[0][0]
    for k in range(n):
        pivot = rows[k][k]
        if k:
            det = det * pivot
        for i in range(k + 1, n):
            factor = rows[i][k] / pivot
            for j in range(k + 1, n):
                rows[i][j] = rows[i][j] - factor * rows[k][j]
    return det


@common.requires_characteristic(True)
@common.escalate
def chi_covolume(D, precision=None):
    """chi(D) as -log of the covolume of the ideal prod P^-a_P in the
    Minkowski space scaled by exp(-a_P) at every archimedean place.

    Independent of the canonical divisor: the covolume comes from the
    determinant of the Gram matrix of the embedded ideal basis.
    """
    K = D.field
    d, J = h0_module._multiplier_ideal(D)
    n = K.degree
    basis = [fields.NumberFieldElement(K, list(reversed(
        [J[i][j] for i in range(n)])), d) for j in range(n)]
    rows = []
    for P in places.archimedean_places(K):
        scale = (-D.coefficient(P)).evaluate(precision).exp()
        values = [b.embed(P.root(precision)) for b in basis]
        rows.append([v.re * scale for v in values])
        if P.kind == places.COMPLEX:
            rows.append([v.im * scale for v in values])
    gram = [[sum((r[i] * r[j] for r in rows[1:]), rows[0][i] * rows[0][j])
             for j in range(n)] for i in range(n)]
    det = _determinant(gram)
    if det.lo <= 0:
        raise errors.Indeterminate('Gram determinant %s not separated from '
                                   '0 at %s bits.' % (det, precision))
    return -det.log() / 2


def _i_char0(K, h0_range, chi_value, precision):
    S1, S2 = places.s_counts(K)
    scale = identity_constant(S1, S2).evaluate(precision)
    factor = (-chi_value).evaluate(precision).exp() / scale
    low, high = h0_range
    if low == high:
        return factor * low
    return (factor * low).hull(factor * high)


def i_function(D, choice=None, precision=None):
    """i(D): h0(D) e^-chi(D) / (2^S1 pi^(S2/2)) in characteristic 0,
    h0(omega' - D) in characteristic p.

    :returns: CertReal in characteristic 0, int in characteristic p
    """
    K = D.field
    choice = _choice(K, choice)
    if K.is_number_field:
        multiples = h0_module.h0(D, precision)
        return _i_char0(K, multiples.h0_range, chi(D, choice), precision)
    omega = divisors.canonical_divisor(K, choice)
    return h0_module.h0(omega - D).h0


# Sandwich comparisons

def _min(a, b):
    return certreal.CertReal(min(a.lo, b.lo), min(a.hi, b.hi),
                             max(a.precision, b.precision))


def _enclose(value, precision):
    if isinstance(value, logexpr.LogExpr):
        return value.evaluate(precision)
    return value


def _gaps(log_ratio, C, precision):
    """log C - log r and log r + log C, both >= 0 when 1/C <= r <= C."""
    log_c = C.log(precision)
    if not isinstance(log_c, logexpr.LogExpr):
        log_ratio = log_ratio.evaluate(precision)
    return log_c - log_ratio, log_ratio + log_c


def _sign(value, precision):
    if isinstance(value, logexpr.LogExpr):
        return value.sign(precision)
    order = value.cmp(0)
    if not order.decided:
        raise errors.Indeterminate('Sign of %s undecided.' % value)
    return order.value


def _margin(log_ratios, C, precision):
    margin = None
    for log_ratio in log_ratios:
        for gap in _gaps(log_ratio, C, precision):
            value = _enclose(gap, precision)
            margin = value if margin is None else _min(margin, value)
    return margin


@common.escalate
def _sandwich(log_ratios, C, precision=None):
    """(verdict, margin, equality) of 1/C <= r <= C for all log r given.

    Several log ratios stand for the corners of an h0 range, the verdict
    only holds (fails) when it holds (fails) for all of them.
    """
    corners = [min(_sign(gap, precision)
                   for gap in _gaps(log_ratio, C, precision))
               for log_ratio in log_ratios]
    if all(s >= 0 for s in corners):
        verdict = constants.HOLDS
    elif all(s < 0 for s in corners):
        verdict = constants.FAILS
    else:
        verdict = constants.INDETERMINATE
    return verdict, _margin(log_ratios, C, precision), 0 in corners


def sandwich_verdict(log_ratios, C, precision=None):
    """_sandwich, Indeterminate when enclosures straddle a bound even at
    the maximum precision."""
    try:
        return _sandwich(log_ratios, C, precision=precision)
    except errors.Indeterminate as exc:
        LOG.info('Sandwich against C = %s undecided: %s', C, exc.message)
        return (constants.INDETERMINATE,
                _margin(log_ratios, C, common.working_precision(precision)),
                False)


def _log_h0(h0_range):
    low, high = h0_range
    return [logexpr.LogExpr.log(low)] + (
        [logexpr.LogExpr.log(high)] if high != low else [])


def _ratio_enclosure(log_ratios, precision):
    value = log_ratios[0].evaluate(precision)
    for log_ratio in log_ratios[1:]:
        value = value.hull(log_ratio.evaluate(precision))
    return value.exp()


def _choice_inputs(choice):
    inputs = {'p0': str(choice.P0.label)}
    if choice.pinf is not None:
        inputs['pinf'] = choice.pinf.label
    return inputs


def verify_rr_sandwich(K, D, choice=None, precision=None, parameter=None):
    """Certify 1/C <= (h0(D) / h0(omega' - D)) sqrt(deg omega') / deg D <= C.

    Both C variants are reported with their own verdict, the report
    verdict is the one against the corrected volume form C_remark.
    """
    if D.field != K:
        raise errors.FieldMismatch('%s is a divisor on %s, not %s.' %
                                   (D, D.field, K))
    choice = _choice(K, choice)
    omega = divisors.canonical_divisor(K, choice)
    h = h0_module.h0(D, precision)
    hd = h0_module.h0(omega - D, precision)
    log_omega = divisors.log_degree(omega)
    base = log_omega / 2 - divisors.log_degree(D)
    log_ratios = [base + a - b for a in _log_h0(h.h0_range)
                  for b in reversed(_log_h0(hd.h0_range))]
    bundle = field_constants(K)
    theorem = sandwich_verdict(log_ratios, bundle.C_theorem, precision)
    remark = sandwich_verdict(log_ratios, bundle.C_remark, precision)

    attains = False
    if h.is_exact and bundle.C_theorem.is_rational:
        attains = (logexpr.LogExpr.log(h.h0) + base ==
                   logexpr.LogExpr.log(bundle.C_theorem.q))
    quantities = {
        'deg': divisors.degree_enclosure(D, precision),
        'h0': h.h0_range if not h.is_exact else h.h0,
        'h0_dual': hd.h0_range if not hd.is_exact else hd.h0,
        'ratio': _ratio_enclosure(log_ratios, precision),
        'C_theorem': bundle.C_theorem,
        'C_remark': bundle.C_remark,
        'B': bundle.B,
    }
    details = {
        'verdict_C_theorem': theorem[0],
        'verdict_C_remark': remark[0],
        'margin_C_theorem': theorem[1],
        'equality': remark[2],
        'attains_C_theorem': attains,
        'certification': '%s/%s' % (h.certification, hd.certification),
    }
    inputs = _choice_inputs(choice)
    if parameter is not None:
        inputs['parameter'] = parameter
    LOG.info('rr1 %s %s: %s (C_theorem %s)', K, D, remark[0], theorem[0])
    return report.VerificationReport('rr1', K.literal, D.to_literal(),
                                     quantities, remark[0], remark[1],
                                     details, inputs)


# Asymptotics

def _within(i_value, eps):
    """Certified |i - 1| < eps, None when undecided."""
    if not isinstance(i_value, certreal.CertReal):
        return abs(i_value - 1) < eps
    upper = i_value.cmp(1 + eps)
    lower = i_value.cmp(1 - eps)
    if upper is certreal.Ordering.LESS and \
            lower is certreal.Ordering.GREATER:
        return True
    if upper is certreal.Ordering.GREATER or \
            lower is certreal.Ordering.LESS:
        return False
    return None


def _eps(eps):
    if isinstance(eps, float):
        return Fraction(repr(eps))
    return Fraction(eps)


def rr_asymptotic_point(K, D, eps=constants.DEFAULT_EPS, choice=None,
                        precision=None, parameter=None):
    """i(D) at one sweep point, with the rearranged identity checked.

    The verdict is whether |i(D) - 1| < eps.
    """
    eps = _eps(eps)
    choice = _choice(K, choice)
    omega = divisors.canonical_divisor(K, choice)
    h = h0_module.h0(D, precision)
    S1, S2 = places.s_counts(K)
    identity = identity_constant(S1, S2)
    log_scale = divisors.log_degree(omega) / 2 - divisors.log_degree(D)
    quantities = {'deg': divisors.degree_enclosure(D, precision),
                  'h0': h.h0 if h.is_exact else h.h0_range}
    if K.is_number_field:
        chi_value = divisors.log_degree(D) - divisors.log_degree(omega) / 2
        i_value = _i_char0(K, h.h0_range, chi_value, precision)
        identity_value = (certreal.CertReal.exact(h.h0, precision) / i_value *
                          log_scale.evaluate(precision).exp())
        identity_holds = identity_value.overlaps(
            identity.evaluate(precision))
        margin = certreal.CertReal.exact(eps, precision) - abs(i_value - 1)
    else:
        i_value = h0_module.h0(omega - D).h0
        identity_value = None
        # classical Riemann-Roch in multiplicative form
        identity_holds = (logexpr.LogExpr.log(h.h0) -
                          logexpr.LogExpr.log(i_value) +
                          log_scale).is_zero()
        margin = eps - abs(i_value - 1)
        quantities['h0_dual'] = i_value
    quantities['i'] = i_value
    within = _within(i_value, eps)
    verdict = {True: constants.HOLDS, False: constants.FAILS,
               None: constants.INDETERMINATE}[within]
    details = {'identity': identity, 'identity_holds': identity_holds}
    if identity_value is not None:
        details['identity_value'] = identity_value
    inputs = _choice_inputs(choice)
    if parameter is not None:
        inputs['parameter'] = parameter
    return report.VerificationReport('rr2', K.literal, D.to_literal(),
                                     quantities, verdict, margin, details,
                                     inputs)


def summarize_asymptotic(K, series, eps=constants.DEFAULT_EPS):
    """Summary of a sweep: Holds when the last points all are within eps.

    The threshold is the degree of the first point of that final run.
    """
    eps = _eps(eps)
    run = 0
    for point in reversed(series):
        if point.verdict != constants.HOLDS:
            break
        run += 1
    S1, S2 = places.s_counts(K)
    identity = identity_constant(S1, S2)
    B = constant_B(S1, S2)
    details = {
        'eps': eps,
        'points': len(series),
        'points_within': run,
        'identity_constant': identity,
        'B': B,
        'identity_equals_B': identity == B,
        'identity_holds': all(p.details.get('identity_holds')
                              for p in series),
    }
    quantities = {'B': B}
    margin = None
    if run:
        first = series[len(series) - run]
        details['threshold_divisor'] = first.divisor
        details['threshold_degree'] = first.quantities['deg']
        quantities['deg'] = first.quantities['deg']
        verdict = constants.HOLDS
        margin = first.margin
    elif series:
        verdict = series[-1].verdict
        margin = series[-1].margin
    else:
        raise errors.InvalidInput('Empty sweep.')
    LOG.info('rr2 %s: %s, %s of %s points within %s', K, verdict, run,
             len(series), eps)
    return report.VerificationReport('rr2', K.literal, 'summary',
                                     quantities, verdict, margin, details,
                                     {'parameter': float('inf')})


def _check_increasing(sweep, precision):
    for a, b in zip(sweep, sweep[1:]):
        difference = divisors.log_degree(b) - divisors.log_degree(a)
        if difference.sign(precision) <= 0:
            raise errors.InvalidInput('Sweep degrees must increase: %s '
                                      'then %s.' % (a, b))


def verify_rr_asymptotic(K, sweep, eps=constants.DEFAULT_EPS, choice=None,
                         precision=None, mapper=map):
    """(summary, series) of i(D) along a sweep of increasing degree.

    :param sweep: Divisors, or (parameter, divisor) pairs
    :type sweep: list
    :param mapper: map compatible callable running the sweep points,
                   the result order must be the input order
    """
    points = [s if isinstance(s, tuple) else (n, s)
              for n, s in enumerate(sweep)]
    _check_increasing([D for _, D in points], precision)
    choice = _choice(K, choice)

    def run(point):
        parameter, D = point
        return rr_asymptotic_point(K, D, eps, choice, precision, parameter)

    series = list(mapper(run, points))
    return summarize_asymptotic(K, series, eps), series


# Riemann-Hurwitz, product formula, canonical degree

def _exact_zero_verdict(difference, precision):
    """(verdict, margin) of difference == 0 for a LogExpr."""
    if difference.is_exact:
        if difference.is_zero():
            return constants.HOLDS, Fraction(0)
        return constants.FAILS, difference
    value = difference.evaluate(precision)
    if not value.contains_zero():
        return constants.FAILS, value
    return constants.INDETERMINATE, value


def verify_rh(L, K=None, choice_L=None, choice_K=None, precision=None):
    """Certify deg omega'_L = deg omega'_K^[L:K] * deg R_{L/K}."""
    extension = places.Extension(L, K if K is not None else L.base_field())
    K = extension.K
    choice_L, choice_K = _choice(L, choice_L), _choice(K, choice_K)
    omega_L = divisors.canonical_divisor(L, choice_L)
    omega_K = divisors.canonical_divisor(K, choice_K)
    R = divisors.ramification_divisor(extension)
    difference = (divisors.log_degree(omega_L) -
                  divisors.log_degree(omega_K) * extension.degree -
                  divisors.log_degree(R))
    verdict, margin = _exact_zero_verdict(difference, precision)
    deg_omega_L = divisors.degree(omega_L, precision)
    quantities = {
        'deg': deg_omega_L,
        'deg_omega_L': deg_omega_L,
        'deg_omega_K': divisors.degree(omega_K, precision),
        'deg_R': divisors.degree(R, precision),
        'degree': extension.degree,
    }
    details = {'base_field': K.literal, 'R': R.to_literal()}
    LOG.info('rh %s / %s: %s', L, K, verdict)
    return report.VerificationReport(
        'rh', L.literal, '', quantities, verdict, margin, details,
        {'p0': choice_L.P0.label, 'p0_base': choice_K.P0.label})


def verify_product_formula(K, count=constants.DEFAULT_PF_COUNT,
                           seed=constants.DEFAULT_SEED, height=3,
                           precision=None):
    """Product formula on `count` random nonzero elements of K."""
    rng = random.Random(seed)
    holds, fails = 0, 0
    max_radius = Fraction(0)
    failures = []
    for _ in range(count):
        alpha = fields.random_element(K, rng, height)
        value = places.product_formula_defect(alpha, precision=precision)
        if isinstance(value, certreal.CertReal):
            ok = value.contains(1)
            max_radius = max(max_radius, certreal.to_fraction(value.radius))
        else:
            ok = value == 1
        if ok:
            holds += 1
        else:
            fails += 1
            failures.append(alpha.to_literal())
    verdict = constants.HOLDS if not fails else constants.FAILS
    details = {'count': count, 'seed': seed, 'exact': not K.is_number_field,
               'max_radius': float(max_radius)}
    if failures:
        details['first_failure'] = failures[0]
    LOG.info('pf %s: %s of %s products enclose 1', K, holds, count)
    return report.VerificationReport('pf', K.literal, '', {}, verdict,
                                     max_radius, details)


def verify_canonical_degree(K, choice=None, precision=None):
    """Certify deg omega' = |disc| / 2^S2 or q^(2g - 2)."""
    choice = _choice(K, choice)
    omega = divisors.canonical_divisor(K, choice)
    deg, expected = divisors.canonical_degree_identity(K, choice, precision)
    difference = divisors.log_degree(omega) - logexpr.LogExpr.log(expected)
    verdict, margin = _exact_zero_verdict(difference, precision)
    LOG.info('canon %s: %s', K, verdict)
    return report.VerificationReport(
        'canon', K.literal, omega.to_literal(),
        {'deg': deg, 'expected': expected}, verdict, margin,
        {'omega': omega.to_literal()}, _choice_inputs(choice))
