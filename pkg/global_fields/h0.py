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

"""Spaces of multiples H0(D) = {alpha : phi_P(alpha) <= N(P)^a_P} and their
cardinalities h0(D).

Number fields: H0(D) is the set of points of the fractional ideal
prod P^-a_P inside a product of discs, found by exact ellipsoid
enumeration and filtered place by place.

Function fields: H0(D) is the Riemann-Roch space L(D), an F_p vector
space, computed as the kernel of the valuation constraints on an ansatz
space of functions (A + B y) / E.
"""
from __future__ import absolute_import

from fractions import Fraction
import itertools
import logging
import math

from sympy.polys import galoistools as gf
from sympy.polys.domains import FF, ZZ
from sympy.polys.matrices import DomainMatrix

from global_fields import certreal
from global_fields import common
from global_fields import constants
from global_fields import errors
from global_fields import exactnum
from global_fields import fields
from global_fields import logexpr
from global_fields import places


LOG = logging.getLogger(__name__)

#: Gram matrix entries are rounded to this many fractional bits
GRAM_BITS = 64


class MultipleSet(object):
    """H0(D) with its cardinality.

    :param divisor: The divisor D
    :type divisor: divisors.Divisor
    :param h0: Cardinality, the lower end of h0_range when some elements
               could not be decided
    :type h0: int
    :param certification: CERT_EXACT or CERT_INTERVAL_BOUNDARY
    :type certification: str
    :param elements: Members in canonical order (number fields)
    :type elements: list
    :param basis: F_p basis of L(D) (function fields)
    :type basis: list
    :param undecided: Elements on the boundary that stayed undecided
    :type undecided: list
    """

    def __init__(self, divisor, h0, certification=constants.CERT_EXACT,
                 elements=None, basis=None, undecided=None):
        self.divisor = divisor
        self.h0 = h0
        self.certification = certification
        self.elements = elements
        self.basis = basis
        self.undecided = undecided or []

    @property
    def field(self):
        return self.divisor.field

    @property
    def h0_range(self):
        return self.h0, self.h0 + len(self.undecided)

    @property
    def is_exact(self):
        return self.certification == constants.CERT_EXACT

    @property
    def dimension(self):
        """dim over F_p in characteristic p."""
        return None if self.basis is None else len(self.basis)

    def iter_elements(self):
        """Members in canonical order."""
        if self.elements is not None:
            for alpha in self.elements:
                yield alpha
            return
        K = self.field
        zero = K.zero()
        for coefficients in itertools.product(range(K.p),
                                              repeat=len(self.basis)):
            alpha = zero
            for c, b in zip(coefficients, self.basis):
                if c:
                    alpha = alpha + b * c
            yield alpha

    def dump_elements(self, stream, limit=None):
        """Write one element literal per line."""
        limit = limit or constants.LIST_MAX_ELEMENTS
        if self.h0 > limit:
            raise errors.InstanceTooLarge('%s elements, listing is limited '
                                          'to %s.' % (self.h0, limit))
        for alpha in self.iter_elements():
            stream.write(alpha.to_literal() + '\n')
        for alpha in self.undecided:
            stream.write('%s ?\n' % alpha.to_literal())

    def __repr__(self):
        low, high = self.h0_range
        count = low if low == high else '%s..%s' % (low, high)
        return '<MultipleSet h0=%s of %s (%s)>' % (count, self.divisor,
                                                   self.certification)


# Archimedean membership

def _exact_abs2(P, beta):
    """|sigma_P(beta)|^2 when it is a rational number known exactly."""
    q = beta.rational_value()
    if q is not None:
        return q * q
    if P.kind == places.COMPLEX and beta.field.degree == 2:
        return beta.norm()
    return None


def _real_boundary(P, beta, log_bound):
    """Whether sigma_P(beta)^2 == exp(log_bound) holds in the field.

    Decides bounds made of rational logarithms and at most one term
    c log |sigma_P(gamma)| at the same real place, by comparing
    beta^2M with R^(M/m) gamma^(cM) for an M making every exponent an
    even integer.
    """
    if P.kind != places.REAL or log_bound.constant:
        return False
    if len(log_bound.deferred) > 1:
        return False
    R, m = logexpr.LogExpr(logs=dict(log_bound.logs)).exp_power()
    gamma, c = None, Fraction(0)
    if log_bound.deferred:
        term, c = log_bound.deferred[0]
        if getattr(term, 'place', None) != P:
            return False
        gamma = term.alpha
    M = m * c.denominator // math.gcd(m, c.denominator)
    if (c * M).numerator % 2:
        M *= 2
    if M > constants.BOUNDARY_MAX_POWER:
        return False
    K = beta.field
    rhs = K.element(R ** (M // m))
    if gamma is not None:
        rhs = rhs * (gamma * gamma) ** int(c * M / 2)
    return (beta * beta) ** M == rhs


@common.escalate
def archimedean_member(P, beta, log_bound, precision=None):
    """Whether |sigma_P(beta)|^2 <= exp(log_bound).

    Exact when both sides are rational powers, certified by enclosures
    otherwise; a real place boundary beta^2m == R is detected in the field.

    :raises: Indeterminate when the enclosures cannot separate the sides
    """
    power = log_bound.exp_power()
    if power is not None and power[1] > constants.BOUNDARY_MAX_POWER:
        power = None
    exact = _exact_abs2(P, beta)
    if exact is not None and power is not None:
        bound, m = power
        return exact ** m <= bound
    if exact is not None:
        lhs = certreal.CertReal.exact(exact, precision)
    else:
        value = beta.embed(P.root(precision))
        lhs = value.re.square() if P.kind == places.REAL else value.abs2()
    rhs = log_bound.evaluate(precision).exp()
    order = lhs.cmp(rhs)
    if order is certreal.Ordering.LESS:
        return True
    if order is certreal.Ordering.GREATER:
        return False
    if _real_boundary(P, beta, log_bound):
        return True
    raise errors.Indeterminate('|%s|^2 against exp(%s) at %s undecided at '
                               '%s bits.' % (beta, log_bound, P.label,
                                             precision))


def _decide(P, beta, log_bound, precision):
    try:
        return archimedean_member(P, beta, log_bound, precision=precision)
    except errors.Indeterminate:
        LOG.warning('Boundary element %s at %s left undecided', beta,
                    P.label)
        return None


# Number fields

def _ceil_div(a, b):
    return -(-a // b)


def _multiplier_ideal(D):
    """(d, J) with I_D = J / d, J an integral ideal in HNF."""
    K = D.field
    finite = dict((P, a) for P, a in D.items() if not P.is_archimedean)
    primes = sorted(set(P.base for P in finite))
    d = 1
    J = places.ideal_hnf(K, [K.one()])
    for p in primes:
        above = places.places_above(K, p)
        m = max(0, max(_ceil_div(finite.get(P, 0), P.e) for P in above))
        d *= p ** m
        for P in above:
            k = P.e * m - finite.get(P, 0)
            if k:
                J = places.ideal_mul(K, J, places.ideal_power(P, k))
    return d, J


def _round(q, upward=None):
    scale = 2 ** GRAM_BITS
    value = q * scale
    if upward:
        return Fraction(math.ceil(value), scale)
    if upward is False:
        return Fraction(math.floor(value), scale)
    return Fraction(round(value), scale)


@common.escalate
def _search_form(K, basis, precision=None):
    """Exact positive definite form below sum_P |sigma_P(beta)|^2.

    Returns a rational Gram matrix Q0 with x^T Q0 x <= S(x) for every
    integer vector x, where S is the Minkowski length of sum x_j basis_j.
    """
    rows = []
    for P in places.archimedean_places(K):
        values = [b.embed(P.root(precision)) for b in basis]
        rows.append([v.re for v in values])
        if P.kind == places.COMPLEX:
            rows.append([v.im for v in values])
    n = len(basis)
    gram = []
    error = Fraction(0)
    for i in range(n):
        gram_row = []
        for j in range(n):
            entry = sum((r[i] * r[j] for r in rows[1:]), rows[0][i] *
                        rows[0][j])
            lo, hi = entry.lower_fraction(), entry.upper_fraction()
            mid = _round((lo + hi) / 2)
            error = max(error, hi - mid, mid - lo)
            gram_row.append(mid)
        gram.append(gram_row)
    eta = n * error
    q0 = [[gram[i][j] - (eta if i == j else 0) for j in range(n)]
          for i in range(n)]
    try:
        exactnum.ldl(q0)
    except errors.RankDeficient:
        raise errors.Indeterminate('Gram matrix not separated at %s bits.' %
                                   precision)
    return q0


@common.requires_characteristic(True)
def h0_number_field(D, precision=None):
    """H0(D) of a number field divisor by lattice point enumeration."""
    K = D.field
    d, J = _multiplier_ideal(D)
    n = K.degree
    basis = [fields.NumberFieldElement(K, list(reversed(
        [J[i][j] for i in range(n)]))) for j in range(n)]
    bounds = {}
    radius = Fraction(0)
    for P in places.archimedean_places(K):
        log_bound = (D.coefficient(P) * 2 +
                     logexpr.LogExpr.log(d) * 2)
        bounds[P] = log_bound
        radius += _round(log_bound.evaluate(precision).exp()
                         .upper_fraction(), upward=True)
    form = _search_form(K, basis, precision=precision)
    points = exactnum.enumerate_ellipsoid(form, radius)
    LOG.debug('h0 on %s: %s candidates for %s (d = %s)', K, len(points), D,
              d)

    members, undecided = [], []
    for x in points:
        beta = K.zero()
        for c, b in zip(x, basis):
            if c:
                beta = beta + b * c
        verdicts = [_decide(P, beta, bounds[P], precision) for P in bounds]
        if False in verdicts:
            continue
        alpha = beta / d
        if None in verdicts:
            undecided.append(alpha)
        else:
            members.append(alpha)
    members.sort(key=lambda a: a.coords())
    undecided.sort(key=lambda a: a.coords())
    certification = (constants.CERT_INTERVAL_BOUNDARY if undecided
                     else constants.CERT_EXACT)
    return MultipleSet(D, len(members), certification, elements=members,
                       undecided=undecided)


# Function fields

class _Ansatz(object):
    """Functions (A + B y) / E with deg A <= deg_a and deg B <= deg_b, and
    the constraints cutting L(D) out of them."""

    def __init__(self, D):
        K = D.field
        p = K.p
        self.field = K
        self.p = p
        self.quadratic = isinstance(K, fields.QuadraticFunctionField)
        finite = [(P, a) for P, a in D.items()
                  if P.base != places.INFINITY]
        exponents = {}
        for P, a in finite:
            exponents[P.base] = max(exponents.get(P.base, 0),
                                    _ceil_div(a, P.e))
        exponents = dict((b, c) for b, c in exponents.items() if c > 0)
        E = [1]
        for base, c in exponents.items():
            E = gf.gf_mul(E, gf.gf_pow(list(base), c, p, ZZ), p, ZZ)
        self.E = E
        deg_e = len(E) - 1

        infinite = places.places_above(K, places.INFINITY)
        self.pole_orders = dict((Q, D.coefficient(Q) + Q.e * deg_e)
                                for Q in infinite)
        top = max(self.pole_orders.values())
        e_inf = infinite[0].e
        self.deg_a = top // e_inf
        if self.quadratic:
            # v(B y) at infinity is -(e deg B + e deg f / 2)
            self.k_inf = K.k_inf
            self.deg_b = (top - e_inf * (len(K.f) - 1) // 2) // e_inf
        else:
            self.k_inf = 0
            self.deg_b = -1
        self.deg_a = max(self.deg_a, -1)
        self.deg_b = max(self.deg_b, -1)
        self.reversal = max(self.deg_a, self.deg_b + self.k_inf)

        self.constraints = []
        bases = set(exponents) | set(P.base for P, _ in finite)
        for base in sorted(bases, key=lambda b: (len(b), b)):
            c = exponents.get(base, 0)
            for Q in places.places_above(K, base):
                k = Q.e * c - D.coefficient(Q)
                if k > 0:
                    self.constraints.append((Q, k))
        for Q in infinite:
            k = Q.e * self.reversal - self.pole_orders[Q]
            if k > 0:
                self.constraints.append((Q, k))

    @property
    def size(self):
        return self.deg_a + 1 + self.deg_b + 1

    def unknowns(self):
        """(a, b) unit polynomials, high degree first."""
        for i in range(self.deg_a + 1):
            yield [1] + [0] * i, []
        for j in range(self.deg_b + 1):
            yield [], [1] + [0] * j

    def _local(self, Q, a, b):
        """(a, b) read in the local model of Q: (a, b, model, pi)."""
        K = self.field
        if Q.base != places.INFINITY:
            return a, b, (K.f if self.quadratic else None), list(Q.base)
        r = self.reversal
        a_hat = exactnum.gf_reverse(a, r) if a else []
        b_hat = exactnum.gf_reverse(b, r - self.k_inf) if b else []
        return a_hat, b_hat, (K.f_star if self.quadratic else None), [1, 0]

    def residues(self, Q, k, a, b):
        """Residues vanishing exactly when v_Q(a + b y) >= k."""
        p = self.p
        a, b, model, pi = self._local(Q, a, b)

        def rem(g, j):
            if j <= 0:
                return []
            modulus = gf.gf_pow(pi, j, p, ZZ)
            size = len(modulus) - 1
            r = gf.gf_rem(g, modulus, p, ZZ) if g else []
            low = [int(c) for c in reversed(r)]
            return low + [0] * (size - len(low))

        if Q.local == places.RATIONAL:
            return rem(a, k)
        if Q.local == places.INERT:
            return rem(a, k) + rem(b, k)
        if Q.local == places.RAMIFIED:
            return rem(a, (k + 1) // 2) + rem(b, k // 2)
        root = exactnum.gf_hensel_sqrt(list(model), list(Q.factor), pi, k, p)
        return rem(gf.gf_add(a, gf.gf_mul(b, root, p, ZZ), p, ZZ), k)

    def element(self, a, b):
        K = self.field
        base = K.base_field() if self.quadratic else K
        A = fields.RationalFunction(base, a, self.E)
        if not self.quadratic:
            return A
        return fields.QuadraticElement(K, A,
                                       fields.RationalFunction(base, b,
                                                               self.E))

    def combine(self, vector):
        """(a, b) polynomials from ansatz coordinates."""
        p = self.p
        a, b = [], []
        for c, (ua, ub) in zip(vector, self.unknowns()):
            if c:
                a = gf.gf_add(a, gf.gf_mul_ground(ua, c, p, ZZ), p, ZZ)
                b = gf.gf_add(b, gf.gf_mul_ground(ub, c, p, ZZ), p, ZZ)
        return a, b


@common.requires_characteristic(False)
def h0_function_field(D):
    """L(D) by exact linear algebra over F_p; h0 = p^dim."""
    ansatz = _Ansatz(D)
    p = ansatz.p
    unknowns = list(ansatz.unknowns())
    n = len(unknowns)
    rows = []
    for Q, k in ansatz.constraints:
        columns = [ansatz.residues(Q, k, a, b) for a, b in unknowns]
        rows.extend([list(r) for r in zip(*columns)] if columns else [])
    LOG.debug('L(%s): ansatz of %s functions, %s constraints', D, n,
              len(rows))
    if n == 0:
        kernel = []
    elif not rows:
        kernel = [[int(i == j) for j in range(n)] for i in range(n)]
    else:
        domain = FF(p)
        matrix = DomainMatrix([[domain(v) for v in row] for row in rows],
                              (len(rows), n), domain)
        kernel = [[int(v) % p for v in row]
                  for row in matrix.nullspace().to_Matrix().tolist()]
    basis = [ansatz.element(*ansatz.combine(v)) for v in kernel]
    return MultipleSet(D, p ** len(basis), basis=basis)


def h0(D, precision=None):
    """H0(D) for a divisor on any supported field."""
    if D.field.is_number_field:
        return h0_number_field(D, precision=precision)
    return h0_function_field(D)


# Oracles

def _box_bounds(K, D, d, precision):
    """Bounds X_i with |coordinate i of alpha * d| <= X_i on H0(D)."""
    bounds = {}
    for P in places.archimedean_places(K):
        bounds[P] = D.coefficient(P).evaluate(precision).exp()
    if K.degree == 1:
        P = places.archimedean_places(K)[0]
        return [math.floor((bounds[P] * d).upper_fraction())]
    P1 = places.archimedean_places(K)[0]
    r1 = P1.root(precision).value
    if P1.kind == places.COMPLEX:
        r2, b1, b2 = r1.conjugate(), bounds[P1], bounds[P1]
    else:
        P2 = places.archimedean_places(K)[1]
        r2, b1, b2 = P2.root(precision).value, bounds[P1], bounds[P2]
    gap = abs(r1 - r2)
    c1 = (b1 + b2) / gap
    c0 = (abs(r1) * b2 + abs(r2) * b1) / gap
    return [math.floor((c0 * d).upper_fraction()),
            math.floor((c1 * d).upper_fraction())]


@common.escalate
def _oracle_number_field(D, precision=None):
    K = D.field
    if K.degree > constants.ORACLE_MAX_DEGREE:
        raise errors.InstanceTooLarge('The oracle handles degree <= %s, '
                                      'got %s.' % (constants.ORACLE_MAX_DEGREE,
                                                   K.degree))
    finite = dict((P, a) for P, a in D.items() if not P.is_archimedean)
    d = 1
    checked = set(finite)
    for p in sorted(set(P.base for P in finite)):
        above = places.places_above(K, p)
        checked.update(above)
        d *= p ** max(0, max(_ceil_div(finite.get(P, 0), P.e)
                             for P in above))
    box = _box_bounds(K, D, d, precision)
    size = 1
    for x in box:
        size *= 2 * x + 1
    if size > constants.ORACLE_MAX_BOX:
        raise errors.InstanceTooLarge('Oracle box of %s candidates exceeds '
                                      '%s.' % (size, constants.ORACLE_MAX_BOX))
    count, undecided = 0, 0
    for x in itertools.product(*[range(-b, b + 1) for b in box]):
        alpha = fields.NumberFieldElement(K, list(reversed(x)), d)
        if alpha.is_zero():
            count += 1
            continue
        if any(places.finite_valuation_exponent(P, alpha) < -finite.get(P, 0)
               for P in checked):
            continue
        verdicts = [_decide(P, alpha, D.coefficient(P) * 2, precision)
                    for P in places.archimedean_places(K)]
        if False in verdicts:
            continue
        if None in verdicts:
            undecided += 1
        else:
            count += 1
    return count, count + undecided


def _function_field_box(D):
    """(E, deg_a, deg_b) with H0(D) inside {(a + b y) / E}.

    E clears the finite poles allowed by D, so alpha * E is integral; the
    degrees of a and b follow from the pole orders of alpha * E and of its
    conjugate at the places at infinity.
    """
    K = D.field
    p = K.p
    exponents = {}
    for Q, a in D.items():
        if Q.base != places.INFINITY:
            exponents[Q.base] = max(exponents.get(Q.base, 0),
                                    _ceil_div(a, Q.e))
    E = [1]
    for base, c in sorted(exponents.items()):
        if c > 0:
            E = gf.gf_mul(E, gf.gf_pow(list(base), c, p, ZZ), p, ZZ)
    infinite = places.infinite_places(K)
    e = infinite[0].e
    top = max(D.coefficient(Q) + Q.e * (len(E) - 1) for Q in infinite)
    deg_a = top // e
    if isinstance(K, fields.QuadraticFunctionField):
        # v(y) = -e deg f / 2 at every place at infinity
        deg_b = (2 * top - e * (len(K.f) - 1)) // (2 * e)
    else:
        deg_b = -1
    return E, max(deg_a, -1), max(deg_b, -1)


def _oracle_function_field(D):
    K = D.field
    p = K.p
    E, deg_a, deg_b = _function_field_box(D)
    limit = constants.ORACLE_MAX_POLY_DEGREE
    if deg_a > limit or deg_b > limit:
        raise errors.InstanceTooLarge('Numerator degrees %s, %s exceed %s.' %
                                      (deg_a, deg_b, limit))
    size = deg_a + deg_b + 2
    if p ** size > constants.ORACLE_MAX_FUNCTIONS:
        raise errors.InstanceTooLarge(
            '%s^%s candidate functions exceed %s.' %
            (p, size, constants.ORACLE_MAX_FUNCTIONS))
    checked = set(P for P, _ in D.items())
    if len(E) > 1:
        for base, _ in exactnum.poly_factor_mod_p(E, p):
            checked.update(places.places_above(K, base))
    checked.update(places.infinite_places(K))
    quadratic = isinstance(K, fields.QuadraticFunctionField)
    base_field = K.base_field() if quadratic else K
    count = 0
    for vector in itertools.product(range(p), repeat=size):
        a = list(vector[:deg_a + 1])
        alpha = fields.RationalFunction(base_field, a, E)
        if quadratic:
            b = list(vector[deg_a + 1:])
            alpha = fields.QuadraticElement(
                K, alpha, fields.RationalFunction(base_field, b, E))
        if alpha.is_zero() or all(
                places.finite_valuation_exponent(Q, alpha) >=
                -D.coefficient(Q) for Q in checked):
            count += 1
    return count, count


def h0_oracle_range(D, precision=None):
    """(low, high) bounds on h0(D) by brute force over a provably
    sufficient candidate set; high counts the undecided boundary elements.
    """
    if D.field.is_number_field:
        return _oracle_number_field(D, precision=precision)
    return _oracle_function_field(D)


def h0_oracle(D, precision=None):
    """h0(D) by brute force.

    :raises: Indeterminate when boundary elements stay undecided
    """
    low, high = h0_oracle_range(D, precision)
    if low != high:
        raise errors.Indeterminate('Oracle for %s left %s boundary elements '
                                   'undecided.' % (D, high - low))
    return low


def h0_checked(D, precision=None):
    """h0(D) cross-checked against the oracle.

    :raises: OracleMismatch when the enumeration and oracle ranges are
             disjoint
    """
    result = h0(D, precision)
    low, high = h0_oracle_range(D, precision)
    result_low, result_high = result.h0_range
    if high < result_low or result_high < low:
        raise errors.OracleMismatch('h0(%s): enumeration %s..%s, oracle '
                                    '%s..%s.' % (D, result_low, result_high,
                                                 low, high))
    return result
