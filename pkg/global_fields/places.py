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

"""Places of global fields and their normalized valuations.

Finite places of a number field come from the factorization of the minimal
polynomial modulo p (Dedekind-Kummer, valid because the fields are
monogenic); valuations are computed by membership in HNF lattices of prime
ideal powers.  Finite places of a quadratic function field y^2 = f(t) are
ramified, split or inert over an irreducible pi(t) depending on f mod pi;
the places at infinity are read on the model w^2 = f*(s) with s = 1/t and
w = y / t^k.
"""
from __future__ import absolute_import

import collections
from fractions import Fraction
import functools
import logging

from sympy import factorint
from sympy.polys import galoistools as gf
from sympy.polys.domains import ZZ

from global_fields import certreal
from global_fields import common
from global_fields import errors
from global_fields import exactnum
from global_fields import fields
from global_fields import logexpr


LOG = logging.getLogger(__name__)

REAL = 'real'
COMPLEX = 'complex'
FINITE = 'finite'

# Local behaviour of a finite place over its base place
DEDEKIND = 'dedekind'
RATIONAL = 'rational'
RAMIFIED = 'ramified'
SPLIT = 'split'
INERT = 'inert'

INFINITY = fields.INFINITY

#: Uniformizer s of the model at infinity
_S = (1, 0)


class Place(object):
    """A place of a global field.

    :param field: Field the place belongs to
    :type field: fields.GlobalField
    :param kind: REAL, COMPLEX or FINITE
    :type kind: str
    :param base: Rational prime, monic irreducible in t, INFINITY or None
                 for archimedean places
    :param index: 1-based position among the places with the same base
                  (among all archimedean places for REAL and COMPLEX)
    :type index: int
    :param factor: Local factor of f mod p (number fields) or residue of y
                   (split function field places)
    :type factor: tuple
    :param e: Ramification index over the place of K0 below
    :type e: int
    :param f_res: Residue degree over the place of K0 below
    :type f_res: int
    """
    __slots__ = ('field', 'kind', 'base', 'index', 'factor', 'e', 'f_res',
                 'local', 'count', 'root_index')

    def __init__(self, field, kind, base=None, index=1, factor=None, e=1,
                 f_res=1, local=None, count=1, root_index=None):
        self.field = field
        self.kind = kind
        self.base = base
        self.index = index
        self.factor = factor
        self.e = e
        self.f_res = f_res
        self.local = local
        self.count = count
        self.root_index = root_index

    @property
    def is_archimedean(self):
        return self.kind != FINITE

    @property
    def is_infinite(self):
        """Archimedean or above the infinite place of F_p(t)."""
        return self.is_archimedean or self.base == INFINITY

    @property
    def dim(self):
        """Real dimension of the completion (archimedean places)."""
        return 2 if self.kind == COMPLEX else 1

    @property
    def degree(self):
        """Residue degree over the prime field."""
        if self.is_archimedean:
            return None
        if self.field.is_number_field or self.base == INFINITY:
            return self.f_res
        return self.f_res * (len(self.base) - 1)

    @property
    def label(self):
        """Token of the place in the divisor grammar."""
        if self.is_archimedean:
            return 'inf%s' % self.index
        if self.base == INFINITY:
            return 'inf' if self.count == 1 else 'inf%s' % self.index
        if self.field.is_number_field:
            base = str(self.base)
        else:
            base = exactnum.gf_to_str(self.base)
        if self.count == 1:
            return '(%s)' % base
        return '(%s,%s)' % (base, self.index)

    @property
    def sort_key(self):
        if self.is_archimedean:
            return (1, (), self.index)
        if self.base == INFINITY:
            return (0, (2,), self.index)
        if self.field.is_number_field:
            return (0, (0, self.base), self.index)
        return (0, (1, len(self.base), self.base), self.index)

    @property
    def key(self):
        return (self.field, self.kind, self.base, self.index)

    def __eq__(self, other):
        return isinstance(other, Place) and self.key == other.key

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return '<Place %s of %s e=%s f=%s>' % (self.label, self.field,
                                               self.e, self.f_res)

    def __str__(self):
        return self.label

    def root(self, precision=None):
        """Root enclosure of an archimedean place."""
        return self.field.roots(precision)[self.root_index]

    def norm(self, precision=None):
        return norm_N(self, precision)

    def log_norm(self):
        return log_norm(self)


# Enumeration

def check_base(K, base):
    if K.is_number_field:
        if base == INFINITY or not isinstance(base, int):
            raise errors.InvalidInput('Places of %s lie above rational '
                                      'primes, got %r.' % (K, base))
        try:
            exactnum.check_prime(base)
        except errors.InvalidInput:
            raise errors.InvalidInput('Base %s is not prime.' % base)
        return base
    if base == INFINITY:
        return base
    base = tuple(exactnum.gf_poly(base, K.p))
    if len(base) < 2 or base[0] != 1:
        raise errors.InvalidInput('Base %s must be monic of positive '
                                  'degree.' % exactnum.gf_to_str(base))
    if not gf.gf_irreducible_p(list(base), K.p, ZZ):
        raise errors.InvalidInput('Base %s is composite mod %s.' %
                                  (exactnum.gf_to_str(base), K.p))
    return base


def places_above(K, base):
    """Every place of K above a place of K0, in canonical order.

    :param K: Global field
    :type K: fields.GlobalField
    :param base: Rational prime (number fields), monic irreducible
                 polynomial in t or INFINITY (function fields)
    :rtype: list of Place
    """
    return list(_places_above(K, check_base(K, base)))


@functools.lru_cache(maxsize=1024)
def _places_above(K, base):
    if K.is_number_field:
        factors = exactnum.poly_factor_mod_p(K.minpoly, base)
        result = tuple(Place(K, FINITE, base, i + 1, g, k, len(g) - 1,
                             DEDEKIND, len(factors))
                       for i, (g, k) in enumerate(factors))
    elif isinstance(K, fields.QuadraticFunctionField):
        if base == INFINITY:
            pi, model = _S, K.f_star
        else:
            pi, model = base, K.f
        local, residues = _splitting(model, pi, K.p)
        if local == RAMIFIED:
            result = (Place(K, FINITE, base, 1, None, 2, 1, local),)
        elif local == INERT:
            result = (Place(K, FINITE, base, 1, None, 1, 2, local),)
        else:
            result = tuple(Place(K, FINITE, base, i + 1, r, 1, 1, local, 2)
                           for i, r in enumerate(residues))
    else:
        result = (Place(K, FINITE, base, 1, None, 1, 1, RATIONAL),)
    LOG.debug('%s places of %s above %s', len(result), K, base)
    return result


def _splitting(model, pi, p):
    """Behaviour of w^2 = model(s) over the irreducible pi."""
    reduced = gf.gf_rem(list(model), list(pi), p, ZZ)
    if not reduced:
        return RAMIFIED, ()
    root = exactnum.gf_sqrt_mod(reduced, list(pi), p)
    if root is None:
        return INERT, ()
    other = gf.gf_rem(gf.gf_neg(root, p, ZZ), list(pi), p, ZZ)
    residues = sorted([tuple(int(c) for c in root),
                       tuple(int(c) for c in other)], key=lambda r: (len(r),
                                                                     r))
    return SPLIT, tuple(residues)


def archimedean_places(K):
    """Real places first, then complex places, by root ordering."""
    if not K.is_number_field:
        return []
    return list(_archimedean_places(K))


@functools.lru_cache(maxsize=256)
def _archimedean_places(K):
    roots = K.roots()
    return tuple(Place(K, REAL if root.is_real else COMPLEX, None, i + 1,
                       e=1, f_res=1, root_index=root.index)
                 for i, root in enumerate(roots))


def infinite_places(K):
    """Archimedean places, or the places above INFINITY in char p."""
    if K.is_number_field:
        return archimedean_places(K)
    return places_above(K, INFINITY)


def base_place(K, base):
    """The place of K0 below, given its base."""
    K0 = K.base_field()
    if base is None:
        return archimedean_places(K0)[0]
    return places_above(K0, base)[0]


def find_place(K, base, index=None):
    """Place of K from its divisor grammar token data.

    :param base: Prime, polynomial, INFINITY or None (archimedean)
    :param index: 1-based index, optional when the place is unique
    """
    if base is None:
        candidates = archimedean_places(K)
        if not candidates:
            raise errors.InvalidInput('%s has no archimedean places.' % K)
    else:
        candidates = places_above(K, base)
    if index is None:
        if len(candidates) != 1:
            raise errors.InvalidInput(
                'Ambiguous place, %s candidates: %s.' %
                (len(candidates), ', '.join(c.label for c in candidates)))
        return candidates[0]
    if not 1 <= index <= len(candidates):
        raise errors.InvalidInput('No place with index %s, %s available.' %
                                  (index, len(candidates)))
    return candidates[index - 1]


# Local invariants

def norm_N(P, precision=None):
    """N(P): residue field size, e^dim at archimedean places."""
    if P.is_archimedean:
        return certreal.CertReal.exact(P.dim, precision).exp()
    return _residue_characteristic(P) ** P.degree


def _residue_characteristic(P):
    return P.base if P.field.is_number_field else P.field.p


def log_norm(P):
    """log N(P) as an exact LogExpr."""
    if P.is_archimedean:
        return logexpr.LogExpr.rational(P.dim)
    return logexpr.LogExpr.log(_residue_characteristic(P)) * P.degree


def s_counts(K):
    """(S1, S2): real embeddings and complex embeddings."""
    if not K.is_number_field:
        return 0, 0
    r1, r2 = K.signature
    return r1, 2 * r2


# Valuations

def _int_valuation(n, p):
    n = abs(int(n))
    k = 0
    while n and n % p == 0:
        n //= p
        k += 1
    return k


def _element_from_coords(K, coords):
    return fields.NumberFieldElement(K, list(reversed([int(c)
                                                       for c in coords])))


def _columns(h):
    n = len(h)
    return [[h[i][j] for i in range(n)] for j in range(n)]


def ideal_hnf(K, generators):
    """HNF basis (columns) of the ideal generated by integral elements."""
    theta = K.generator()
    vectors = []
    for g in generators:
        g = K.element(g)
        for _ in range(K.degree):
            vectors.append([int(c) for c in g.coords()])
            g = g * theta
    matrix = [[v[i] for v in vectors] for i in range(K.degree)]
    h, _ = exactnum.hnf(matrix)
    return h


def ideal_mul(K, h1, h2):
    """HNF of the product of two integral ideals."""
    products = []
    for a in _columns(h1):
        x = _element_from_coords(K, a)
        for b in _columns(h2):
            products.append([int(c) for c in
                             (x * _element_from_coords(K, b)).coords()])
    matrix = [[v[i] for v in products] for i in range(K.degree)]
    h, _ = exactnum.hnf(matrix)
    return h


def ideal_contains(h, element):
    """Membership of an integral element in the ideal with HNF h."""
    coords = element.coords()
    if any(c.denominator != 1 for c in coords):
        return False
    return exactnum.lattice_solve(h, [int(c) for c in coords]) is not None


def prime_ideal(P):
    """HNF of the prime ideal (p, g(theta))."""
    K = P.field
    g = fields.NumberFieldElement(K, list(P.factor))
    return ideal_hnf(K, [K.element(P.base), g])


@functools.lru_cache(maxsize=1024)
def ideal_power(P, k):
    """HNF of P^k, k >= 0."""
    K = P.field
    if k == 0:
        return ideal_hnf(K, [K.one()])
    if k == 1:
        return prime_ideal(P)
    return ideal_mul(K, ideal_power(P, k - 1), prime_ideal(P))


def _nf_valuation(P, alpha):
    K = P.field
    p = P.base
    numerator = fields.NumberFieldElement(K, list(alpha.num))
    bound = _int_valuation(numerator.norm().numerator, p) // P.f_res
    k = 0
    while k < bound and ideal_contains(ideal_power(P, k + 1), numerator):
        k += 1
    return k - P.e * _int_valuation(alpha.den, p)


def _local_valuation(P, a, b, model, pi):
    """Valuation of the integral a + b*w at P, where w^2 = model."""
    p = P.field.p
    pi = list(pi)
    va = exactnum.gf_valuation(a, pi, p)
    vb = exactnum.gf_valuation(b, pi, p)
    if P.local == RAMIFIED:
        candidates = []
        if va is not None:
            candidates.append(2 * va)
        if vb is not None:
            candidates.append(2 * vb + 1)
        return min(candidates)
    m = min(v for v in (va, vb) if v is not None)
    if P.local == INERT:
        return m
    pi_m = gf.gf_pow(pi, m, p, ZZ)
    a = gf.gf_quo(a, pi_m, p, ZZ) if a else []
    b = gf.gf_quo(b, pi_m, p, ZZ) if b else []
    residue = gf.gf_rem(gf.gf_add(a, gf.gf_mul(b, list(P.factor), p, ZZ), p,
                                  ZZ), pi, p, ZZ)
    if residue:
        return m
    # a + b*w is a unit at the conjugate place, so its valuation is the one
    # of its norm
    norm = gf.gf_sub(gf.gf_mul(a, a, p, ZZ),
                     gf.gf_mul(gf.gf_mul(b, b, p, ZZ), list(model), p, ZZ),
                     p, ZZ)
    return m + exactnum.gf_valuation(norm, pi, p)


def _qff_valuation(P, alpha):
    K = P.field
    p = K.p
    a, b, d = alpha.integral_parts()
    if P.base != INFINITY:
        return (_local_valuation(P, a, b, K.f, P.base) -
                P.e * exactnum.gf_valuation(d, list(P.base), p))
    k = K.k_inf
    degrees = []
    if a:
        degrees.append(len(a) - 1)
    if b:
        degrees.append(len(b) - 1 + k)
    r = max(degrees)
    a_hat = exactnum.gf_reverse(a, r) if a else []
    b_hat = exactnum.gf_reverse(b, r - k) if b else []
    return (_local_valuation(P, a_hat, b_hat, K.f_star, _S) - P.e * r +
            P.e * (len(d) - 1))


def finite_valuation_exponent(P, alpha):
    """Exact v_P(alpha) at a finite place.

    :raises: DomainError for alpha == 0
    """
    if P.is_archimedean:
        raise errors.InvalidInput('%s is archimedean.' % P.label)
    alpha = P.field.element(alpha)
    if alpha.is_zero():
        raise errors.DomainError('v_P(0) is infinite.')
    if P.field.is_number_field:
        return _nf_valuation(P, alpha)
    if isinstance(P.field, fields.QuadraticFunctionField):
        return _qff_valuation(P, alpha)
    if P.base == INFINITY:
        return alpha.degree_valuation()
    return alpha.valuation(P.base)


def embedding_abs(P, alpha, precision=None):
    """phi_P(alpha) at an archimedean place as a CertReal."""
    value = alpha.embed(P.root(precision))
    if P.kind == REAL:
        return abs(value.re)
    return value.abs2()


def normalized_valuation(P, alpha, precision=None):
    """phi_P(alpha).

    :returns: N(P)^-v_P(alpha) as a Fraction at finite places, |theta_P|
              or |theta_P|^2 as a CertReal at archimedean places
    """
    alpha = P.field.element(alpha)
    if P.is_archimedean:
        if alpha.is_zero():
            return certreal.CertReal.exact(0, precision)
        q = alpha.rational_value()
        if q is not None:
            return certreal.CertReal.exact(abs(q) ** P.dim, precision)
        return embedding_abs(P, alpha, precision)
    if alpha.is_zero():
        return Fraction(0)
    return Fraction(norm_N(P)) ** -finite_valuation_exponent(P, alpha)


def support_bases(alpha):
    """Bases of the finite places where alpha may have nonzero valuation."""
    K = alpha.field
    if K.is_number_field:
        numerator = fields.NumberFieldElement(K, list(alpha.num))
        n = abs(numerator.norm().numerator) * alpha.den
        return sorted(int(p) for p in factorint(n))
    p = K.p
    if isinstance(K, fields.QuadraticFunctionField):
        a, b, d = alpha.integral_parts()
        norm = gf.gf_sub(gf.gf_mul(a, a, p, ZZ),
                         gf.gf_mul(gf.gf_mul(b, b, p, ZZ), list(K.f), p, ZZ),
                         p, ZZ)
        polys = [norm, d]
    else:
        polys = [list(alpha.num), list(alpha.den)]
    bases = set()
    for g in polys:
        if len(g) > 1:
            for factor, _ in exactnum.poly_factor_mod_p(g, p):
                bases.add(factor)
    return sorted(bases, key=lambda g: (len(g), g)) + [INFINITY]


def all_places_in_support(alpha):
    """Places where phi_P(alpha) may differ from 1.

    Finite places are listed when v_P(alpha) != 0; every archimedean
    place is listed.
    """
    alpha_field = alpha.field
    if alpha.is_zero():
        raise errors.DomainError('0 has infinite valuation everywhere.')
    result = []
    for base in support_bases(alpha):
        for P in places_above(alpha_field, base):
            if finite_valuation_exponent(P, alpha):
                result.append(P)
    result.extend(archimedean_places(alpha_field))
    return result


@common.escalate
def product_formula_defect(alpha, precision=None):
    """Product of phi_P(alpha) over all places.

    :returns: Exactly 1 as a Fraction in characteristic p, an enclosure
              of 1 as a CertReal in characteristic 0
    """
    if alpha.is_zero():
        raise errors.DomainError('The product formula needs alpha != 0.')
    finite = Fraction(1)
    archimedean = certreal.CertReal.exact(1, precision)
    for P in all_places_in_support(alpha):
        if P.is_archimedean:
            archimedean = archimedean * normalized_valuation(P, alpha,
                                                             precision)
        else:
            finite *= normalized_valuation(P, alpha)
    if not alpha.field.is_number_field:
        return finite
    return archimedean * finite


# Extensions

class Extension(object):
    """A supported extension L/K with L0 == K0.

    Supported pairs: a number field over Q, a quadratic function field
    over F_p(t), and the trivial extension K/K.
    """

    def __init__(self, L, K):
        supported = (
            L == K or
            (L.is_number_field and K == fields.RATIONALS) or
            (isinstance(L, fields.QuadraticFunctionField) and
             isinstance(K, fields.RationalFunctionField) and L.p == K.p))
        if not supported:
            raise errors.Unsupported('Extension %s / %s is not supported.' %
                                     (L, K))
        self.L = L
        self.K = K

    @property
    def degree(self):
        return 1 if self.L == self.K else self.L.degree

    @property
    def is_trivial(self):
        return self.L == self.K

    def place_below(self, Q):
        """P_Q, the place of K below Q."""
        if self.is_trivial:
            return Q
        if Q.is_archimedean:
            return archimedean_places(self.K)[0]
        return places_above(self.K, Q.base)[0]

    def __repr__(self):
        return 'Extension(%s / %s)' % (self.L, self.K)


def _extension(Q, extension):
    if extension is None:
        return Extension(Q.field, Q.field.base_field())
    if extension.L != Q.field:
        raise errors.FieldMismatch('%s is not a place of %s.' %
                                   (Q.label, extension.L))
    return extension


def ramification_index(Q, extension=None):
    """e_Q relative to L/K (default L/L0)."""
    extension = _extension(Q, extension)
    if extension.is_trivial:
        return 1
    if Q.is_archimedean:
        return Q.dim
    return Q.e


def different_exponent(Q, extension=None):
    """r_Q, exponent of Q in the different of L/K (default L/L0).

    :returns: int at finite places, exact LogExpr at archimedean places
    """
    extension = _extension(Q, extension)
    if extension.is_trivial:
        return logexpr.LogExpr.rational(0) if Q.is_archimedean else 0
    e = ramification_index(Q, extension)
    if Q.is_archimedean:
        if e == 1:
            return logexpr.LogExpr.rational(0)
        # log N(Q) == 2 at complex places
        return -logexpr.LogExpr.log(2)
    L = Q.field
    if L.is_number_field:
        derivative = [c * (L.degree - i) for i, c in
                      enumerate(L.minpoly[:-1])]
        return finite_valuation_exponent(
            Q, fields.NumberFieldElement(L, derivative))
    if e == 1:
        return 0
    if e % L.p == 0:
        raise errors.Unsupported('Wild ramification at %s (p = %s divides '
                                 'e = %s).' % (Q.label, L.p, e))
    return e - 1


# Supplementary checks

def fundamental_identity(K, base):
    """Sum of e * f_res over the places above base."""
    return sum(P.e * P.f_res for P in places_above(K, base))


@common.requires_characteristic(True)
def discriminant(K):
    return K.discriminant


@common.requires_characteristic(False)
def genus(K):
    return K.genus


def degree(K):
    """[K : K0]."""
    return K.degree


@common.requires_characteristic(True)
def discriminant_from_different(K):
    """(prod N(Q)^r_Q over finite Q, |disc f|)."""
    total = 1
    for p in sorted(factorint(abs(K.discriminant))):
        for Q in places_above(K, int(p)):
            total *= norm_N(Q) ** different_exponent(Q)
    return total, abs(K.discriminant)


ValuationAxioms = collections.namedtuple('ValuationAxioms',
                                         ('multiplicative', 'triangle'))


def _at_most(x, y):
    """Certified x <= y, None when undecided."""
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x <= y
    x = certreal.CertReal.coerce(x)
    y = certreal.CertReal.coerce(y, x.precision)
    if x.hi <= y.lo:
        return True
    if x.lo > y.hi:
        return False
    return None


def check_valuation_axioms(P, alpha, beta, precision=None):
    """Multiplicativity and the triangle inequality of phi_P on a pair.

    Finite places are checked against the ultrametric inequality, real
    places against the triangle inequality and complex places, where
    phi_P is a squared absolute value, against phi(a+b) <= 2(phi(a) +
    phi(b)).  Undecided archimedean comparisons give None.
    """
    K = P.field
    alpha, beta = K.element(alpha), K.element(beta)
    phi = functools.partial(normalized_valuation, P, precision=precision)
    a, b, ab, s = phi(alpha), phi(beta), phi(alpha * beta), phi(alpha + beta)
    if P.is_archimedean:
        product = a * b
        multiplicative = ab.overlaps(product)
        bound = a + b if P.kind == REAL else (a + b) * 2
        return ValuationAxioms(multiplicative, _at_most(s, bound))
    return ValuationAxioms(ab == a * b, s <= max(a, b))
