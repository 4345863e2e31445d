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

"""Exact arithmetic foundation.

Polynomials are dense coefficient lists, highest degree first, the
convention of sympy's low level `dup_*` and `gf_*` routines which do the
heavy lifting here.  Polynomials over a prime field hold integers in
[0, p).
"""
from __future__ import absolute_import

from fractions import Fraction
import functools
import logging
import math

from sympy import Poly, Rational, Symbol, isprime
try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex
from sympy.polys.domains import ZZ
from sympy.polys import galoistools as gf

from global_fields import certreal
from global_fields import common
from global_fields import constants
from global_fields import errors


LOG = logging.getLogger(__name__)

#: Rationals are Python fractions, always kept in lowest terms.
Rat = Fraction

_X = Symbol('x')


@functools.lru_cache(maxsize=None)
def check_prime(p):
    """Return p when it is a prime number, raise InvalidInput otherwise."""
    if not isinstance(p, int) or p < 2 or not isprime(p):
        raise errors.InvalidInput('%s is not a prime number.' % (p,))
    return p


class Fp(object):
    """Element of the prime field F_p."""
    __slots__ = ('residue', 'p')

    def __init__(self, residue, p):
        self.p = check_prime(p)
        if isinstance(residue, Fraction):
            residue = residue.numerator * pow(residue.denominator, -1, p)
        self.residue = int(residue) % p

    def _other(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise errors.FieldMismatch('F_%s and F_%s elements mixed.' %
                                           (self.p, other.p))
            return other
        return Fp(other, self.p)

    def __add__(self, other):
        return Fp(self.residue + self._other(other).residue, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.residue - self._other(other).residue, self.p)

    def __rsub__(self, other):
        return self._other(other) - self

    def __neg__(self):
        return Fp(-self.residue, self.p)

    def __mul__(self, other):
        return Fp(self.residue * self._other(other).residue, self.p)

    __rmul__ = __mul__

    def inverse(self):
        if not self.residue:
            raise errors.DomainError('0 has no inverse in F_%s.' % self.p)
        return Fp(pow(self.residue, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._other(other).inverse()

    def __rtruediv__(self, other):
        return self._other(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** -n
        return Fp(pow(self.residue, n, self.p), self.p)

    def is_square(self):
        """Euler's criterion."""
        if self.p == 2 or not self.residue:
            return True
        return pow(self.residue, (self.p - 1) // 2, self.p) == 1

    def sqrt(self):
        """Smallest square root, raises DomainError for non squares."""
        roots = gf_sqrt_mod([self.residue], [1, 0], self.p)
        if roots is None:
            raise errors.DomainError('%s is not a square mod %s.' %
                                     (self.residue, self.p))
        return Fp(min(gf_int(roots), (-gf_int(roots)) % self.p), self.p)

    def __int__(self):
        return self.residue

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __repr__(self):
        return 'Fp(%s, %s)' % (self.residue, self.p)


# Polynomials over F_p

def gf_poly(coefficients, p):
    """Normalize integer or rational coefficients to a polynomial mod p."""
    result = []
    for c in coefficients:
        c = Fraction(c)
        if c.denominator % p == 0:
            raise errors.InvalidInput('%s has no value mod %s.' % (c, p))
        result.append(c.numerator * pow(c.denominator, -1, p) % p)
    return gf.gf_strip(result)


def gf_int(g):
    """Value of a constant polynomial (0 for the zero polynomial)."""
    return int(g[-1]) if g else 0


def gf_valuation(g, pi, p):
    """Exponent of the irreducible pi in g, None for g == 0."""
    if not g:
        return None
    k = 0
    while True:
        q, r = gf.gf_div(g, pi, p, ZZ)
        if r:
            return k
        g = q
        k += 1


def gf_reverse(g, degree):
    """s^degree * g(1/s) for degree >= deg g."""
    if not g:
        return []
    # coefficient of s^j is the coefficient of t^(degree - j)
    low_first = list(reversed(g))
    coeffs = [low_first[degree - j] if 0 <= degree - j < len(low_first)
              else 0 for j in range(degree, -1, -1)]
    return gf.gf_strip(coeffs)


def _residue_size(pi, p):
    return p ** gf.gf_degree(pi)


def gf_is_square_mod(a, pi, p):
    """Euler's criterion in F_p[t]/(pi)."""
    a = gf.gf_rem(a, pi, p, ZZ)
    if not a:
        return True
    q = _residue_size(pi, p)
    return gf.gf_pow_mod(a, (q - 1) // 2, pi, p, ZZ) == [1]


def _gf_from_index(n, p):
    digits = []
    while n:
        digits.append(n % p)
        n //= p
    return gf.gf_strip(list(reversed(digits)))


def gf_sqrt_mod(a, pi, p):
    """A square root of a in F_p[t]/(pi) (Tonelli-Shanks), or None.

    The non residue is searched deterministically, so the result is
    reproducible.
    """
    a = gf.gf_rem(a, pi, p, ZZ)
    if not a:
        return []
    if not gf_is_square_mod(a, pi, p):
        return None
    q = _residue_size(pi, p)
    odd, s = q - 1, 0
    while odd % 2 == 0:
        odd //= 2
        s += 1
    n = 1
    while True:
        z = gf.gf_rem(_gf_from_index(n, p), pi, p, ZZ)
        if z and not gf_is_square_mod(z, pi, p):
            break
        n += 1

    def power(x, k):
        return gf.gf_pow_mod(x, k, pi, p, ZZ)

    def mul(x, y):
        return gf.gf_rem(gf.gf_mul(x, y, p, ZZ), pi, p, ZZ)

    m, c, t, r = s, power(z, odd), power(a, odd), power(a, (odd + 1) // 2)
    while t != [1]:
        i, t2 = 0, t
        while t2 != [1]:
            t2 = mul(t2, t2)
            i += 1
        b = power(c, 2 ** (m - i - 1))
        m, c = i, mul(b, b)
        t, r = mul(t, c), mul(r, b)
    return r


def gf_hensel_sqrt(f, root, pi, k, p):
    """Lift a square root of f mod pi to a square root mod pi^k."""
    modulus = gf.gf_pow(pi, k, p, ZZ)
    s = gf.gf_rem(root, modulus, p, ZZ)
    for _ in range(k):
        err = gf.gf_rem(gf.gf_sub(gf.gf_mul(s, s, p, ZZ), f, p, ZZ),
                        modulus, p, ZZ)
        if not err:
            break
        inv, _, one = gf.gf_gcdex(gf.gf_mul_ground(s, 2, p, ZZ), modulus,
                                  p, ZZ)
        step = gf.gf_rem(gf.gf_mul(err, inv, p, ZZ), modulus, p, ZZ)
        s = gf.gf_sub(s, step, p, ZZ)
    return s


def gf_to_str(g, var='t'):
    """Literal of a polynomial over F_p, in the element grammar."""
    if not g:
        return '0'
    terms = []
    degree = len(g) - 1
    for i, c in enumerate(g):
        c = int(c)
        k = degree - i
        if not c:
            continue
        if k == 0:
            mono = str(c)
        else:
            mono = var if k == 1 else '%s^%s' % (var, k)
            if c != 1:
                mono = '%s%s' % (c, mono)
        terms.append(mono)
    return '+'.join(terms)


def _split_irreducible(h, p):
    """Monic irreducible factors of a squarefree monic polynomial.

    Berlekamp's output is checked factor by factor; composite factors
    are split again by distinct and equal degree factorization.  The
    factors of a squarefree polynomial are unique, so the result does not
    depend on the random choices of the equal degree step.
    """
    if gf.gf_irreducible_p(h, p, ZZ):
        return [h]
    LOG.debug('Splitting composite factor %s mod %s.', gf_to_str(h), p)
    result = []
    for g, d in gf.gf_ddf_zassenhaus(h, p, ZZ):
        parts = [g] if len(g) - 1 == d else gf.gf_edf_zassenhaus(g, d, p, ZZ)
        for part in parts:
            if not gf.gf_irreducible_p(part, p, ZZ):
                raise errors.NotIrreducible(
                    'Factor %s of %s mod %s is not irreducible.' %
                    (gf_to_str(part), gf_to_str(h), p))
            result.append(part)
    return result


def poly_factor_mod_p(f, p):
    """Factor a polynomial over F_p into monic irreducibles.

    Squarefree decomposition followed by Berlekamp's algorithm; every
    factor is certified irreducible and the list is sorted, so the output
    does not depend on any random state.

    :param f: Coefficients, highest degree first, reduced mod p
    :type f: list of int or Fraction
    :param p: Prime modulus
    :type p: int
    :returns: (monic irreducible factor, multiplicity) pairs sorted by
              degree and then lexicographically on the coefficients
    :rtype: list of (tuple, int)
    """
    check_prime(p)
    g = gf_poly(f, p)
    if not g:
        raise errors.InvalidInput('Cannot factor the zero polynomial.')
    factors = []
    __, sqf = gf.gf_sqf_list(g, p, ZZ)
    for part, k in sqf:
        __, irreducibles = gf.gf_factor_sqf(part, p, ZZ, method='berlekamp')
        for h in irreducibles:
            factors.extend((tuple(int(c) for c in q), k)
                           for q in _split_irreducible(h, p))
    factors.sort(key=lambda fk: (len(fk[0]), fk[0]))
    return factors


# Roots over C

class RootEnclosure(object):
    """Certified enclosure of a root of an integral polynomial.

    Real roots have a zero imaginary part; complex roots stand for their
    conjugate pair and lie in the upper half plane.
    """
    __slots__ = ('index', 'is_real', 're', 'im')

    def __init__(self, index, is_real, re, im):
        self.index = index
        self.is_real = is_real
        self.re = re
        self.im = im

    @property
    def value(self):
        return certreal.CertComplex(self.re, self.im)

    @property
    def precision(self):
        return self.re.precision

    def __repr__(self):
        kind = 'real' if self.is_real else 'pair'
        return 'RootEnclosure(%s, %s, %s, %s)' % (self.index, kind,
                                                  self.re, self.im)


def _frac(r):
    return Fraction(int(r.p), int(r.q))


def _qq_poly(f):
    return Poly([Rational(c.numerator, c.denominator)
                 for c in map(Fraction, f)], _X)


def is_squarefree(f):
    poly = _qq_poly(f)
    return poly.degree() < 1 or poly.gcd(poly.diff(_X)).degree() == 0


def complex_roots(f, precision=None):
    """Isolate and refine the complex roots of a squarefree polynomial.

    :param f: Rational coefficients, highest degree first
    :type f: sequence
    :param precision: Working precision in bits, enclosures get that tight
    :type precision: int
    :returns: Real roots ascending, then one representative per conjugate
              pair ordered by real part and imaginary part
    :rtype: list of RootEnclosure
    """
    precision = common.working_precision(precision)
    return _complex_roots(tuple(Fraction(c) for c in f), precision)


@functools.lru_cache(maxsize=256)
def _complex_roots(f, precision):
    if not is_squarefree(f):
        raise errors.InvalidInput('%s is not squarefree.' %
                                  (list(map(str, f)),))
    poly = _qq_poly(f)
    if poly.degree() < 1:
        return ()
    eps = Rational(1, 2 ** (precision + 4))
    real_part, complex_part = poly.intervals(all=True, eps=eps)
    LOG.debug('Isolated %s real and %s complex roots at %s bits',
              len(real_part), len(complex_part), precision)

    reals = sorted((_frac(a), _frac(b)) for (a, b), __ in real_part)
    pairs = []
    for (u, v), __ in complex_part:
        ux, uy = (_frac(c) for c in u.as_real_imag())
        vx, vy = (_frac(c) for c in v.as_real_imag())
        if vy > 0 and uy >= 0:
            pairs.append(((ux, vx), (uy, vy)))
    pairs.sort(key=lambda r: ((r[0][0] + r[0][1]) / 2,
                              (r[1][0] + r[1][1]) / 2))

    zero = Fraction(0)
    roots = []
    for a, b in reals:
        roots.append(RootEnclosure(
            len(roots), True,
            certreal.CertReal.from_interval(a, b, precision),
            certreal.CertReal.from_interval(zero, zero, precision)))
    for (ax, bx), (ay, by) in pairs:
        roots.append(RootEnclosure(
            len(roots), False,
            certreal.CertReal.from_interval(ax, bx, precision),
            certreal.CertReal.from_interval(ay, by, precision)))
    if len(reals) + 2 * len(pairs) != poly.degree():
        raise errors.Indeterminate('Root isolation of %s incomplete.' %
                                   poly.as_expr())
    return tuple(roots)


# Integer lattices

def _column_op(matrices, j, k, a, b, c, d):
    """col_j, col_k <- a col_j + b col_k, c col_j + d col_k."""
    for matrix in matrices:
        for row in matrix:
            x, y = row[j], row[k]
            row[j] = a * x + b * y
            row[k] = c * x + d * y


def hnf(matrix):
    """Hermite normal form of the lattice spanned by the columns.

    The result H is square upper triangular with positive diagonal and
    0 <= H[i][j] < H[i][i] for j > i.  U is unimodular with
    matrix * U = [0 | H].

    :param matrix: n rows of m >= n integers, of rank n
    :type matrix: list of list of int
    :returns: (H, U)
    :rtype: tuple
    """
    a = [[int(v) for v in row] for row in matrix]
    n = len(a)
    m = len(a[0]) if n else 0
    if n == 0 or m < n:
        raise errors.RankDeficient('Need at least %s generators, got %s.' %
                                   (n, m))
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    col = m - 1
    for i in range(n - 1, -1, -1):
        for j in range(col - 1, -1, -1):
            b = a[i][j]
            if not b:
                continue
            piv = a[i][col]
            x, y, g = igcdex(piv, b)
            _column_op((a, u), col, j, x, y, -b // g, piv // g)
        if not a[i][col]:
            raise errors.RankDeficient('Lattice basis is rank deficient.')
        if a[i][col] < 0:
            for row in a + u:
                row[col] = -row[col]
        piv = a[i][col]
        for k in range(col + 1, m):
            q = a[i][k] // piv
            if q:
                _column_op((a, u), k, col, 1, -q, 0, 1)
        col -= 1

    h = [row[m - n:] for row in a]
    return h, u


def hnf_det(h):
    return functools.reduce(lambda x, y: x * y,
                            (h[i][i] for i in range(len(h))), 1)


def lattice_solve(h, v):
    """Integer coordinates of v in the HNF basis h, None if v is outside."""
    n = len(h)
    x = [0] * n
    for i in range(n - 1, -1, -1):
        r = int(v[i]) - sum(h[i][j] * x[j] for j in range(i + 1, n))
        if r % h[i][i]:
            return None
        x[i] = r // h[i][i]
    return x


def ldl(gram):
    """Square completion of a positive definite rational quadratic form.

    Returns q with q[i][i] > 0 and Q(x) = sum_i q[i][i] *
    (x_i + sum_{j > i} q[i][j] x_j)^2.
    """
    n = len(gram)
    q = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        q[i][i] = Fraction(gram[i][i]) - sum(q[k][k] * q[k][i] ** 2
                                             for k in range(i))
        if q[i][i] <= 0:
            raise errors.RankDeficient('Quadratic form is not positive '
                                       'definite.')
        for j in range(i + 1, n):
            q[i][j] = (Fraction(gram[i][j]) -
                       sum(q[k][k] * q[k][i] * q[k][j] for k in range(i))
                       ) / q[i][i]
    for i in range(n):
        for j in range(i):
            q[i][j] = Fraction(0)
    return q


def sqrt_upper(q):
    """Rational upper bound of sqrt(q), tight to 1/denominator."""
    n, d = q.numerator, q.denominator
    r = math.isqrt(n * d)
    if r * r < n * d:
        r += 1
    return Fraction(r, d)


def enumerate_ellipsoid(gram, bound, max_points=None):
    """Integer vectors x with x^T gram x <= bound (Fincke-Pohst).

    The form and the bound are exact rationals, so no vector inside the
    ellipsoid is missed.

    :returns: vectors in lexicographic order
    :rtype: list of tuple
    """
    if max_points is None:
        max_points = constants.ENUMERATION_MAX_POINTS
    n = len(gram)
    q = ldl(gram)
    bound = Fraction(bound)
    x = [0] * n
    found = []
    visited = [0]

    def search(i, remaining):
        c = sum(q[i][j] * x[j] for j in range(i + 1, n))
        s = sqrt_upper(remaining / q[i][i])
        for v in range(math.ceil(-c - s), math.floor(-c + s) + 1):
            rest = remaining - q[i][i] * (v + c) ** 2
            visited[0] += 1
            if visited[0] > max_points:
                raise errors.InstanceTooLarge(
                    'Enumeration exceeds %s candidates.' % max_points)
            if rest < 0:
                continue
            x[i] = v
            if i == 0:
                found.append(tuple(x))
            else:
                search(i - 1, rest)
        x[i] = 0

    if bound >= 0:
        search(n - 1, bound)
    LOG.debug('Ellipsoid enumeration: %s points in dimension %s', len(found),
              n)
    return sorted(found)
