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

"""Command line front end.

    global-fields describe nf:x^2+1
    global-fields h0 ff:3 '2*inf'
    global-fields verify rh nf:x^2+1 nf:x
    global-fields verify rr2 nf:x --sweep 'a*inf1,1..10' --eps 0.05
"""
from __future__ import absolute_import

import argparse
from concurrent import futures
import contextlib
import csv
from fractions import Fraction
import json
import logging
import sys

import global_fields
from global_fields import common
from global_fields import constants
from global_fields import divisors
from global_fields import errors
from global_fields import fields
from global_fields import h0 as h0_module
from global_fields import literals
from global_fields import places
from global_fields import report
from global_fields import theorems


LOG = logging.getLogger(__name__)

STATEMENTS = ('rr1', 'rr2', 'rh', 'pf', 'canon')

GROWTHS = (constants.GROWTH_LINEAR, constants.GROWTH_GEOMETRIC)

#: Sweep values are rationals, geometric ones are rounded to this
#: denominator
_SWEEP_DENOMINATOR = 10 ** 6


# Literals

def parse_field(text):
    """fields.parse_field with the literal attached to parse errors."""
    try:
        return fields.parse_field(text)
    except errors.ParseError as exc:
        if exc.text is None:
            exc.text = text
        raise


def parse_divisor(K, text, variables=None):
    try:
        return divisors.parse_divisor(K, text, variables)
    except errors.ParseError as exc:
        if exc.text is None:
            exc.text = text
        raise


def parse_base(K, text):
    """Base of a place of K0 from a --p0 value."""
    if text is None:
        return None
    text = text.strip()
    if K.is_number_field:
        if not text.isdigit():
            raise errors.InvalidInput('P0 must be a rational prime, got %r.' %
                                      text)
        return int(text)
    if text == places.INFINITY:
        return places.INFINITY
    return K.parse_base(text)


class Sweep(object):
    """`<template>,<start>..<stop>[:<count>]` sweep of divisors.

    The template is a divisor literal using the variable `n` (integer
    steps from start to stop) or `a` (count rational points, linearly or
    geometrically spaced).
    """

    def __init__(self, text, growth=constants.GROWTH_LINEAR):
        if ',' not in text or '..' not in text.rsplit(',', 1)[1]:
            raise errors.InvalidInput('Sweep %r is not <template>,<start>..'
                                      '<stop>[:<count>].' % text)
        self.text = text
        self.template, bounds = text.rsplit(',', 1)
        count = None
        if ':' in bounds:
            bounds, count = bounds.split(':', 1)
            count = self._number(count, int)
        start, stop = bounds.split('..', 1)
        self.start = self._number(start, Fraction)
        self.stop = self._number(stop, Fraction)
        self.variable = 'a' if self._uses('a') else 'n'
        if self.variable == 'n':
            if count is not None:
                raise errors.InvalidInput('Sweeps over n take no count.')
            if self.start.denominator != 1 or self.stop.denominator != 1:
                raise errors.InvalidInput('Sweeps over n need integer '
                                          'bounds.')
        elif count is None:
            count = int(self.stop - self.start) + 1
        if count is not None and count < 1:
            raise errors.InvalidInput('Sweep count must be at least 1.')
        if self.stop < self.start:
            raise errors.InvalidInput('Empty sweep %s..%s.' % (start, stop))
        if growth not in GROWTHS:
            raise errors.InvalidInput('Unknown growth %r.' % growth)
        if growth == constants.GROWTH_GEOMETRIC and self.start <= 0:
            raise errors.InvalidInput('Geometric sweeps need a positive '
                                      'start.')
        self.count = count
        self.growth = growth

    @staticmethod
    def _number(text, kind):
        try:
            return kind(text.strip())
        except ValueError:
            raise errors.InvalidInput('Bad sweep bound %r.' % text)

    def _uses(self, name):
        return any(token.kind == literals.NAME and token.value == name
                   for token in _tokens(self.template))

    def values(self):
        if self.variable == 'n':
            return [Fraction(n) for n in range(int(self.start),
                                               int(self.stop) + 1)]
        if self.count == 1:
            return [self.start]
        steps = self.count - 1
        if self.growth == constants.GROWTH_LINEAR:
            return [self.start + (self.stop - self.start) * k / steps
                    for k in range(self.count)]
        ratio = float(self.stop / self.start) ** (1.0 / steps)
        return [Fraction(float(self.start) * ratio ** k).limit_denominator(
            _SWEEP_DENOMINATOR) for k in range(self.count)]

    def divisors(self, K):
        """(value, divisor) pairs in sweep order."""
        return [(value, parse_divisor(K, self.template,
                                      {self.variable: value}))
                for value in self.values()]


def _tokens(text):
    try:
        return literals.tokenize(text)
    except errors.ParseError:
        return []


# Configuration

class RunConfig(object):
    """Options shared by every subcommand.

    :param precision: Initial working precision in bits
    :type precision: int
    :param p0: Override of the base of P0 (prime, polynomial or inf)
    :type p0: str
    :param pinf: Override of the index of Pinf
    :type pinf: int
    :param fmt: Output format, one of constants.FORMATS
    :type fmt: str
    :param out: Output path, stdout when None
    :type out: str
    :param sweep: Sweep literal
    :type sweep: str
    """

    def __init__(self, precision=constants.DEFAULT_PRECISION, p0=None,
                 pinf=None, fmt=constants.FORMAT_TABLE, out=None, sweep=None,
                 eps=constants.DEFAULT_EPS, seed=constants.DEFAULT_SEED,
                 jobs=1, growth=constants.GROWTH_LINEAR,
                 count=constants.DEFAULT_PF_COUNT, p0_base=None):
        if precision < constants.MIN_PRECISION:
            raise errors.InvalidInput('--precision must be at least %s, got '
                                      '%s.' % (constants.MIN_PRECISION,
                                               precision))
        if fmt not in constants.FORMATS:
            raise errors.InvalidInput('Unknown format %r.' % fmt)
        if jobs < 1 or count < 1:
            raise errors.InvalidInput('--jobs and --count must be positive.')
        if eps <= 0:
            raise errors.InvalidInput('--eps must be positive.')
        if growth not in GROWTHS:
            raise errors.InvalidInput('Unknown growth %r.' % growth)
        self.precision = precision
        self.p0 = p0
        self.pinf = pinf
        self.p0_base = p0_base
        self.fmt = fmt
        self.out = out
        self.sweep = sweep
        self.eps = eps
        self.seed = seed
        self.jobs = jobs
        self.growth = growth
        self.count = count

    @classmethod
    def from_args(cls, args):
        return cls(precision=args.precision, p0=args.p0, pinf=args.pinf,
                   fmt=args.format, out=args.out,
                   sweep=getattr(args, 'sweep', None),
                   eps=getattr(args, 'eps', constants.DEFAULT_EPS),
                   seed=getattr(args, 'seed', constants.DEFAULT_SEED),
                   jobs=getattr(args, 'jobs', 1),
                   growth=getattr(args, 'growth', constants.GROWTH_LINEAR),
                   count=getattr(args, 'count', constants.DEFAULT_PF_COUNT),
                   p0_base=getattr(args, 'p0_base', None))

    def apply(self):
        """Make the precision the default of every escalation."""
        common.PrecisionParams.set_default(
            initial_bits=self.precision,
            max_bits=max(constants.MAX_PRECISION, self.precision))

    def choice(self, K, base=False):
        """Canonical choice on K, on the base field of rh when base."""
        p0 = self.p0_base if base else self.p0
        pinf = None if base or not K.is_number_field else self.pinf
        return divisors.CanonicalChoice(K, parse_base(K, p0), pinf)

    def sweep_divisors(self, K, default=None):
        text = self.sweep or default
        if text is None:
            return None
        return Sweep(text, self.growth).divisors(K)

    def mapper(self):
        """Ordered map running sweep points on `jobs` workers."""
        if self.jobs == 1:
            return contextlib.nullcontext(map)
        return _executor_map(self.jobs)

    @contextlib.contextmanager
    def output(self):
        if self.out is None:
            yield sys.stdout
        else:
            with open(self.out, 'w', newline='') as stream:
                yield stream


@contextlib.contextmanager
def _executor_map(jobs):
    with futures.ThreadPoolExecutor(max_workers=jobs) as executor:
        yield executor.map


# Subcommands

def _write_pairs(pairs, stream, fmt):
    if fmt == constants.FORMAT_JSONL:
        stream.write(json.dumps(dict(pairs), sort_keys=True) + '\n')
    elif fmt == constants.FORMAT_CSV:
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow([k for k, _ in pairs])
        writer.writerow([v for _, v in pairs])
    else:
        width = max(len(k) for k, _ in pairs)
        for key, value in pairs:
            stream.write('%s  %s\n' % (key.ljust(width), value))


def describe_field(K, choice, precision=None):
    """(key, value) pairs describing K and its canonical divisor."""
    pairs = [('field', K.literal), ('degree', places.degree(K))]
    if K.is_number_field:
        S1, S2 = places.s_counts(K)
        pairs += [('S1', S1), ('S2', S2),
                  ('discriminant', places.discriminant(K)),
                  ('P0', choice.P0.label), ('Pinf', choice.pinf.label)]
    else:
        pairs += [('genus', places.genus(K)), ('P0', choice.P0.label)]
    omega = divisors.canonical_divisor(K, choice)
    deg, expected = divisors.canonical_degree_identity(K, choice, precision)
    pairs += [('omega', omega.to_literal()),
              ('deg_omega', report.exact_text(deg)),
              ('deg_omega_enclosure',
               str(divisors.degree_enclosure(omega, precision))),
              ('deg_omega_expected', report.exact_text(expected))]
    return [(k, str(v)) for k, v in pairs]


def cmd_describe(args, config):
    K = parse_field(args.field)
    pairs = describe_field(K, config.choice(K), config.precision)
    with config.output() as stream:
        _write_pairs(pairs, stream, config.fmt)
    return constants.EXIT_HOLDS


def cmd_h0(args, config):
    K = parse_field(args.field)
    D = parse_divisor(K, args.divisor)
    if args.oracle:
        multiples = h0_module.h0_checked(D, config.precision)
    else:
        multiples = h0_module.h0(D, config.precision)
    low, high = multiples.h0_range
    pairs = [('field', K.literal), ('divisor', D.to_literal()),
             ('h0', str(multiples.h0)),
             ('h0_range', '%s..%s' % (low, high)),
             ('certification', multiples.certification)]
    if multiples.dimension is not None:
        pairs.append(('dimension', str(multiples.dimension)))
    if args.oracle:
        pairs.append(('oracle', 'agrees'))
    with config.output() as stream:
        _write_pairs(pairs, stream, config.fmt)
        if args.list:
            multiples.dump_elements(stream)
    return constants.EXIT_HOLDS


def _verify_rr1(fields_, divisor, config, mapper):
    K = fields_[0]
    choice = config.choice(K)
    points = config.sweep_divisors(K)
    if points is None:
        points = [(0, parse_divisor(K, divisor or '0'))]

    def run(point):
        parameter, D = point
        return theorems.verify_rr_sandwich(K, D, choice, config.precision,
                                           parameter)

    return list(mapper(run, points))


def default_sweep(K):
    """Sweep of the asymptotic check when --sweep is not given."""
    if not K.is_number_field:
        label = places.infinite_places(K)[0].label
        return constants.DEFAULT_SWEEP_FUNCTION_FIELD % label
    if places.s_counts(K)[1]:
        return constants.DEFAULT_SWEEP_COMPLEX
    return constants.DEFAULT_SWEEP_NUMBER_FIELD


def _verify_rr2(fields_, divisor, config, mapper):
    K = fields_[0]
    points = config.sweep_divisors(K, default_sweep(K))
    summary, series = theorems.verify_rr_asymptotic(
        K, points, config.eps, config.choice(K), config.precision, mapper)
    return series + [summary]


def _verify_rh(fields_, divisor, config, mapper):
    L = fields_[0]
    K = fields_[1] if len(fields_) > 1 else L.base_field()
    return [theorems.verify_rh(L, K, config.choice(L),
                               config.choice(K, base=True),
                               config.precision)]


def _verify_pf(fields_, divisor, config, mapper):
    return [theorems.verify_product_formula(f, config.count, config.seed,
                                            precision=config.precision)
            for f in fields_]


def _verify_canon(fields_, divisor, config, mapper):
    return [theorems.verify_canonical_degree(f, config.choice(f),
                                             config.precision)
            for f in fields_]


_VERIFIERS = {
    'rr1': _verify_rr1,
    'rr2': _verify_rr2,
    'rh': _verify_rh,
    'pf': _verify_pf,
    'canon': _verify_canon,
}


def _split_arguments(statement, arguments):
    """Field literals and the optional divisor literal of a statement."""
    parsed, divisor = [], None
    for text in arguments:
        if text.strip().startswith(('nf:', 'ff:')):
            parsed.append(parse_field(text))
        elif divisor is None and parsed and statement == 'rr1':
            divisor = text
        else:
            raise errors.InvalidInput('Unexpected argument %r for verify '
                                      '%s.' % (text, statement))
    if not parsed:
        raise errors.InvalidInput('verify %s needs a field literal.' %
                                  statement)
    if statement in ('rr1', 'rr2') and len(parsed) != 1:
        raise errors.InvalidInput('verify %s takes one field.' % statement)
    if statement == 'rh' and len(parsed) > 2:
        raise errors.InvalidInput('verify rh takes the fields L and K.')
    return parsed, divisor


def cmd_verify(args, config):
    fields_, divisor = _split_arguments(args.statement, args.arguments)
    with config.mapper() as mapper:
        reports = _VERIFIERS[args.statement](fields_, divisor, config,
                                             mapper)
    with config.output() as stream:
        report.write_reports(reports, stream, config.fmt)
    code = report.exit_code(reports)
    if code == constants.EXIT_INDETERMINATE:
        sys.stderr.write('Undecided at %s bits, retry with --precision %s.\n'
                         % (config.precision, 2 * config.precision))
    return code


# Parser

def _common_options(parser):
    parser.add_argument('--precision', type=int,
                        default=constants.DEFAULT_PRECISION,
                        help='initial working precision in bits '
                             '(default: %(default)s)')
    parser.add_argument('--p0', help='base of P0: a prime, a monic '
                                     'polynomial of degree 1 in t or inf')
    parser.add_argument('--pinf', type=int,
                        help='index of the archimedean place Pinf')
    parser.add_argument('--format', choices=constants.FORMATS,
                        default=constants.FORMAT_TABLE,
                        help='output format (default: %(default)s)')
    parser.add_argument('--out', help='output path (default: stdout)')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log INFO, DEBUG when repeated')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='global-fields',
        description='Places, divisors, h0 and certified Riemann-Roch '
                    'checks on global fields.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + global_fields.__version__)
    subparsers = parser.add_subparsers(dest='command')
    subparsers.required = True

    describe = subparsers.add_parser('describe', help='describe a field')
    describe.add_argument('field', help='nf:<poly>, ff:<p> or '
                                        'ff:<p>:y^2=<poly>')
    _common_options(describe)
    describe.set_defaults(func=cmd_describe)

    h0 = subparsers.add_parser('h0', help='compute h0 of a divisor')
    h0.add_argument('field')
    h0.add_argument('divisor')
    h0.add_argument('--list', action='store_true',
                    help='list the elements of H0(D)')
    h0.add_argument('--oracle', action='store_true',
                    help='cross-check with the brute force oracle')
    _common_options(h0)
    h0.set_defaults(func=cmd_h0)

    verify = subparsers.add_parser('verify', help='verify a statement')
    verify.add_argument('statement', choices=STATEMENTS)
    verify.add_argument('arguments', nargs='+',
                        help='field literals, then a divisor for rr1')
    verify.add_argument('--sweep',
                        help='<template>,<start>..<stop>[:<count>]')
    verify.add_argument('--growth', choices=GROWTHS,
                        default=constants.GROWTH_LINEAR)
    verify.add_argument('--eps', type=float, default=constants.DEFAULT_EPS,
                        help='tolerance on |i(D) - 1| (default: '
                             '%(default)s)')
    verify.add_argument('--seed', type=int, default=constants.DEFAULT_SEED)
    verify.add_argument('--count', type=int,
                        default=constants.DEFAULT_PF_COUNT,
                        help='random elements for pf')
    verify.add_argument('--jobs', type=int, default=1,
                        help='worker threads for sweeps')
    verify.add_argument('--p0-base', dest='p0_base',
                        help='base of P0 on the base field K for rh')
    _common_options(verify)
    verify.set_defaults(func=cmd_verify)
    return parser


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity,
                                                       logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(asctime)s %(name)s %(levelname)s '
                               '%(message)s')


def main(argv=None):
    """Console entry point, returns the exit status."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        config = RunConfig.from_args(args)
        config.apply()
        return args.func(args, config)
    except errors.Error as exc:
        LOG.debug('%s failed', args.command, exc_info=True)
        sys.stderr.write('%s\n' % exc)
        if exc.code == constants.EXIT_INDETERMINATE:
            sys.stderr.write('Retry with a larger --precision.\n')
        return exc.code


if __name__ == '__main__':
    sys.exit(main())
