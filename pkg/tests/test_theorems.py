#!/usr/bin/env python
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

"""
test_theorems
----------------------------------

Tests the Riemann-Roch constants, the Euler-Minkowski characteristic and
the verifications.
"""
from fractions import Fraction
import math
import unittest

import mock

from global_fields import certreal
from global_fields import constants
from global_fields import divisors
from global_fields import errors
from global_fields import fields
from global_fields import logexpr
from global_fields import places
from global_fields import theorems


def parse(field_text, divisor_text):
    return divisors.parse_divisor(fields.parse_field(field_text),
                                  divisor_text)


def enclosures(entries):
    return [[certreal.CertReal.exact(v) for v in row] for row in entries]


class TestPiMonomial(unittest.TestCase):

    def test_arithmetic(self):
        """Test products, quotients and powers stay exact."""
        pi = theorems.PiMonomial(1, 1)
        self.assertEqual(2, theorems.PiMonomial(2, 1) / pi)
        self.assertEqual(theorems.PiMonomial(4, 2), (2 * pi) ** 2)
        self.assertEqual(theorems.PiMonomial(Fraction(1, 3), -1), 1 / (3 * pi))
        self.assertTrue(theorems.PiMonomial(5).is_rational)
        self.assertFalse(pi.is_rational)
        self.assertAlmostEqual(math.pi, float(pi))

    def test_log(self):
        """Test rational values have exact logs."""
        self.assertEqual(logexpr.LogExpr.log(6),
                         theorems.PiMonomial(6).log())
        value = theorems.PiMonomial(2, 1).log(128)
        self.assertAlmostEqual(math.log(2 * math.pi), float(value))

    def test_literals(self):
        """Test printing."""
        self.assertEqual('288/pi^2', theorems.PiMonomial(288, -2).to_literal())
        self.assertEqual('144/pi', str(theorems.PiMonomial(144, -1)))
        self.assertEqual('2*pi', str(theorems.PiMonomial(2, 1)))
        self.assertEqual('pi/2', str(theorems.PiMonomial(Fraction(1, 2), 1)))
        self.assertEqual('3/(2*pi)', str(theorems.PiMonomial(Fraction(3, 2),
                                                             -1)))
        self.assertEqual('3', str(theorems.PiMonomial(3)))

    def test_positive(self):
        """Test only positive monomials exist."""
        self.assertRaises(errors.DomainError, theorems.PiMonomial, 0)
        self.assertRaises(errors.DomainError, theorems.PiMonomial, -1, 1)


class TestConstants(unittest.TestCase):

    def test_constant_c(self):
        """Test both forms of C."""
        self.assertEqual((3, 3), theorems.constant_C(1, 0))
        self.assertEqual((18, 18), theorems.constant_C(2, 0))
        theorem, remark = theorems.constant_C(0, 2)
        self.assertEqual(theorems.PiMonomial(288, -2), theorem)
        self.assertEqual(theorems.PiMonomial(144, -1), remark)
        self.assertEqual((1, 1), theorems.constant_C(0, 0))

    def test_constant_b(self):
        """Test B = 2^S1 (2 pi)^(S2/2)."""
        self.assertEqual(2, theorems.constant_B(1, 0))
        self.assertEqual(theorems.PiMonomial(2, 1), theorems.constant_B(0, 2))
        self.assertEqual(theorems.PiMonomial(8, 1), theorems.constant_B(2, 2))

    def test_identity_constant(self):
        """Test the identity constant only equals B for totally real
        fields."""
        self.assertEqual(theorems.constant_B(2, 0),
                         theorems.identity_constant(2, 0))
        self.assertEqual(theorems.PiMonomial(1, 1),
                         theorems.identity_constant(0, 2))
        self.assertNotEqual(theorems.constant_B(0, 2),
                            theorems.identity_constant(0, 2))

    def test_ball_volume(self):
        """Test volumes of unit balls."""
        self.assertEqual(2, theorems.ball_volume(1))
        self.assertEqual(theorems.PiMonomial(1, 1), theorems.ball_volume(2))
        self.assertRaises(errors.Unsupported, theorems.ball_volume, 3)

    def test_bad_signature(self):
        """Test S2 must be even and counts non negative."""
        for args in ((0, 1), (-1, 0), (1, -2)):
            self.assertRaises(errors.InvalidInput, theorems.constant_C, *args)
            self.assertRaises(errors.InvalidInput, theorems.constant_B, *args)

    def test_field_constants(self):
        """Test the bundle of a field."""
        bundle = theorems.field_constants(fields.parse_field('nf:x^2+1'))
        self.assertEqual(theorems.PiMonomial(144, -1), bundle.C_remark)
        self.assertEqual(2, bundle.V1)
        self.assertEqual(theorems.PiMonomial(1, 1), bundle.V2)


class TestChi(unittest.TestCase):

    def test_chi(self):
        """Test chi(D) = log deg D - 1/2 log deg omega'."""
        self.assertTrue(theorems.chi(parse('nf:x', '0')).is_zero())
        self.assertEqual(logexpr.LogExpr.log(3),
                         theorems.chi(parse('nf:x', '(3)')))
        self.assertEqual(-logexpr.LogExpr.log(8) / 2,
                         theorems.chi(parse('nf:x^2-2', '0')))
        self.assertEqual(-logexpr.LogExpr.log(5) / 2,
                         theorems.chi(parse('nf:x^2+5', '0')))

    def test_chi_choice_independent(self):
        """Test chi does not depend on the canonical choice."""
        D = parse('nf:x^2-2', '(7,1) + inf2')
        values = set(theorems.chi(D, divisors.CanonicalChoice(D.field, p0,
                                                               pinf))
                     for p0 in (2, 3) for pinf in (1, 2))
        self.assertEqual(1, len(values))

    def test_chi_covolume(self):
        """Test the covolume agrees with the degree formula."""
        cases = [('nf:x', '0'), ('nf:x', '(3)'), ('nf:x', 'log(2)*inf'),
                 ('nf:x^2+1', '0'), ('nf:x^2-2', '0'), ('nf:x^2+5', '0'),
                 ('nf:x^2+1', '(5,1) - (2) + 1/2*inf1'),
                 ('nf:x^3-2', '(2) + inf2')]
        for field_text, divisor_text in cases:
            D = parse(field_text, divisor_text)
            covolume = theorems.chi_covolume(D, precision=256)
            self.assertTrue(covolume.overlaps(theorems.chi(D).evaluate(256)),
                            '%s %s' % (field_text, divisor_text))

    def test_determinant(self):
        """Test the determinant of positive definite enclosure matrices."""
        self.assertTrue(theorems._determinant(enclosures([[3]])).contains(3))
        self.assertTrue(theorems._determinant(
            enclosures([[4, 2, 0], [2, 5, 3], [0, 3, 10]])).contains(124))
        ones = enclosures([[2 if i == j else 1 for j in range(6)]
                           for i in range(6)])
        self.assertTrue(theorems._determinant(ones).contains(7))
        third = certreal.CertReal.exact(1) / 3
        rounded = [[third, third / 2], [third / 2, third]]
        self.assertTrue(theorems._determinant(rounded).contains(
            Fraction(1, 12)))
        wide = [[certreal.CertReal.from_interval(-1, 1),
                 certreal.CertReal.exact(1)],
                [certreal.CertReal.exact(1), certreal.CertReal.exact(1)]]
        self.assertRaises(errors.Indeterminate, theorems._determinant, wide)

    def test_characteristic(self):
        """Test chi is a characteristic 0 notion."""
        D = parse('ff:3', '0')
        self.assertRaises(errors.Unsupported, theorems.chi, D)
        self.assertRaises(errors.Unsupported, theorems.chi_covolume, D)

    def test_choice_field_mismatch(self):
        """Test choices of another field are rejected."""
        choice = divisors.CanonicalChoice(fields.RATIONALS)
        self.assertRaises(errors.FieldMismatch, theorems.chi,
                          parse('nf:x^2+1', '0'), choice)


class TestIFunction(unittest.TestCase):

    def test_number_fields(self):
        """Test i(0) on Q and Q(i)."""
        value = theorems.i_function(parse('nf:x', '0'))
        self.assertTrue(value.contains(Fraction(3, 2)))
        value = theorems.i_function(parse('nf:x^2+1', '0'))
        self.assertAlmostEqual(5 / math.pi, float(value))

    def test_function_fields(self):
        """Test i(D) = h0(omega' - D) in characteristic p."""
        self.assertEqual(1, theorems.i_function(parse('ff:3', '3*inf')))
        self.assertEqual(3, theorems.i_function(parse('ff:3:y^2=t^3-t',
                                                      '0')))


class TestSandwich(unittest.TestCase):

    def test_exact_comparisons(self):
        """Test exact log ratios against a rational C."""
        C = theorems.PiMonomial(3)
        log = logexpr.LogExpr.log
        self.assertEqual(constants.FAILS,
                         theorems.sandwich_verdict([log(4)], C)[0])
        self.assertEqual(constants.HOLDS,
                         theorems.sandwich_verdict([log(Fraction(1, 2))],
                                                   C)[0])
        verdict, _, equality = theorems.sandwich_verdict([log(3)], C)
        self.assertEqual(constants.HOLDS, verdict)
        self.assertTrue(equality)
        self.assertEqual(constants.INDETERMINATE,
                         theorems.sandwich_verdict([log(2), log(4)], C)[0])

    def test_transcendental_constant(self):
        """Test comparisons against a power of pi."""
        C = theorems.PiMonomial(144, -1)
        log = logexpr.LogExpr.log
        self.assertEqual(constants.HOLDS,
                         theorems.sandwich_verdict([log(45)], C)[0])
        self.assertEqual(constants.FAILS,
                         theorems.sandwich_verdict([log(46)], C)[0])

    def test_undecided(self):
        """Test enclosures that never separate give Indeterminate."""
        C = theorems.PiMonomial(3)
        with mock.patch.object(theorems, '_sandwich',
                               side_effect=errors.Indeterminate('undecided')):
            verdict, margin, equality = theorems.sandwich_verdict(
                [logexpr.LogExpr.log(2)], C)
        self.assertEqual(constants.INDETERMINATE, verdict)
        self.assertFalse(equality)
        self.assertIsNotNone(margin)


class TestVerifyRRSandwich(unittest.TestCase):

    def test_rationals(self):
        """Test D = 0 on Q attains C = 3."""
        K = fields.RATIONALS
        result = theorems.verify_rr_sandwich(K, parse('nf:x', '0'))
        self.assertEqual('rr1', result.statement)
        self.assertEqual(constants.HOLDS, result.verdict)
        self.assertEqual(3, result.quantities['h0'])
        self.assertEqual(3, result.quantities['h0_dual'])
        self.assertTrue(result.quantities['ratio'].contains(1))
        self.assertTrue(result.details['attains_C_theorem'])
        self.assertEqual(constants.HOLDS,
                         result.details['verdict_C_theorem'])
        self.assertEqual({'p0': '(2)', 'pinf': 'inf1'}, result.inputs)

    def test_gaussian(self):
        """Test D = 0 on Q(i) against both constants."""
        K = fields.parse_field('nf:x^2+1')
        result = theorems.verify_rr_sandwich(K, parse('nf:x^2+1', '0'),
                                             parameter=4)
        self.assertEqual(5, result.quantities['h0'])
        self.assertEqual(5, result.quantities['h0_dual'])
        self.assertEqual(constants.HOLDS, result.verdict)
        self.assertEqual(constants.HOLDS,
                         result.details['verdict_C_theorem'])
        self.assertFalse(result.details['attains_C_theorem'])
        self.assertEqual(theorems.PiMonomial(288, -2),
                         result.quantities['C_theorem'])
        self.assertEqual(4, result.inputs['parameter'])

    def test_function_field_equality(self):
        """Test the ratio is exactly 1 in characteristic p."""
        for field_text, divisor_text in (('ff:3', '0'), ('ff:3', '2*inf'),
                                         ('ff:3:y^2=t^3-t', '2*(t)')):
            K = fields.parse_field(field_text)
            result = theorems.verify_rr_sandwich(K, parse(field_text,
                                                          divisor_text))
            self.assertEqual(constants.HOLDS, result.verdict)
            self.assertTrue(result.details['equality'])
            self.assertNotIn('pinf', result.inputs)

    def test_field_mismatch(self):
        """Test the divisor must live on the field."""
        self.assertRaises(errors.FieldMismatch, theorems.verify_rr_sandwich,
                          fields.RATIONALS, parse('nf:x^2+1', '0'))


class TestVerifyRRAsymptotic(unittest.TestCase):

    def test_point(self):
        """Test i(D) close to 1 for a large disc."""
        K = fields.RATIONALS
        near = theorems.rr_asymptotic_point(K, parse('nf:x', 'log(100)*inf'))
        self.assertEqual(constants.HOLDS, near.verdict)
        self.assertTrue(near.quantities['i'].contains(Fraction(201, 200)))
        self.assertTrue(near.details['identity_holds'])
        far = theorems.rr_asymptotic_point(K, parse('nf:x', 'log(2)*inf'))
        self.assertEqual(constants.FAILS, far.verdict)
        self.assertTrue(far.quantities['i'].contains(Fraction(5, 4)))
        self.assertTrue(far.details['identity_holds'])

    def test_function_field_point(self):
        """Test the classical identity in characteristic p."""
        K = fields.parse_field('ff:3')
        result = theorems.rr_asymptotic_point(K, parse('ff:3', '3*inf'))
        self.assertEqual(constants.HOLDS, result.verdict)
        self.assertEqual(1, result.quantities['i'])
        self.assertEqual(81, result.quantities['h0'])
        self.assertTrue(result.details['identity_holds'])
        curve = fields.parse_field('ff:3:y^2=t^3-t')
        result = theorems.rr_asymptotic_point(curve,
                                              parse('ff:3:y^2=t^3-t', '0'))
        self.assertEqual(constants.FAILS, result.verdict)

    def test_sweep(self):
        """Test the summary of a sweep."""
        K = fields.RATIONALS
        sweep = [parse('nf:x', text) for text in
                 ('log(2)*inf', 'log(100)*inf', 'log(1000)*inf')]
        mapper = mock.Mock(side_effect=map)
        summary, series = theorems.verify_rr_asymptotic(K, sweep,
                                                        mapper=mapper)
        self.assertEqual(1, mapper.call_count)
        self.assertEqual([constants.FAILS, constants.HOLDS, constants.HOLDS],
                         [p.verdict for p in series])
        self.assertEqual([0, 1, 2], [p.inputs['parameter'] for p in series])
        self.assertEqual(constants.HOLDS, summary.verdict)
        self.assertEqual('summary', summary.divisor)
        self.assertEqual(3, summary.details['points'])
        self.assertEqual(2, summary.details['points_within'])
        self.assertEqual(sweep[1].to_literal(),
                         summary.details['threshold_divisor'])
        self.assertTrue(summary.details['identity_equals_B'])
        self.assertTrue(summary.details['identity_holds'])

    def test_sweep_parameters(self):
        """Test (parameter, divisor) pairs keep their parameters."""
        K = fields.RATIONALS
        sweep = [(10, parse('nf:x', 'log(2)*inf')),
                 (20, parse('nf:x', 'log(3)*inf'))]
        summary, series = theorems.verify_rr_asymptotic(K, sweep)
        self.assertEqual([10, 20], [p.inputs['parameter'] for p in series])
        self.assertEqual(constants.FAILS, summary.verdict)
        self.assertEqual(0, summary.details['points_within'])

    def test_sweep_errors(self):
        """Test decreasing and empty sweeps."""
        K = fields.RATIONALS
        sweep = [parse('nf:x', 'log(3)*inf'), parse('nf:x', 'log(2)*inf')]
        self.assertRaises(errors.InvalidInput, theorems.verify_rr_asymptotic,
                          K, sweep)
        self.assertRaises(errors.InvalidInput, theorems.verify_rr_asymptotic,
                          K, [])

    def test_identity_constant_differs_from_b(self):
        """Test the summary flags identity constant != B for complex
        fields."""
        K = fields.parse_field('nf:x^2+1')
        summary, _ = theorems.verify_rr_asymptotic(
            K, [parse('nf:x^2+1', 'log(2)*inf1')])
        self.assertFalse(summary.details['identity_equals_B'])


class TestVerifyRH(unittest.TestCase):

    def test_holds(self):
        """Test deg omega'_L = deg omega'_K^[L:K] deg R exactly."""
        for literal in ('nf:x^2+1', 'nf:x^2-2', 'nf:x^3-2', 'nf:x^2+5',
                        'ff:5:y^2=t^3+1', 'ff:3:y^2=t^3-t',
                        'ff:3:y^2=t^2+1'):
            result = theorems.verify_rh(fields.parse_field(literal))
            self.assertEqual(constants.HOLDS, result.verdict, literal)
            self.assertEqual(Fraction(0), result.margin)

    def test_quantities(self):
        """Test reported degrees for Q(sqrt(2)) / Q."""
        result = theorems.verify_rh(fields.parse_field('nf:x^2-2'))
        self.assertEqual(8, result.quantities['deg_omega_L'])
        self.assertEqual(1, result.quantities['deg_omega_K'])
        self.assertEqual(8, result.quantities['deg_R'])
        self.assertEqual(2, result.quantities['degree'])
        self.assertEqual('nf:x', result.details['base_field'])

    def test_trivial_extension_and_choices(self):
        """Test K / K and non default choices."""
        K = fields.parse_field('nf:x^2+1')
        self.assertEqual(constants.HOLDS, theorems.verify_rh(K, K).verdict)
        choice = divisors.CanonicalChoice(K, 5)
        result = theorems.verify_rh(K, choice_L=choice)
        self.assertEqual(constants.HOLDS, result.verdict)
        self.assertEqual('(5)', result.inputs['p0'])

    def test_unsupported(self):
        """Test unsupported extensions."""
        self.assertRaises(errors.Unsupported, theorems.verify_rh,
                          fields.parse_field('ff:5:y^2=t^3+1'),
                          fields.RATIONALS)


class TestVerifyProductFormula(unittest.TestCase):

    def test_number_field(self):
        """Test random elements of Q(i)."""
        result = theorems.verify_product_formula(
            fields.parse_field('nf:x^2+1'), count=5, seed=1)
        self.assertEqual(constants.HOLDS, result.verdict)
        self.assertEqual(5, result.details['count'])
        self.assertFalse(result.details['exact'])
        self.assertGreaterEqual(result.margin, 0)

    def test_function_field(self):
        """Test the product is exactly 1 in characteristic p."""
        result = theorems.verify_product_formula(
            fields.parse_field('ff:5:y^2=t^3+1'), count=5)
        self.assertEqual(constants.HOLDS, result.verdict)
        self.assertTrue(result.details['exact'])
        self.assertEqual(0, result.margin)

    def test_acceptance_fields(self):
        """Test 200 random elements on each field of the acceptance list."""
        for literal in ('nf:x', 'nf:x^2+1', 'nf:x^2-2', 'nf:x^2+5',
                        'ff:3', 'ff:5', 'ff:3:y^2=t^3-t'):
            K = fields.parse_field(literal)
            result = theorems.verify_product_formula(K, count=200, seed=7,
                                                     precision=128)
            self.assertEqual(constants.HOLDS, result.verdict,
                             result.details.get('first_failure'))
            self.assertEqual(200, result.details['count'])
            if K.is_number_field:
                self.assertLess(result.margin, Fraction(1, 10 ** 20))
            else:
                self.assertTrue(result.details['exact'])
                self.assertEqual(0, result.margin)

    def test_failure(self):
        """Test a wrong product is reported with the failing element."""
        with mock.patch.object(places, 'product_formula_defect',
                               return_value=Fraction(2)):
            result = theorems.verify_product_formula(
                fields.parse_field('ff:3'), count=2)
        self.assertEqual(constants.FAILS, result.verdict)
        self.assertIn('first_failure', result.details)


class TestVerifyCanonicalDegree(unittest.TestCase):

    def test_holds(self):
        """Test the canonical degree identity."""
        for literal, expected in (('nf:x', 1), ('nf:x^2-2', 8),
                                  ('nf:x^3-2', 27), ('ff:3', Fraction(1, 9)),
                                  ('ff:5:y^2=t^3+1', 1)):
            result = theorems.verify_canonical_degree(
                fields.parse_field(literal))
            self.assertEqual(constants.HOLDS, result.verdict, literal)
            self.assertEqual(expected, result.quantities['expected'])
            self.assertEqual(expected, result.quantities['deg'])

    def test_omega_literal(self):
        """Test the canonical divisor is reported."""
        result = theorems.verify_canonical_degree(fields.RATIONALS)
        self.assertEqual('-2*(2)+2log(2)*inf1', result.divisor)
        self.assertEqual(result.divisor, result.details['omega'])
