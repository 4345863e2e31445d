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
test_places
----------------------------------

Tests place enumeration, valuations and the local invariants of
extensions.
"""
from fractions import Fraction
import math
import unittest

from global_fields import errors
from global_fields import fields
from global_fields import logexpr
from global_fields import places


class TestNumberFieldPlaces(unittest.TestCase):

    def setUp(self):
        self.field = fields.parse_field('nf:x^2+1')

    def test_rationals(self):
        """Test Q has one place above each prime."""
        above = places.places_above(fields.RATIONALS, 5)
        self.assertEqual(['(5)'], [P.label for P in above])
        self.assertEqual(1, above[0].degree)
        self.assertEqual(5, above[0].norm())

    def test_decomposition(self):
        """Test ramified, split and inert primes of Q(i)."""
        ramified = places.places_above(self.field, 2)
        self.assertEqual([(2, 1)], [(P.e, P.f_res) for P in ramified])
        self.assertEqual('(2)', ramified[0].label)
        split = places.places_above(self.field, 5)
        self.assertEqual(['(5,1)', '(5,2)'], [P.label for P in split])
        inert = places.places_above(self.field, 3)
        self.assertEqual([(1, 2)], [(P.e, P.f_res) for P in inert])
        self.assertEqual(9, places.norm_N(inert[0]))
        self.assertEqual(logexpr.LogExpr.log(3) * 2, inert[0].log_norm())

    def test_fundamental_identity(self):
        """Test sum e*f = [K:Q] over every prime."""
        cubic = fields.parse_field('nf:x^3-2')
        for p in (2, 3, 5, 7, 11, 13):
            self.assertEqual(2, places.fundamental_identity(self.field, p))
            self.assertEqual(3, places.fundamental_identity(cubic, p))

    def test_bad_base(self):
        """Test only rational primes are bases of number field places."""
        self.assertRaises(errors.InvalidInput, places.places_above,
                          self.field, 4)
        self.assertRaises(errors.InvalidInput, places.places_above,
                          self.field, places.INFINITY)

    def test_archimedean(self):
        """Test real places come before complex ones."""
        complex_places = places.archimedean_places(self.field)
        self.assertEqual([places.COMPLEX],
                         [P.kind for P in complex_places])
        self.assertEqual('inf1', complex_places[0].label)
        self.assertEqual(2, complex_places[0].dim)
        self.assertAlmostEqual(math.exp(2),
                               float(places.norm_N(complex_places[0])))
        cubic = fields.parse_field('nf:x^3-2')
        self.assertEqual([places.REAL, places.COMPLEX],
                         [P.kind for P in places.archimedean_places(cubic)])
        self.assertEqual([], places.archimedean_places(
            fields.parse_field('ff:3')))

    def test_s_counts(self):
        """Test (S1, S2) counts embeddings."""
        self.assertEqual((1, 0), places.s_counts(fields.RATIONALS))
        self.assertEqual((0, 2), places.s_counts(self.field))
        self.assertEqual((1, 2), places.s_counts(
            fields.parse_field('nf:x^3-2')))
        self.assertEqual((0, 0), places.s_counts(fields.parse_field('ff:3')))

    def test_find_place(self):
        """Test lookups by base and index."""
        self.assertEqual('(5,2)',
                         places.find_place(self.field, 5, 2).label)
        self.assertEqual('(2)', places.find_place(self.field, 2).label)
        self.assertRaises(errors.InvalidInput, places.find_place,
                          self.field, 5)
        self.assertRaises(errors.InvalidInput, places.find_place,
                          self.field, 5, 3)
        self.assertRaises(errors.InvalidInput, places.find_place,
                          fields.parse_field('ff:3'), None)

    def test_ordering(self):
        """Test finite places sort before archimedean ones."""
        P = places.find_place(self.field, 5, 1)
        Q = places.archimedean_places(self.field)[0]
        R = places.find_place(self.field, 2)
        self.assertEqual([R, P, Q], sorted([Q, P, R]))


class TestNumberFieldValuations(unittest.TestCase):

    def setUp(self):
        self.field = fields.parse_field('nf:x^2+1')
        self.i = self.field.generator()

    def test_ramified(self):
        """Test v(1+i) = 1 and v(2) = 2 above 2."""
        P = places.find_place(self.field, 2)
        self.assertEqual(1, places.finite_valuation_exponent(P, 1 + self.i))
        self.assertEqual(2, places.finite_valuation_exponent(P, 2))
        self.assertEqual(-2, places.finite_valuation_exponent(
            P, Fraction(1, 2)))
        self.assertEqual(Fraction(1, 4), places.normalized_valuation(P, 2))

    def test_split(self):
        """Test 2+i lies in exactly one place above 5."""
        values = [places.finite_valuation_exponent(P, 2 + self.i)
                  for P in places.places_above(self.field, 5)]
        self.assertEqual([0, 1], sorted(values))

    def test_zero(self):
        """Test v(0) is rejected."""
        P = places.find_place(self.field, 2)
        self.assertRaises(errors.DomainError,
                          places.finite_valuation_exponent, P, 0)
        self.assertEqual(0, places.normalized_valuation(P, 0))

    def test_archimedean_value(self):
        """Test phi is |.|^2 at a complex place."""
        P = places.archimedean_places(self.field)[0]
        self.assertTrue(places.normalized_valuation(P, 1 + self.i)
                        .contains(2))
        self.assertTrue(places.normalized_valuation(P, Fraction(-3, 2))
                        .contains(Fraction(9, 4)))

    def test_support(self):
        """Test the support of 6 in Q."""
        labels = [P.label for P in
                  places.all_places_in_support(fields.RATIONALS.element(6))]
        self.assertEqual(['(2)', '(3)', 'inf1'], labels)
        self.assertRaises(errors.DomainError, places.all_places_in_support,
                          fields.RATIONALS.zero())

    def test_product_formula(self):
        """Test the product of phi_P is an enclosure of 1."""
        alpha = self.field.parse_element('(3+2x)/7')
        self.assertTrue(places.product_formula_defect(alpha).contains(1))
        cubic = fields.parse_field('nf:x^3-2')
        beta = cubic.parse_element('x^2-x+5')
        self.assertTrue(places.product_formula_defect(
            beta, precision=256).contains(1))

    def test_product_formula_negative_conjugates(self):
        """Test elements with negative real parts at every conjugate."""
        alpha = self.field.parse_element('-x/2-1/3')
        self.assertTrue(places.product_formula_defect(alpha).contains(1))
        real = fields.parse_field('nf:x^2-2')
        beta = real.parse_element('-1-x')
        self.assertTrue(places.product_formula_defect(beta).contains(1))

    def test_valuation_axioms(self):
        """Test multiplicativity and the triangle inequality."""
        alpha, beta = 2 + self.i, 2 - self.i
        for P in places.places_above(self.field, 5):
            self.assertEqual((True, True), tuple(
                places.check_valuation_axioms(P, alpha, beta)))
        real = places.archimedean_places(fields.parse_field('nf:x^2-2'))[0]
        gen = real.field.generator()
        self.assertEqual((True, True), tuple(
            places.check_valuation_axioms(real, gen, real.field.one())))


class TestFunctionFieldPlaces(unittest.TestCase):

    def setUp(self):
        self.field = fields.parse_field('ff:5:y^2=t^3+1')
        names = self.field.element_names()
        self.t, self.y = names['t'], names['y']

    def test_rational_function_field(self):
        """Test places of F_3(t)."""
        field = fields.parse_field('ff:3')
        infinite = places.places_above(field, places.INFINITY)
        self.assertEqual(['inf'], [P.label for P in infinite])
        self.assertEqual(1, infinite[0].degree)
        quadratic = places.places_above(field, (1, 0, 1))
        self.assertEqual(2, quadratic[0].degree)
        self.assertEqual(9, quadratic[0].norm())
        self.assertRaises(errors.InvalidInput, places.places_above, field,
                          (1, 0, 2))

    def test_decomposition(self):
        """Test split, inert and ramified places of y^2 = t^3 + 1."""
        split = places.places_above(self.field, (1, 0))
        self.assertEqual(['(t,1)', '(t,2)'], [P.label for P in split])
        self.assertEqual([(1,), (4,)], [P.factor for P in split])
        inert = places.places_above(self.field, (1, 4))
        self.assertEqual([(1, 2)], [(P.e, P.degree) for P in inert])
        ramified = places.places_above(self.field, (1, 1))
        self.assertEqual([(2, 1)], [(P.e, P.degree) for P in ramified])
        infinite = places.infinite_places(self.field)
        self.assertEqual(['inf'], [P.label for P in infinite])
        self.assertEqual(2, infinite[0].e)
        for base in ((1, 0), (1, 4), (1, 1), places.INFINITY):
            self.assertEqual(2, places.fundamental_identity(self.field,
                                                            base))

    def test_valuations(self):
        """Test y - 1 vanishes to order 3 at one place above t."""
        first, second = places.places_above(self.field, (1, 0))
        alpha = self.y - 1
        self.assertEqual(3, places.finite_valuation_exponent(first, alpha))
        self.assertEqual(0, places.finite_valuation_exponent(second, alpha))
        infinity = places.infinite_places(self.field)[0]
        self.assertEqual(-3, places.finite_valuation_exponent(infinity,
                                                              alpha))
        self.assertEqual(-2, places.finite_valuation_exponent(infinity,
                                                              self.t))

    def test_product_formula(self):
        """Test the product formula is exact in characteristic p."""
        alpha = (self.t + self.y) / (self.t ** 2 + 2)
        self.assertEqual(Fraction(1), places.product_formula_defect(alpha))

    def test_product_formula_large_support(self):
        """Test an element whose support needs a degree 9 base mod 3."""
        field = fields.parse_field('ff:3:y^2=t^3-t')
        alpha = field.parse_element(
            '(2t^2+t+1)/(t+1)+(t^2+1)/(t^2+t+2)*y')
        self.assertEqual(Fraction(1), places.product_formula_defect(alpha))
        for P in places.all_places_in_support(alpha):
            self.assertNotEqual(0, places.finite_valuation_exponent(P, alpha))


class TestExtensions(unittest.TestCase):

    def test_supported(self):
        """Test supported and unsupported extensions."""
        gaussian = fields.parse_field('nf:x^2+1')
        extension = places.Extension(gaussian, fields.RATIONALS)
        self.assertEqual(2, extension.degree)
        self.assertFalse(extension.is_trivial)
        self.assertTrue(places.Extension(gaussian, gaussian).is_trivial)
        self.assertEqual(1, places.Extension(gaussian, gaussian).degree)
        self.assertRaises(errors.Unsupported, places.Extension,
                          fields.parse_field('ff:5'), gaussian)
        self.assertRaises(errors.Unsupported, places.Extension,
                          fields.parse_field('ff:5:y^2=t^3+1'),
                          fields.parse_field('ff:3'))

    def test_place_below(self):
        """Test places of L map to the place of K below."""
        gaussian = fields.parse_field('nf:x^2+1')
        extension = places.Extension(gaussian, fields.RATIONALS)
        Q = places.find_place(gaussian, 5, 2)
        self.assertEqual('(5)', extension.place_below(Q).label)
        arch = places.archimedean_places(gaussian)[0]
        self.assertEqual(places.REAL, extension.place_below(arch).kind)

    def test_different(self):
        """Test ramification indices and different exponents."""
        gaussian = fields.parse_field('nf:x^2+1')
        P2 = places.find_place(gaussian, 2)
        self.assertEqual(2, places.ramification_index(P2))
        self.assertEqual(2, places.different_exponent(P2))
        self.assertEqual(0, places.different_exponent(
            places.find_place(gaussian, 5, 1)))
        arch = places.archimedean_places(gaussian)[0]
        self.assertEqual(2, places.ramification_index(arch))
        self.assertEqual(-logexpr.LogExpr.log(2),
                         places.different_exponent(arch))
        trivial = places.Extension(gaussian, gaussian)
        self.assertEqual(0, places.different_exponent(P2, trivial))
        curve = fields.parse_field('ff:5:y^2=t^3+1')
        self.assertEqual(1, places.different_exponent(
            places.find_place(curve, (1, 1))))
        self.assertRaises(errors.FieldMismatch, places.different_exponent,
                          P2, places.Extension(curve, curve))

    def test_discriminant_from_different(self):
        """Test |disc| is the norm of the different."""
        for literal in ('nf:x^2+1', 'nf:x^3-2', 'nf:x^2-2', 'nf:x^2+5'):
            total, disc = places.discriminant_from_different(
                fields.parse_field(literal))
            self.assertEqual(disc, total)

    def test_characteristic_guards(self):
        """Test genus and discriminant need the right characteristic."""
        self.assertEqual(1, places.genus(fields.parse_field(
            'ff:5:y^2=t^3+1')))
        self.assertEqual(-4, places.discriminant(
            fields.parse_field('nf:x^2+1')))
        self.assertRaises(errors.Unsupported, places.genus,
                          fields.RATIONALS)
        self.assertRaises(errors.Unsupported, places.discriminant,
                          fields.parse_field('ff:3'))
