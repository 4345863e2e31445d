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
test_logexpr
----------------------------------

Tests exact log-linear real numbers.
"""
from fractions import Fraction
import math
import unittest

import mock

from global_fields import certreal
from global_fields import errors
from global_fields.logexpr import LogExpr


class TestLogExpr(unittest.TestCase):

    def test_log_factors(self):
        """Test log n is split over the primes of n."""
        self.assertEqual(((2, 2), (3, 1)), LogExpr.log(12).logs)
        self.assertEqual(((2, -2),), LogExpr.log(Fraction(1, 4)).logs)

    def test_log_non_positive(self):
        """Test log of 0 and negative numbers is rejected."""
        self.assertRaises(errors.DomainError, LogExpr.log, 0)
        self.assertRaises(errors.DomainError, LogExpr.log, -2)

    def test_exact_zero(self):
        """Test linear relations between logs cancel exactly."""
        value = LogExpr.log(6) - LogExpr.log(2) - LogExpr.log(3)
        self.assertTrue(value.is_zero())
        self.assertEqual(0, value.sign())
        self.assertEqual(LogExpr.rational(0), value)

    def test_rational_value(self):
        """Test rational expressions give their value."""
        self.assertEqual(Fraction(3, 2),
                         LogExpr.rational(Fraction(3, 2)).rational_value())
        self.assertIsNone(LogExpr.log(2).rational_value())

    def test_exp_rational(self):
        """Test exp of an integral combination of logs is rational."""
        value = LogExpr.log(3) * 2 - LogExpr.log(2)
        self.assertEqual(Fraction(9, 2), value.exp_rational())
        self.assertEqual(Fraction(9, 2), value.exp())

    def test_exp_power(self):
        """Test exp of a rational combination of logs is a root."""
        value = LogExpr.log(2) / 2
        self.assertEqual((Fraction(2), 2), value.exp_power())
        self.assertIsNone(value.exp_rational())
        self.assertIsNone((value + 1).exp_power())

    def test_sign(self):
        """Test certified signs."""
        self.assertEqual(1, (LogExpr.log(3) - LogExpr.log(2)).sign())
        self.assertEqual(-1, (LogExpr.log(2) - 1).sign())

    def test_evaluate(self):
        """Test evaluation encloses the real value."""
        value = (LogExpr.log(2) * 3 + Fraction(1, 2)).evaluate()
        self.assertIsInstance(value, certreal.CertReal)
        self.assertAlmostEqual(3 * math.log(2) + 0.5, float(value))

    def test_product_of_logs_unsupported(self):
        """Test the ring operations that leave the log-linear space."""
        self.assertRaises(errors.Unsupported, lambda:
                          LogExpr.log(2) * LogExpr.log(3))
        self.assertRaises(errors.Unsupported, lambda:
                          LogExpr.log(2) / LogExpr.log(3))

    def test_rational_factor(self):
        """Test products with rational LogExpr factors."""
        self.assertEqual(LogExpr.log(4),
                         LogExpr.log(2) * LogExpr.rational(2))
        self.assertEqual(LogExpr.log(2), LogExpr.log(4) / 2)

    def test_to_literal(self):
        """Test literal printing."""
        self.assertEqual('0', LogExpr.rational(0).to_literal())
        self.assertEqual('2log(2)+log(3)', LogExpr.log(12).to_literal())
        self.assertEqual('1/2-log(2)',
                         (Fraction(1, 2) - LogExpr.log(2)).to_literal())
        self.assertEqual('1/2*log(5)', (LogExpr.log(5) / 2).to_literal())

    def test_hash(self):
        """Test equal expressions hash equally."""
        self.assertEqual(hash(LogExpr.log(4)),
                         hash(LogExpr.log(2) + LogExpr.log(2)))


class TestDeferred(unittest.TestCase):

    def setUp(self):
        self.term = mock.Mock(key=('phi',))
        self.term.evaluate.side_effect = (
            lambda precision=None: certreal.CertReal.exact(2, precision).log())

    def test_deferred_is_not_exact(self):
        """Test deferred terms disable exact answers."""
        value = LogExpr.deferred_log(self.term)
        self.assertFalse(value.is_exact)
        self.assertIsNone(value.exp_power())
        self.assertIsNone(value.rational_value())

    def test_deferred_evaluation(self):
        """Test deferred terms are evaluated on demand."""
        value = LogExpr.deferred_log(self.term, 2) - LogExpr.log(4)
        self.assertTrue(value.evaluate().contains_zero())
        self.assertRaises(errors.Indeterminate, value.sign)
        self.assertTrue(self.term.evaluate.called)

    def test_deferred_literal(self):
        """Test deferred terms print their value."""
        literal = LogExpr.deferred_log(self.term).to_literal()
        self.assertTrue(literal.startswith('1*~0.69314'))
