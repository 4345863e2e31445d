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
test_errors
----------------------------------

Tests errors classes.
"""

import unittest

import mock

from global_fields import constants
from global_fields import errors


class TestErrors(unittest.TestCase):

    def test_init(self):
        """Test init providing all arguments."""
        error = errors.Error(mock.sentinel.message, mock.sentinel.code)
        self.assertEqual(mock.sentinel.message, error.message)
        self.assertEqual(mock.sentinel.code, error.code)

    def test_default_code(self):
        """Test that the default exit code is the usage one."""
        self.assertEqual(constants.EXIT_USAGE, errors.Error().code)
        self.assertEqual(constants.EXIT_INDETERMINATE,
                         errors.Transient().code)

    def test_str(self):
        """Test str conversion."""
        error = errors.InvalidInput('message')
        self.assertEqual('InvalidInput: message', str(error))

    def test_str_no_message(self):
        """Test str conversion with missing message."""
        error = errors.Indeterminate()
        self.assertEqual('Indeterminate', str(error))
        self.assertNotIn(':', str(error))

    def test_check_classes(self):
        """Test that error classes are dynamically created."""
        for name, (code, cls_parent) in errors.error_codes.items():
            cls = getattr(errors, name)
            self.assertEqual(code, cls.code)
            self.assertIn(cls_parent, cls.__bases__)
            self.assertEqual('global_fields.errors', cls.__module__)

    def test_distinct_oracle_codes(self):
        """Test oracle mismatch and refusal have distinct exit codes."""
        self.assertEqual(constants.EXIT_ORACLE_MISMATCH,
                         errors.OracleMismatch.code)
        self.assertEqual(constants.EXIT_INSTANCE_TOO_LARGE,
                         errors.InstanceTooLarge.code)
        self.assertTrue(issubclass(errors.Indeterminate, errors.Transient))


class TestParseError(unittest.TestCase):

    def test_str_with_position(self):
        """Test the position is part of the message."""
        exc = errors.ParseError('expected a place', 4)
        self.assertEqual('Parse error at position 4: expected a place',
                         str(exc))
        self.assertEqual(4, exc.position)
        self.assertIsInstance(exc, errors.Fatal)

    def test_str_with_text(self):
        """Test a caret points at the position when the text is known."""
        exc = errors.ParseError('unexpected character', 3, 'nf:?')
        lines = str(exc).splitlines()
        self.assertEqual('  nf:?', lines[1])
        self.assertEqual('     ^', lines[2])

    def test_str_without_position(self):
        """Test str conversion without a position."""
        self.assertEqual('Parse error: bad',
                         str(errors.ParseError('bad')))
