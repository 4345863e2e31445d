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
test_common
----------------------------------

Tests common methods and decorators
"""
import unittest

import mock

from global_fields import common
from global_fields import errors


class TestRequiresCharacteristicDecorator(unittest.TestCase):
    """Test requires_characteristic decorator."""

    def test_matching_field(self):
        """Test decorator calls the function on a matching field."""
        function = mock.Mock(__name__='fake',
                             return_value=mock.sentinel.return_value)
        field = mock.Mock(spec=['characteristic'], characteristic=0)
        wrapper = common.requires_characteristic(True)(function)

        self.assertEqual(mock.sentinel.return_value,
                         wrapper(field, 1, entry=2))
        function.assert_called_once_with(field, 1, entry=2)

    def test_field_attribute(self):
        """Test decorator reads the field of divisors and elements."""
        function = mock.Mock(__name__='fake',
                             return_value=mock.sentinel.return_value)
        field = mock.Mock(spec=['characteristic'], characteristic=3)
        divisor = mock.Mock(spec=['field'], field=field)
        wrapper = common.requires_characteristic(False)(function)

        self.assertEqual(mock.sentinel.return_value, wrapper(divisor))
        function.assert_called_once_with(divisor)

    def test_wrong_characteristic(self):
        """Test decorator rejects a field of the wrong characteristic."""
        function = mock.Mock(__name__='fake')
        field = mock.Mock(spec=['characteristic'], characteristic=5)
        wrapper = common.requires_characteristic(True)(function)

        self.assertRaises(errors.Unsupported, wrapper, field)
        self.assertFalse(function.called)


class TestPrecisionParams(unittest.TestCase):
    """Test PrecisionParams class."""

    def setUp(self):
        # We don't want to bring default configuration from one test to another
        if hasattr(common.PrecisionParams, 'default'):
            delattr(common.PrecisionParams, 'default')

    def tearDown(self):
        if hasattr(common.PrecisionParams, 'default'):
            delattr(common.PrecisionParams, 'default')

    def test_init_default(self):
        """Test that default values for new instances are as expected."""
        params = common.PrecisionParams()
        self.assertEqual(128, params.initial_bits)
        self.assertEqual(1024, params.max_bits)
        self.assertEqual(2, params.growth_factor)
        self.assertEqual(3, params.max_escalations)

    def test_init_values_by_key(self):
        """Test that we can initialize values for new instances by name."""
        params = common.PrecisionParams(initial_bits=64, max_bits=256,
                                        growth_factor=4, max_escalations=1)
        self.assertEqual(64, params.initial_bits)
        self.assertEqual(256, params.max_bits)
        self.assertEqual(4, params.growth_factor)
        self.assertEqual(1, params.max_escalations)

    def test_max_bits_never_below_initial(self):
        """Test max_bits is raised to initial_bits."""
        params = common.PrecisionParams(512, 128)
        self.assertEqual(512, params.max_bits)

    def test_init_invalid(self):
        """Test precision below double and growth below 2 are rejected."""
        self.assertRaises(errors.InvalidInput, common.PrecisionParams, 52)
        self.assertRaises(errors.InvalidInput, common.PrecisionParams, 128,
                          256, 1)

    def test_get_default_singleton(self):
        """Test that get_default always returns the same instance."""
        first_params = common.PrecisionParams.get_default()
        second_params = common.PrecisionParams.get_default()
        self.assertIs(first_params, second_params)

    def test_set_default_using_instance(self):
        """Test that set_default updates the singleton from an instance."""
        first_params = common.PrecisionParams.get_default()
        new_params = common.PrecisionParams(64, 128, 2, 1)
        common.PrecisionParams.set_default(new_params)
        second_params = common.PrecisionParams.get_default()
        self.assertIs(first_params, second_params)
        self.assertDictEqual(vars(new_params), vars(second_params))

    def test_set_default_using_positional_args(self):
        """Test that set_default accepts the init arguments."""
        first_params = common.PrecisionParams.get_default()
        common.PrecisionParams.set_default(256, 2048)
        second_params = common.PrecisionParams.get_default()
        self.assertIs(first_params, second_params)
        self.assertEqual(256, second_params.initial_bits)
        self.assertEqual(2048, second_params.max_bits)


class TestWorkingPrecision(unittest.TestCase):

    def tearDown(self):
        if hasattr(common.PrecisionParams, 'default'):
            delattr(common.PrecisionParams, 'default')

    def test_default(self):
        """Test the default configuration is used when none is given."""
        common.PrecisionParams.set_default(200)
        self.assertEqual(200, common.working_precision())

    def test_explicit(self):
        """Test an explicit precision is returned unchanged."""
        self.assertEqual(64, common.working_precision(64))

    def test_too_small(self):
        """Test precisions below double are rejected."""
        self.assertRaises(errors.InvalidInput, common.working_precision, 32)


class TestEscalate(unittest.TestCase):
    def setUp(self):
        common.PrecisionParams.set_default(128, 1024, 2, 3)

    def tearDown(self):
        if hasattr(common.PrecisionParams, 'default'):
            delattr(common.PrecisionParams, 'default')

    def test_escalate_no_error(self):
        """Test function is only called once if there is no error."""
        function = mock.Mock(__name__='fake',
                             return_value=mock.sentinel.funct_return)
        wrapper = common.escalate(function)
        result = wrapper(mock.sentinel.pos_arg, key=mock.sentinel.key_arg)
        self.assertEqual(mock.sentinel.funct_return, result)
        function.assert_called_once_with(mock.sentinel.pos_arg,
                                         key=mock.sentinel.key_arg,
                                         precision=128)

    def test_escalate_explicit_precision(self):
        """Test the requested precision is the first one used."""
        function = mock.Mock(__name__='fake')
        common.escalate(function)(precision=300)
        function.assert_called_once_with(precision=300)

    def test_escalate_error_default(self):
        """Test that we escalate and end up raising the error."""
        function = mock.Mock(__name__='fake',
                             side_effect=errors.Indeterminate())
        wrapper = common.escalate(function)
        self.assertRaises(errors.Indeterminate, wrapper)
        precisions = [c[1]['precision'] for c in function.call_args_list]
        self.assertEqual([128, 256, 512, 1024], precisions)

    def test_escalate_capped_by_max_bits(self):
        """Test that we stop escalating at max_bits."""
        common.PrecisionParams.set_default(128, 300, 2, 5)
        function = mock.Mock(__name__='fake',
                             side_effect=errors.Indeterminate())
        wrapper = common.escalate(function)
        self.assertRaises(errors.Indeterminate, wrapper)
        precisions = [c[1]['precision'] for c in function.call_args_list]
        self.assertEqual([128, 256, 300], precisions)

    def test_escalate_until_decided(self):
        """Test the first decided result is returned."""
        function = mock.Mock(__name__='fake',
                             side_effect=[errors.Indeterminate(),
                                          mock.sentinel.decided])
        wrapper = common.escalate(function)
        self.assertEqual(mock.sentinel.decided, wrapper())
        self.assertEqual(2, function.call_count)

    def test_escalate_fatal_exception(self):
        """Test that we don't escalate on fatal errors."""
        function = mock.Mock(__name__='fake',
                             side_effect=errors.InvalidInput())
        wrapper = common.escalate(function)
        self.assertRaises(errors.InvalidInput, wrapper)
        function.assert_called_once_with(precision=128)

    def test_escalate_with_params(self):
        """Test the decorator accepts a specific configuration."""
        function = mock.Mock(__name__='fake',
                             side_effect=errors.Indeterminate())
        params = common.PrecisionParams(64, 128, 2, 1)
        wrapper = common.escalate(params)(function)
        self.assertRaises(errors.Indeterminate, wrapper)
        precisions = [c[1]['precision'] for c in function.call_args_list]
        self.assertEqual([64, 128], precisions)

    def test_escalate_with_none(self):
        """Test escalate(None) uses the default configuration."""
        function = mock.Mock(__name__='fake')
        common.escalate(None)(function)()
        function.assert_called_once_with(precision=128)
