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

from __future__ import absolute_import

import sys

from global_fields import constants


class Error(Exception):
    """Base error for all global_fields operations.

    Every error carries the exit status the command line front end returns
    when the error reaches it.
    """
    code = constants.EXIT_USAGE

    def __init__(self, message=None, code=None):
        super(Error, self).__init__(message)
        if code is not None:
            self.code = code
        self.message = message

    def __str__(self):
        msg = self.__class__.__name__
        if self.message:
            msg += ': %s' % self.message
        return msg


class Fatal(Error):
    """The input or the request is wrong, repeating it cannot help."""
    pass


class Transient(Error):
    """Undecided at the current working precision."""
    code = constants.EXIT_INDETERMINATE


class ParseError(Fatal):
    """A literal could not be parsed."""

    def __init__(self, message=None, position=None, text=None):
        super(ParseError, self).__init__(message)
        self.position = position
        self.text = text

    def __str__(self):
        if self.position is None:
            return 'Parse error: %s' % self.message
        msg = 'Parse error at position %s: %s' % (self.position,
                                                   self.message)
        if self.text is not None:
            msg += '\n  %s\n  %s^' % (self.text, ' ' * self.position)
        return msg


error_codes = {
    'InvalidInput': (constants.EXIT_USAGE, Fatal),
    'NotIrreducible': (constants.EXIT_USAGE, Fatal),
    'NotMonogenic': (constants.EXIT_USAGE, Fatal),
    'Unsupported': (constants.EXIT_USAGE, Fatal),
    'FieldMismatch': (constants.EXIT_USAGE, Fatal),
    'DomainError': (constants.EXIT_USAGE, Fatal),
    'RankDeficient': (constants.EXIT_USAGE, Fatal),
    'OracleMismatch': (constants.EXIT_ORACLE_MISMATCH, Fatal),
    'InstanceTooLarge': (constants.EXIT_INSTANCE_TOO_LARGE, Fatal),
    'Indeterminate': (constants.EXIT_INDETERMINATE, Transient),
}


# Dynamically create all error classes from error_codes dictionary
for name, (exit_code, error_class) in error_codes.items():
    new_class = type(name, (error_class,),
                     {'__module__': __name__, 'code': exit_code})
    sys.modules[__name__ + '.' + name] = new_class
    globals()[new_class.__name__] = new_class
