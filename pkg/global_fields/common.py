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

from functools import wraps
import logging

from global_fields import constants
from global_fields import errors


LOG = logging.getLogger(__name__)


def requires_characteristic(zero):
    """Reject calls whose first argument lives in the wrong characteristic.

    The first positional argument must be a global field or have a `field`
    attribute (divisors, elements, places).

    :param zero: True to require characteristic 0, False for characteristic p
    :type zero: bool
    """
    def _requires(f):
        @wraps(f)
        def wrapped(obj, *args, **kwargs):
            field = getattr(obj, 'field', obj)
            if (field.characteristic == 0) != zero:
                raise errors.Unsupported(
                    '%(func_name)s needs a field of characteristic %(char)s, '
                    'got %(field)s.' %
                    {'func_name': f.__name__, 'char': '0' if zero else 'p',
                     'field': field})
            return f(obj, *args, **kwargs)
        return wrapped
    return _requires


class PrecisionParams(object):
    """Truncated geometric precision escalation configuration class.

    Certified computations start at `initial_bits` of working precision.
    When a comparison cannot be decided the computation is repeated with the
    precision multiplied by `growth_factor`, never going beyond `max_bits`,
    and at most `max_escalations` times.

    For example with default values of initial_bits=128, max_bits=1024,
    growth_factor=2 and max_escalations=3

    - 1st attempt: 128 bits
    - 1st escalation: 256 bits
    - 2nd escalation: 512 bits
    - 3rd escalation: 1024 bits
    - still undecided: Indeterminate
    """

    def __init__(self, initial_bits=constants.DEFAULT_PRECISION,
                 max_bits=constants.MAX_PRECISION,
                 growth_factor=constants.PRECISION_GROWTH,
                 max_escalations=constants.MAX_ESCALATIONS):
        """Initialize precision configuration.

        :param initial_bits: Working precision of the first attempt.
        :type initial_bits: int
        :param max_bits: Maximum working precision.
        :type max_bits: int
        :param growth_factor: Multiplier applied on every escalation.
        :type growth_factor: int
        :param max_escalations: Maximum number of escalations.
        :type max_escalations: int
        """
        if initial_bits < constants.MIN_PRECISION:
            raise errors.InvalidInput('Precision must be at least %s bits, '
                                      'got %s.' % (constants.MIN_PRECISION,
                                                   initial_bits))
        if max_bits < initial_bits:
            max_bits = initial_bits
        if growth_factor < 2:
            raise errors.InvalidInput('Growth factor must be at least 2.')
        self.initial_bits = initial_bits
        self.max_bits = max_bits
        self.growth_factor = growth_factor
        self.max_escalations = max_escalations

    def __repr__(self):
        return ('PrecisionParams(initial_bits=%s, max_bits=%s, '
                'growth_factor=%s, max_escalations=%s)' %
                (self.initial_bits, self.max_bits, self.growth_factor,
                 self.max_escalations))

    @classmethod
    def get_default(cls):
        """Return default configuration (singleton pattern)."""
        if not hasattr(cls, 'default'):
            cls.default = cls()
        return cls.default

    @classmethod
    def set_default(cls, *args, **kwargs):
        """Set default precision configuration.

        Method accepts a PrecisionParams instance or the same arguments as
        the __init__ method.
        """
        default = cls.get_default()
        # Copy the dictionary so every reference to the default
        # configuration sees the new values.
        if len(args) == 1 and isinstance(args[0], PrecisionParams):
            default.__dict__.update(args[0].__dict__)
        else:
            default.__init__(*args, **kwargs)


def working_precision(precision=None):
    """Precision to use when the caller did not request one."""
    if precision is None:
        return PrecisionParams.get_default().initial_bits
    if precision < constants.MIN_PRECISION:
        raise errors.InvalidInput('Precision must be at least %s bits.' %
                                  constants.MIN_PRECISION)
    return precision


def escalate(param=None):
    """Precision escalation decorator.

    The decorated function must accept a `precision` keyword argument.  It
    is called with the requested precision (or the default one) and every
    time it raises a Transient error it is called again with more precision
    as described by PrecisionParams.

    There are multiple ways to use this decorator:

    @escalate
    def my_func(...):
        Uses the default PrecisionParams configuration.

    @escalate(PrecisionParams(64, 256))
    def my_func(...):
        Uses a specific configuration.

    @escalate(None)
    def my_func(...):
        Same as the first form.
    """
    def _escalate(f):
        @wraps(f)
        def wrapped(*args, **kwargs):
            params = param or PrecisionParams.get_default()
            precision = kwargs.pop('precision', None) or params.initial_bits

            n = 0  # Escalation number
            while True:
                try:
                    return f(*args, precision=precision, **kwargs)
                except errors.Transient:
                    if (n >= params.max_escalations or
                            precision >= params.max_bits):
                        raise
                n += 1
                precision = min(params.max_bits,
                                precision * params.growth_factor)
                LOG.debug('%s undecided, escalating to %s bits',
                          f.__name__, precision)

        return wrapped

    # If no argument has been used
    if callable(param):
        f, param = param, None
        return _escalate(f)

    return _escalate
