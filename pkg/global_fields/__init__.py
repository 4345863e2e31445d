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

"""Places, divisors and certified Riemann-Roch checks on global fields."""
from __future__ import absolute_import

__author__ = 'The global-fields Authors'
__version__ = '0.1.0'

from global_fields import constants  # noqa
from global_fields.common import PrecisionParams  # noqa
from global_fields.certreal import CertReal  # noqa
from global_fields.logexpr import LogExpr  # noqa
from global_fields.fields import parse_field, RATIONALS  # noqa
from global_fields.places import Place, Extension  # noqa
from global_fields.divisors import *  # noqa
from global_fields.h0 import MultipleSet, h0_checked  # noqa
from global_fields.h0 import h0_oracle, h0_oracle_range  # noqa
from global_fields.report import VerificationReport  # noqa
from global_fields.theorems import *  # noqa
