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

# PRECISION

#: Working precision in bits used when none is requested.
DEFAULT_PRECISION = 128

#: Smallest accepted working precision (IEEE double).
MIN_PRECISION = 53

#: Precision escalation never goes beyond this many bits.
MAX_PRECISION = 1024

#: Factor applied to the working precision on every escalation.
PRECISION_GROWTH = 2

#: Number of escalations attempted before an Indeterminate result is final.
MAX_ESCALATIONS = 3


# EXIT CODES

#: The verified statement holds.
EXIT_HOLDS = 0

#: The verified statement is certified to fail.
EXIT_FAILS = 1

#: Usage, parse or unsupported input errors.
EXIT_USAGE = 2

#: Enclosures straddle a bound even at the maximum precision.
EXIT_INDETERMINATE = 3

#: Fast path and brute force oracle disagree.
EXIT_ORACLE_MISMATCH = 4

#: The oracle refused an instance outside its bounds.
EXIT_INSTANCE_TOO_LARGE = 5


# VERDICTS

#: Certified to hold (strictly inside the bounds or exactly on them).
HOLDS = 'Holds'

#: Certified to be outside the bounds.
FAILS = 'Fails'

#: Enclosures straddle a bound.
INDETERMINATE = 'Indeterminate'

#: Every member of the multiple set was decided.
CERT_EXACT = 'Exact'

#: Some archimedean boundary test stayed undecided, h0 is a range.
CERT_INTERVAL_BOUNDARY = 'IntervalBoundary'


# ORACLE AND ENUMERATION GUARDS

#: Number field oracle: maximum size of the coordinate box.
ORACLE_MAX_BOX = 10 ** 4

#: Number field oracle: maximum field degree.
ORACLE_MAX_DEGREE = 2

#: Function field oracle: maximum degree of the numerator polynomials.
ORACLE_MAX_POLY_DEGREE = 6

#: Function field oracle: maximum number of candidate functions.
ORACLE_MAX_FUNCTIONS = 10 ** 5

#: Lattice enumeration refuses to visit more candidates than this.
ENUMERATION_MAX_POINTS = 2 * 10 ** 6

#: Explicit element lists are refused beyond this many elements.
LIST_MAX_ELEMENTS = 10 ** 5

#: Exponents beyond this are not used for exact archimedean boundary tests.
BOUNDARY_MAX_POWER = 64


# CANONICAL DIVISOR DEFAULTS

#: Default base place P0 in characteristic 0.
DEFAULT_P0_NUMBER_FIELD = 2

#: Default base place P0 in characteristic p, the polynomial t.  When the
#: places above it do not satisfy sum e f = [K:K0] the next candidates are
#: t - c for c = 1, ..., p - 1 and then INFINITY.
DEFAULT_P0_FUNCTION_FIELD = (1, 0)


# SWEEPS AND VERIFICATION

#: Default tolerance for |i(D) - 1| in the asymptotic verification.
DEFAULT_EPS = 0.05

#: Default seed for randomized entry points.
DEFAULT_SEED = 0

#: Default number of random elements for the product formula check.
DEFAULT_PF_COUNT = 200

#: Sweep points are equally spaced.
GROWTH_LINEAR = 'linear'

#: Sweep points are geometrically spaced.
GROWTH_GEOMETRIC = 'geometric'

#: Default sweep for the asymptotic check on number fields.
DEFAULT_SWEEP_NUMBER_FIELD = 'a*inf1,1..10'

#: Default sweep on number fields with a complex place, h0 grows like e^(2a)
#: there.
DEFAULT_SWEEP_COMPLEX = 'a*inf1,1..5'

#: Default sweep for function fields, formatted with the label of the first
#: place at infinity.
DEFAULT_SWEEP_FUNCTION_FIELD = 'n*%s,0..6'


# OUTPUT

#: Human readable aligned table.
FORMAT_TABLE = 'table'

#: Comma separated values, one row per report.
FORMAT_CSV = 'csv'

#: One JSON document per line.
FORMAT_JSONL = 'jsonl'

#: Output formats accepted by the command line.
FORMATS = (FORMAT_TABLE, FORMAT_CSV, FORMAT_JSONL)

#: Stable CSV schema for verification reports.
CSV_COLUMNS = ('statement', 'field', 'divisor', 'deg_mid', 'deg_rad', 'h0',
               'h0_dual', 'ratio_mid', 'ratio_rad', 'C_theorem', 'C_remark',
               'B', 'i_mid', 'i_rad', 'verdict', 'margin_mid')
