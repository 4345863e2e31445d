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

"""Verification reports and their table, CSV and JSONL writers."""
from __future__ import absolute_import

import csv
from fractions import Fraction
import json
import math
import numbers

from global_fields import certreal
from global_fields import constants
from global_fields import logexpr


#: Quantity names behind the (mid, rad) pairs of the CSV schema
_PAIRS = (('deg', 'deg_mid', 'deg_rad'), ('ratio', 'ratio_mid', 'ratio_rad'),
          ('i', 'i_mid', 'i_rad'))

#: Quantity names written as a single CSV value
_SINGLES = ('h0', 'h0_dual', 'C_theorem', 'C_remark', 'B')

#: Columns of the human readable table
_TABLE_COLUMNS = ('statement', 'field', 'divisor', 'deg', 'h0', 'h0_dual',
                  'ratio', 'i', 'verdict', 'margin')

_EXIT_CODES = {
    constants.HOLDS: constants.EXIT_HOLDS,
    constants.FAILS: constants.EXIT_FAILS,
    constants.INDETERMINATE: constants.EXIT_INDETERMINATE,
}


def _enclosure(value):
    """CertReal view of any reported quantity, None if not numeric."""
    if isinstance(value, certreal.CertReal):
        return value
    if isinstance(value, logexpr.LogExpr) or hasattr(value, 'evaluate'):
        return value.evaluate()
    if isinstance(value, bool) or not isinstance(value, numbers.Rational):
        return None
    return certreal.CertReal.exact(Fraction(value))


def mid_rad(value):
    """(midpoint, radius) strings of a quantity, empty when missing."""
    if isinstance(value, (tuple, list)):
        low, high = value
        if low == high:
            value = low
        else:
            value = certreal.CertReal.from_interval(low, high)
    enclosure = _enclosure(value)
    if enclosure is None:
        return '', ''
    return (format(float(enclosure.midpoint), '.17g'),
            format(float(enclosure.radius), '.3g'))


def exact_text(value):
    """Exact literal of a quantity when it has one, else mid ± rad."""
    if value is None:
        return ''
    if isinstance(value, (tuple, list)):
        low, high = value
        return str(low) if low == high else '%s..%s' % (low, high)
    if isinstance(value, certreal.CertReal):
        return str(value)
    if hasattr(value, 'to_literal'):
        if isinstance(value, logexpr.LogExpr) and not value.is_exact:
            return str(value.evaluate())
        return value.to_literal()
    return str(value)


def _json_value(value):
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, float):
        return value if math.isfinite(value) else None
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, (tuple, list)) and all(
            isinstance(v, numbers.Integral) for v in value):
        return [int(v) for v in value]
    mid, rad = mid_rad(value)
    result = {'mid': float(mid), 'rad': float(rad)}
    if not isinstance(value, certreal.CertReal):
        result['exact'] = exact_text(value)
    return result


class VerificationReport(object):
    """Outcome of a verification.

    :param statement: Statement id (rr1, rr2, rh, pf, canon)
    :type statement: str
    :param field: Field literal
    :type field: str
    :param divisor: Divisor literal, empty when the statement has none
    :type divisor: str
    :param quantities: Computed quantities, CertReal or exact values
    :type quantities: dict
    :param verdict: HOLDS, FAILS or INDETERMINATE
    :type verdict: str
    :param margin: Distance to the nearest bound
    :type margin: CertReal or exact value
    :param details: Extra verdicts and flags
    :type details: dict
    :param inputs: Choices the computation depends on, and the sweep
                   parameter under the key `parameter`
    :type inputs: dict
    """

    def __init__(self, statement, field, divisor='', quantities=None,
                 verdict=constants.INDETERMINATE, margin=None, details=None,
                 inputs=None):
        self.statement = statement
        self.field = field
        self.divisor = divisor
        self.quantities = quantities or {}
        self.verdict = verdict
        self.margin = margin
        self.details = details or {}
        self.inputs = inputs or {}

    @property
    def holds(self):
        return self.verdict == constants.HOLDS

    @property
    def exit_code(self):
        return _EXIT_CODES[self.verdict]

    @property
    def sort_key(self):
        return (self.statement, self.field,
                self.inputs.get('parameter', 0), self.divisor)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def row(self):
        """Values of the CSV columns."""
        row = dict((column, '') for column in constants.CSV_COLUMNS)
        row.update(statement=self.statement, field=self.field,
                   divisor=self.divisor, verdict=self.verdict)
        for name, mid, rad in _PAIRS:
            row[mid], row[rad] = mid_rad(self.quantities.get(name))
        for name in _SINGLES:
            value = self.quantities.get(name)
            if isinstance(value, (numbers.Integral, tuple, list)):
                row[name] = exact_text(value)
            else:
                row[name] = mid_rad(value)[0]
        row['margin_mid'] = mid_rad(self.margin)[0]
        return row

    def to_dict(self):
        """JSON compatible dictionary."""
        return {
            'statement': self.statement,
            'field': self.field,
            'divisor': self.divisor,
            'verdict': self.verdict,
            'margin': _json_value(self.margin),
            'quantities': dict((k, _json_value(v))
                               for k, v in self.quantities.items()),
            'details': dict((k, _json_value(v))
                            for k, v in self.details.items()),
            'inputs': dict((k, _json_value(v))
                           for k, v in self.inputs.items()),
        }

    def __repr__(self):
        return '<VerificationReport %s %s %s: %s>' % (
            self.statement, self.field, self.divisor, self.verdict)


def exit_code(reports):
    """Exit status of a run: Fails wins over Indeterminate over Holds."""
    codes = set(r.exit_code for r in reports)
    for code in (constants.EXIT_FAILS, constants.EXIT_INDETERMINATE):
        if code in codes:
            return code
    return constants.EXIT_HOLDS


# Writers

def write_csv(reports, stream):
    writer = csv.DictWriter(stream, fieldnames=constants.CSV_COLUMNS,
                            lineterminator='\n')
    writer.writeheader()
    for r in reports:
        writer.writerow(r.row())


def write_jsonl(reports, stream):
    for r in reports:
        stream.write(json.dumps(r.to_dict(), sort_keys=True) + '\n')


def _table_cells(r):
    cells = {
        'statement': r.statement,
        'field': r.field,
        'divisor': r.divisor,
        'verdict': r.verdict,
        'margin': exact_text(r.margin),
    }
    for name in ('deg', 'h0', 'h0_dual', 'ratio', 'i'):
        cells[name] = exact_text(r.quantities.get(name))
    return [cells[c] for c in _TABLE_COLUMNS]


def write_table(reports, stream):
    """Aligned table, followed by the details of every report."""
    rows = [list(_TABLE_COLUMNS)] + [_table_cells(r) for r in reports]
    widths = [max(len(row[i]) for row in rows)
              for i in range(len(_TABLE_COLUMNS))]
    for row in rows:
        stream.write('  '.join(cell.ljust(w) for cell, w in
                               zip(row, widths)).rstrip() + '\n')
    for r in reports:
        if not r.details:
            continue
        stream.write('\n%s %s %s\n' % (r.statement, r.field, r.divisor))
        for key in sorted(r.details):
            stream.write('  %s: %s\n' % (key, exact_text(r.details[key])))


_WRITERS = {
    constants.FORMAT_TABLE: write_table,
    constants.FORMAT_CSV: write_csv,
    constants.FORMAT_JSONL: write_jsonl,
}


def write_reports(reports, stream, fmt=constants.FORMAT_TABLE):
    """Write reports in one of constants.FORMATS."""
    _WRITERS[fmt](reports, stream)
