#! /usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright 2026 The chiral-edge developers

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Result Files
============
**Reading and writing experiment outputs**

Every subcommand produces a `ResultFile`: the run configuration and one or
more named tables. CSV output starts with a `# config` line carrying the
configuration as JSON, and each table is introduced by a `# table <name>`
line followed by a header row. JSON output holds the same content in one
object.
"""

import json
import math
import os
import tempfile

from .exceptions import OutputFileError, ParseError
from .settings import RunConfig
from .utils import format_float, parse_float

CONFIG_PREFIX = '# config '
TABLE_PREFIX = '# table '
NON_FINITE = ('nan', 'inf', '-inf')


class Table(object):
    """ Named table of result rows.

    Parameters
    ----------
    name : string

    columns : list of string
    """

    def __init__(self, name, columns, rows=None):
        self.name = name
        self.columns = list(columns)
        self.rows = []
        for row in rows or []:
            self.append(row)

    def append(self, row):
        row = list(row)
        if len(row) != len(self.columns):
            raise ValueError('Row has {} fields, table {} has {} columns'
                             .format(len(row), self.name, len(self.columns)))
        self.rows.append(row)

    def column(self, name):
        index = self.columns.index(name)
        return [row[index] for row in self.rows]

    def __len__(self):
        return len(self.rows)

    def __eq__(self, other):
        if not isinstance(other, Table):
            return NotImplemented
        return (self.name, self.columns, self.rows) == \
            (other.name, other.columns, other.rows)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return '<Table {}: {} rows>'.format(self.name, len(self.rows))


class ResultFile(object):
    """ Configuration plus result tables of one run.
    """

    def __init__(self, config, tables=None):
        self.config = config
        self.tables = list(tables or [])

    def add_table(self, name, columns):
        table = Table(name, columns)
        self.tables.append(table)
        return table

    def table(self, name):
        for table in self.tables:
            if table.name == name:
                return table
        raise KeyError(name)

    def data_section(self, fmt='csv'):
        """ Serialized tables without the configuration header. """
        if fmt == 'json':
            return json.dumps([_table_dict(table) for table in self.tables],
                              sort_keys=True, allow_nan=False)
        lines = []
        for table in self.tables:
            lines.append(TABLE_PREFIX + table.name)
            lines.append(','.join(table.columns))
            for row in table.rows:
                lines.append(','.join(_format_cell(cell) for cell in row))
        return '\n'.join(lines) + '\n'

    def to_csv(self):
        return CONFIG_PREFIX + self.config.to_json() + '\n' + \
            self.data_section('csv')

    def to_json(self):
        return json.dumps({'config': json.loads(self.config.to_json()),
                           'tables': [_table_dict(table)
                                      for table in self.tables]},
                          sort_keys=True, allow_nan=False) + '\n'


def _table_dict(table):
    rows = [[_json_cell(cell) for cell in row] for row in table.rows]
    return {'name': table.name, 'columns': table.columns, 'rows': rows}


def _json_cell(cell):
    # JSON has no NaN or Infinity
    if isinstance(cell, float) and not math.isfinite(cell):
        return format_float(cell)
    return cell


def _unjson_cell(cell):
    if isinstance(cell, str) and cell in NON_FINITE:
        return float(cell)
    return cell


def _format_cell(cell):
    if isinstance(cell, bool):
        return str(int(cell))
    if isinstance(cell, int):
        return str(cell)
    if isinstance(cell, float):
        return format_float(cell)
    return str(cell)


def _parse_cell(text):
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return parse_float(text)
    except ValueError:
        return text


def dumps(result, fmt='csv'):
    """ Serialize a result file to a string in 'csv' or 'json' format. """
    if fmt == 'csv':
        return result.to_csv()
    elif fmt == 'json':
        return result.to_json()
    raise ValueError('Unknown format {!r}'.format(fmt))


def write(result, filename, fmt='csv'):
    """ Write a result file.

    The text goes to a temporary file next to `filename` which then replaces
    it, so a failed write leaves any existing file untouched.
    """
    text = dumps(result, fmt)
    directory = os.path.dirname(os.path.abspath(filename))
    temporary = None
    try:
        handle, temporary = tempfile.mkstemp(dir=directory, suffix='.part')
        with os.fdopen(handle, 'w') as f:
            f.write(text)
        mask = os.umask(0)
        os.umask(mask)
        os.chmod(temporary, 0o666 & ~mask)
        os.replace(temporary, filename)
    except OSError as error:
        if temporary is not None and os.path.exists(temporary):
            os.remove(temporary)
        raise OutputFileError('Unable to write {}: {}'.format(filename,
                                                              error))


def read(filename):
    """ Read a result file written by `write`.

    Parameters
    ----------
    filename : string

    Returns
    -------
    result : ResultFile
    """
    with open(filename, 'r') as f:
        data = f.read()
    return loads(data)


def loads(data):
    """ Parse result file contents in either format. """
    text = data.lstrip()
    if text.startswith('{'):
        return _loads_json(text)
    elif text.startswith(CONFIG_PREFIX):
        return _loads_csv(text)
    raise ParseError('Unable to detect result file format')


def _loads_json(text):
    try:
        values = json.loads(text)
        config = RunConfig.from_dict(values['config'])
        tables = [Table(entry['name'], entry['columns'],
                        [[_unjson_cell(cell) for cell in row]
                         for row in entry['rows']])
                  for entry in values['tables']]
    except (KeyError, TypeError, ValueError) as error:
        raise ParseError('Malformed JSON result file: {}'.format(error))
    return ResultFile(config, tables)


def _loads_csv(text):
    lines = text.splitlines()
    try:
        config = RunConfig.from_json(lines[0][len(CONFIG_PREFIX):])
    except (KeyError, TypeError, ValueError) as error:
        raise ParseError('Malformed config line: {}'.format(error))
    tables = []
    table = None
    expect_header = False
    for line in lines[1:]:
        if not line.strip():
            continue
        if line.startswith(TABLE_PREFIX):
            table = None
            name = line[len(TABLE_PREFIX):].strip()
            expect_header = True
        elif expect_header:
            table = Table(name, line.split(','))
            tables.append(table)
            expect_header = False
        elif table is None:
            raise ParseError('Row outside of a table: {!r}'.format(line))
        else:
            table.append([_parse_cell(cell) for cell in line.split(',')])
    return ResultFile(config, tables)
