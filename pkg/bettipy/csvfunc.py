#
#  This file is part of bettipy.
#
#  bettipy is free software; you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation; either version 2 of the License, or
#  (at your option) any later version.
#
#  bettipy is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with bettipy; if not, write to the Free Software
#  Foundation, Inc., 51 Franklin St, Fifth Floor, Boston, MA  02110-1301  USA
#
"""Provides input and output functions for point clouds, diagrams, power
tables and reports.

Point clouds are plain CSV files (one point per row). Tables go through
:mod:`astropy.table` in the ``ascii.csv`` format; infinite deaths are
written as ``inf``. Reports are JSON documents.
"""

import csv
import os

import numpy as np
from astropy.table import Table

from .pointfunc import PointCloud
from .homolfunc import PersistenceDiagram
from .statfunc import TestReport

__all__ = ['load_point_cloud', 'write_point_cloud', 'read_diagram',
           'write_diagram', 'read_power_table', 'write_power_table',
           'read_report', 'write_report', 'write_table', 'ParseError',
           'EmptyFileError', 'POWER_COLUMNS']

#: Columns of a power table, in order
POWER_COLUMNS = ('scenario', 'method', 'regime', 'n', 'r', 'alpha', 'power',
                 'seed')


class ParseError(ValueError):
    """Raised on a malformed row of a point cloud file.

    Attributes
    ----------
    line : int
      The 1-based line number of the row.
    """

    def __init__(self, line, message):
        self.line = int(line)
        super(ParseError, self).__init__('line %d: %s' % (self.line, message))


class EmptyFileError(ValueError):
    """Raised when a point cloud file holds no point."""

    def __init__(self, path):
        self.path = path
        super(EmptyFileError, self).__init__('%s: no data rows' % (path,))


def _check_overwrite(filename, overwrite):
    if not overwrite and os.path.exists(filename):
        raise OSError('File %s already exists. Use overwrite=True to replace it.'
                      % filename)


def load_point_cloud(filename, format='csv', header=False):
    """Reads a point cloud, one point per row.

    Parameters
    ----------
    filename : str
      The file name.
    format : {'csv'}
      The file format; only comma separated values are supported.
    header : bool, optional
      If True, the first line is a header and is skipped.

    Returns
    -------
    pc : PointCloud

    Raises
    ------
    ParseError
      on a non-numeric, non-finite or ragged row (with its line number).
    EmptyFileError
      if the file has no data row.
    """
    if format != 'csv':
        raise ValueError('unsupported point cloud format %r' % (format,))
    rows = []
    ncols = None
    with open(filename, newline='') as f:
        for lineno, row in enumerate(csv.reader(f), start=1):
            if header and lineno == 1:
                continue
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                values = [float(cell) for cell in row]
            except ValueError:
                raise ParseError(lineno, 'non-numeric value in %r' % (','.join(row),))
            if not np.isfinite(values).all():
                raise ParseError(lineno, 'non-finite value')
            if ncols is None:
                ncols = len(values)
            elif len(values) != ncols:
                raise ParseError(lineno, 'expected %d columns, got %d'
                                 % (ncols, len(values)))
            rows.append(values)
    if not rows:
        raise EmptyFileError(filename)
    return PointCloud(rows)


def write_point_cloud(filename, pc, header=None, overwrite=False):
    """Writes a point cloud in the format read by :func:`load_point_cloud`.

    Parameters
    ----------
    filename : str
    pc : PointCloud or array-like
    header : sequence of str, optional
      Column names written as a first line.
    overwrite : bool, optional
      If True, existing file is silently overwritten. Otherwise trying to
      write an existing file raises an OSError.
    """
    points = pc.points if isinstance(pc, PointCloud) else PointCloud(pc).points
    _check_overwrite(filename, overwrite)
    np.savetxt(filename, points, fmt='%.17g', delimiter=',',
               header=','.join(header) if header else '', comments='')


def write_table(filename, table, overwrite=False):
    """Writes an astropy table as CSV."""
    _check_overwrite(filename, overwrite)
    table.write(filename, format='ascii.csv', overwrite=True)


def _float_column(col):
    return np.array([float(v) for v in col], dtype=np.float64)


def write_diagram(filename, diagram, overwrite=False):
    """Writes a persistence diagram with columns ``dim,birth,death``."""
    table = Table([diagram.dims, diagram.births, diagram.deaths],
                  names=('dim', 'birth', 'death'))
    write_table(filename, table, overwrite=overwrite)


def read_diagram(filename):
    """Reads a diagram written by :func:`write_diagram`.

    Returns
    -------
    diagram : PersistenceDiagram
    """
    table = Table.read(filename, format='ascii.csv')
    if len(table) == 0:
        return PersistenceDiagram([], [], [])
    return PersistenceDiagram(np.asarray(table['dim'], dtype=np.int64),
                              _float_column(table['birth']),
                              _float_column(table['death']))


def write_power_table(filename, rows, overwrite=False):
    """Writes power estimates, one row per (scenario, method, n).

    Parameters
    ----------
    filename : str
    rows : sequence of dict
      Each with the keys of :data:`POWER_COLUMNS`.
    overwrite : bool, optional
    """
    rows = list(rows)
    table = Table(rows=[[row[c] for c in POWER_COLUMNS] for row in rows]
                  if rows else None, names=POWER_COLUMNS,
                  dtype=(str, str, str, int, int, float, float, int))
    write_table(filename, table, overwrite=overwrite)


def read_power_table(filename):
    """Reads a power table as a list of dicts with typed values."""
    table = Table.read(filename, format='ascii.csv')
    missing = [c for c in POWER_COLUMNS if c not in table.colnames]
    if missing:
        raise ValueError('%s: missing columns %s' % (filename, ', '.join(missing)))
    casts = (str, str, str, int, int, float, float, int)
    return [dict((c, cast(row[c])) for c, cast in zip(POWER_COLUMNS, casts))
            for row in table]


def write_report(filename, report, overwrite=False):
    """Writes a pydantic report (TestReport, PowerEstimate, ...) as JSON."""
    _check_overwrite(filename, overwrite)
    with open(filename, 'w') as f:
        f.write(report.model_dump_json(indent=2))
        f.write('\n')


def read_report(filename, model=TestReport):
    """Reads a JSON report into an instance of *model*."""
    with open(filename) as f:
        return model.model_validate_json(f.read())
