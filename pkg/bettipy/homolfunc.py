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
"""
=================================================
homolfunc.py : simplicial homology over GF(2)
=================================================

Boundary matrices, Betti numbers and persistence diagrams, all with
coefficients in the two-element field. Columns are stored as Python
integers used as bitsets (bit i set means a one in row i), so a column
addition is a single XOR and the lowest one of a column is its
``bit_length() - 1``. No floating point is involved in any rank.

- :class:`GF2Matrix` sparse matrix over GF(2)
- :func:`boundary_matrix` the p-th boundary operator of a complex
- :func:`betti_numbers` Betti vector by rank-nullity
- :func:`reduce_filtration` persistence pairing by column reduction
- :class:`PersistenceDiagram` (dim, birth, death) triples
- :func:`persistent_betti` persistent Betti numbers from a diagram
"""

import numpy as np

from .complexfunc import faces, InvalidFiltrationError

__all__ = ['GF2Matrix', 'PersistenceDiagram', 'boundary_matrix',
           'betti_numbers', 'reduce_filtration', 'persistent_betti',
           'as_betti_vector', 'OrderViolationError']


class OrderViolationError(ValueError):
    """Raised when a pair of filtration values is given in decreasing order."""


def _to_bits(rows):
    bits = 0
    for r in rows:
        bits ^= 1 << r
    return bits


def _from_bits(bits):
    rows = []
    while bits:
        low = bits.bit_length() - 1
        rows.append(low)
        bits ^= 1 << low
    return rows[::-1]


def _reduce_columns(columns, skip=None):
    """Left-to-right column reduction.

    Returns the dict mapping the lowest one of every nonzero reduced column
    to that column's position. Columns whose position is in *skip* are
    known to reduce to zero and are not touched.
    """
    pivots = {}
    lows = {}
    for j, col in enumerate(columns):
        if skip is not None and j in skip:
            continue
        while col:
            low = col.bit_length() - 1
            other = pivots.get(low)
            if other is None:
                pivots[low] = col
                lows[low] = j
                break
            col ^= other
    return lows


class GF2Matrix(object):
    """A matrix over GF(2) stored by columns.

    Parameters
    ----------
    columns : sequence of sequences of int
      The row indices holding a one, for each column.
    nrows : int
      The number of rows.

    Examples
    --------
    >>> m = GF2Matrix([[0, 1], [1, 2], [0, 2]], 3)
    >>> m.shape, m.rank()
    ((3, 3), 2)
    """

    def __init__(self, columns, nrows):
        self.nrows = int(nrows)
        self._columns = []
        for rows in columns:
            rows = sorted(set(int(r) for r in rows))
            if rows and (rows[0] < 0 or rows[-1] >= self.nrows):
                raise ValueError('row index out of range')
            self._columns.append(tuple(rows))
        self._bits = None

    @property
    def shape(self):
        return (self.nrows, len(self._columns))

    @property
    def columns(self):
        """Sorted row supports of the columns."""
        return self._columns

    def bits(self):
        """The columns as integer bitsets."""
        if self._bits is None:
            self._bits = [_to_bits(c) for c in self._columns]
        return self._bits

    def to_dense(self):
        """Returns the matrix as a (nrows, ncols) array of 0 and 1."""
        dense = np.zeros(self.shape, dtype=np.uint8)
        for j, rows in enumerate(self._columns):
            dense[list(rows), j] = 1
        return dense

    def rank(self):
        """Rank over GF(2)."""
        return len(_reduce_columns(self.bits()))

    def __repr__(self):
        return 'GF2Matrix(shape=%r)' % (self.shape,)


def boundary_matrix(sc, p):
    """The boundary operator from p-chains to (p-1)-chains.

    Parameters
    ----------
    sc : SimplicialComplex
      The complex.
    p : int
      Degree, >= 1.

    Returns
    -------
    m : GF2Matrix
      Rows follow ``sc.simplices(p - 1)``, columns ``sc.simplices(p)``; the
      column of a p-simplex has its p+1 faces set.

    Examples
    --------
    >>> from bettipy.complexfunc import SimplicialComplex
    >>> sc = SimplicialComplex.from_simplices([(0, 1, 2)])
    >>> boundary_matrix(sc, 2).columns
    [(0, 1, 2)]
    """
    p = int(p)
    if p < 1:
        raise ValueError('p must be >= 1')
    rows = sc.index(p - 1)
    return GF2Matrix([[rows[f] for f in faces(s)] for s in sc.simplices(p)],
                     len(rows))


def betti_numbers(sc, d):
    """Betti numbers beta_0 ... beta_{d-1} of a complex.

    Computed as ``beta_p = n_p - rank(d_p) - rank(d_{p+1})``. Ranks are
    obtained from the top degree down so that the columns of d_p indexed
    by pivots of d_{p+1} are skipped (they reduce to zero).

    Parameters
    ----------
    sc : SimplicialComplex
      The complex. If it was truncated, it must be built to max_dim >= d.
    d : int
      Length of the returned vector.

    Returns
    -------
    betti : array of int, shape (d,)

    Examples
    --------
    >>> from bettipy.complexfunc import SimplicialComplex
    >>> hollow = SimplicialComplex.from_simplices([(0, 1), (1, 2), (0, 2)])
    >>> betti_numbers(hollow, 2).tolist()
    [1, 1]
    >>> filled = SimplicialComplex.from_simplices([(0, 1, 2)])
    >>> betti_numbers(filled, 2).tolist()
    [1, 0]
    """
    d = int(d)
    if d < 1:
        raise ValueError('d must be >= 1')
    if sc.truncated and sc.max_dim < d:
        raise ValueError('the complex was truncated at dimension %d, '
                         'dimension %d is needed' % (sc.max_dim, d))
    top = min(d, sc.max_dim)
    ranks = [0] * (d + 2)
    cleared = None
    for p in range(top, 0, -1):
        lows = _reduce_columns(boundary_matrix(sc, p).bits(), skip=cleared)
        ranks[p] = len(lows)
        cleared = set(lows)
    betti = [sc.count(p) - ranks[p] - ranks[p + 1] for p in range(d)]
    return np.array(betti, dtype=np.int64)


def as_betti_vector(betti):
    """Returns *betti* as a 1-d array of nonnegative integers."""
    arr = np.asarray(betti)
    if arr.ndim != 1:
        raise ValueError('a Betti vector must be 1-dimensional')
    if arr.size and not np.all(np.equal(np.mod(arr, 1), 0)):
        raise ValueError('Betti numbers must be integers')
    arr = arr.astype(np.int64)
    if (arr < 0).any():
        raise ValueError('Betti numbers must be nonnegative')
    return arr


class PersistenceDiagram(object):
    """Birth and death values of homology classes.

    Parameters
    ----------
    dims : array-like of int
      Homology dimension of every pair.
    births : array-like of float
    deaths : array-like of float
      ``np.inf`` for classes that never die.

    Examples
    --------
    >>> dg = PersistenceDiagram([0, 1], [0., 0.2], [np.inf, 0.9])
    >>> dg.betti_at(1, 0.5)
    1
    """

    def __init__(self, dims, births, deaths):
        dims = np.array(dims, dtype=np.int64).reshape(-1)
        births = np.array(births, dtype=np.float64).reshape(-1)
        deaths = np.array(deaths, dtype=np.float64).reshape(-1)
        if not len(dims) == len(births) == len(deaths):
            raise ValueError('dims, births and deaths must have the same length')
        if (dims < 0).any():
            raise ValueError('dimensions must be >= 0')
        if np.isnan(births).any() or np.isnan(deaths).any():
            raise ValueError('births and deaths must not be NaN')
        if not np.isfinite(births).all():
            raise ValueError('births must be finite')
        if (births > deaths).any():
            raise ValueError('every pair must have birth <= death')
        order = np.lexsort((deaths, births, dims))
        self._dims = dims[order]
        self._births = births[order]
        self._deaths = deaths[order]
        for arr in (self._dims, self._births, self._deaths):
            arr.flags.writeable = False

    @property
    def dims(self):
        return self._dims

    @property
    def births(self):
        return self._births

    @property
    def deaths(self):
        return self._deaths

    def __len__(self):
        return len(self._dims)

    def __iter__(self):
        for p, b, e in zip(self._dims, self._births, self._deaths):
            yield int(p), float(b), float(e)

    def __eq__(self, other):
        if not isinstance(other, PersistenceDiagram):
            return NotImplemented
        return (np.array_equal(self._dims, other._dims)
                and np.array_equal(self._births, other._births)
                and np.array_equal(self._deaths, other._deaths))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __repr__(self):
        return 'PersistenceDiagram(%d pairs)' % len(self)

    def restrict(self, dim):
        """The sub-diagram of the pairs of dimension *dim*."""
        keep = self._dims == dim
        return PersistenceDiagram(self._dims[keep], self._births[keep],
                                  self._deaths[keep])

    def pairs(self, dim=None, finite=False):
        """Returns the (birth, death) pairs as a (m, 2) array.

        Parameters
        ----------
        dim : int, optional
          Keep only this homology dimension.
        finite : bool, optional
          Drop the classes with infinite death.
        """
        keep = np.ones(len(self), dtype=bool)
        if dim is not None:
            keep &= self._dims == dim
        if finite:
            keep &= np.isfinite(self._deaths)
        return np.column_stack((self._births[keep], self._deaths[keep]))

    def betti_at(self, p, t):
        """Number of p-classes alive at t (birth <= t < death)."""
        alive = (self._dims == p) & (self._births <= t) & (t < self._deaths)
        return int(np.count_nonzero(alive))

    def num_essential(self, p=None):
        """Number of classes with infinite death."""
        keep = np.isinf(self._deaths)
        if p is not None:
            keep &= self._dims == p
        return int(np.count_nonzero(keep))


def _check_filtration(fc):
    index = fc.index()
    values = fc.values
    for i, s in enumerate(fc.simplices):
        if len(set(s)) != len(s) or list(s) != sorted(s):
            raise InvalidFiltrationError(i, 'vertices of %r are not '
                                         'strictly increasing' % (s,))
        if len(s) < 2:
            continue
        for f in faces(s):
            j = index.get(f)
            if j is None:
                raise InvalidFiltrationError(i, 'face %r of %r is missing'
                                             % (f, s))
            if j > i:
                raise InvalidFiltrationError(i, '%r precedes its face %r'
                                             % (s, f))
            if values[j] > values[i]:
                raise InvalidFiltrationError(i, '%r has a smaller value than '
                                             'its face %r' % (s, f))


def reduce_filtration(fc):
    """Persistence diagram of a filtered complex.

    Standard column reduction of the filtration boundary matrix, one
    dimension at a time from the top down, with clearing. A pair is
    recorded for every reduced column (zero-length pairs included); the
    remaining creators have an infinite death.

    Parameters
    ----------
    fc : FilteredComplex
      The filtration. Every simplex must come after its faces.

    Returns
    -------
    diagram : PersistenceDiagram

    Raises
    ------
    InvalidFiltrationError
      if a simplex precedes one of its faces.

    Examples
    --------
    >>> from bettipy.complexfunc import FilteredComplex
    >>> fc = FilteredComplex([(0,), (1,), (0, 1)], [0., 0., 1.])
    >>> list(reduce_filtration(fc))
    [(0, 0.0, 1.0), (0, 0.0, inf)]
    """
    _check_filtration(fc)
    simplices = fc.simplices
    values = fc.values
    top = fc.max_dim
    # positions of the simplices of every dimension, in filtration order
    by_dim = [[] for _ in range(top + 1)]
    local = {}
    for i, s in enumerate(simplices):
        p = len(s) - 1
        local[s] = len(by_dim[p])
        by_dim[p].append(i)

    dims, births, deaths = [], [], []
    killed = [set() for _ in range(top + 1)]
    for p in range(top, 0, -1):
        columns = [_to_bits(local[f] for f in faces(simplices[i]))
                   for i in by_dim[p]]
        lows = _reduce_columns(columns, skip=killed[p])
        for low, j in lows.items():
            killed[p - 1].add(low)
            dims.append(p - 1)
            births.append(values[by_dim[p - 1][low]])
            deaths.append(values[by_dim[p][j]])
        # columns with a pivot are deaths, they create nothing
        killed[p].update(lows.values())
    for p in range(top + 1):
        for j, i in enumerate(by_dim[p]):
            if j not in killed[p]:
                dims.append(p)
                births.append(values[i])
                deaths.append(np.inf)
    return PersistenceDiagram(dims, births, deaths)


def persistent_betti(diagram, p, eps, eps2):
    """Persistent Betti number: p-classes born by *eps* still alive after *eps2*.

    Parameters
    ----------
    diagram : PersistenceDiagram
    p : int
      Homology dimension.
    eps, eps2 : float
      Filtration values with eps <= eps2.

    Returns
    -------
    count : int
      Number of dim-p pairs with birth <= eps and death > eps2.

    Raises
    ------
    OrderViolationError
      if eps > eps2.

    Examples
    --------
    >>> dg = PersistenceDiagram([1], [0.2], [0.9])
    >>> persistent_betti(dg, 1, 0.3, 0.8), persistent_betti(dg, 1, 0.3, 0.95)
    (1, 0)
    """
    if eps > eps2:
        raise OrderViolationError('eps = %g must not exceed eps2 = %g'
                                  % (eps, eps2))
    alive = ((diagram.dims == p) & (diagram.births <= eps)
             & (diagram.deaths > eps2))
    return int(np.count_nonzero(alive))
