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
=====================================================
pointfunc.py : point clouds, metrics and data scaling
=====================================================

This module provides the point cloud container and the functions acting on
raw coordinates.

point clouds
------------

- :class:`PointCloud` holds n points in R^d with optional per-point labels
- :func:`as_points` converts a point cloud or an array-like to an (n, d) array

scaling
-------

- :func:`normalize_by_norm` divides every point by its Euclidean norm
- :func:`scale_points` applies one of the :data:`SCALING_MODES`

distances
---------

- :func:`pairwise_distances` gives the Euclidean distance matrix
- :func:`check_distance_matrix` checks the validity of a distance matrix
"""

import numpy as np
from scipy.spatial import distance

#: Norm below which a point is considered to be the zero vector
ZERO_NORM = 1e-12

#: Accepted values for the ``scaling`` keyword
SCALING_MODES = ('per_point_norm', 'none', 'max_norm')

__all__ = ['PointCloud', 'as_points', 'normalize_by_norm', 'scale_points',
           'pairwise_distances', 'check_distance_matrix',
           'ZeroNormPointError', 'SCALING_MODES']


class ZeroNormPointError(ValueError):
    """Raised when a point with (numerically) zero norm has to be scaled."""

    def __init__(self, index):
        self.index = int(index)
        super(ZeroNormPointError, self).__init__(
            'point %d has zero norm and cannot be scaled' % self.index)


class PointCloud(object):
    """A finite sample of points in R^d.

    Parameters
    ----------
    points : array-like, shape (n, d)
      The coordinates, one point per row.
    labels : array-like, shape (n,), optional
      Per-point labels (e.g. the mixture component a point was drawn from).

    Attributes
    ----------
    points
    labels
    n
    d

    Examples
    --------
    >>> pc = PointCloud([[0., 0.], [3., 4.]])
    >>> pc.n, pc.d
    (2, 2)
    """

    def __init__(self, points, labels=None):
        points = np.array(points, dtype=np.float64)
        if points.ndim != 2:
            raise ValueError('points must be a 2-d array of shape (n, d)')
        if points.shape[0] < 1:
            raise ValueError('a point cloud needs at least one point')
        if points.shape[1] < 1:
            raise ValueError('points must have dimension d >= 1')
        if not np.isfinite(points).all():
            raise ValueError('point coordinates must be finite')
        points.flags.writeable = False
        self._points = points
        if labels is not None:
            labels = np.array(labels)
            if labels.shape != (points.shape[0],):
                raise ValueError('labels must have one entry per point')
            labels.flags.writeable = False
        self._labels = labels

    @property
    def points(self):
        """The (n, d) read-only coordinate array."""
        return self._points

    @property
    def labels(self):
        """The per-point labels, or None."""
        return self._labels

    @property
    def n(self):
        return self._points.shape[0]

    @property
    def d(self):
        return self._points.shape[1]

    def __len__(self):
        return self.n

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self._points
        return self._points.astype(dtype)

    def __repr__(self):
        return 'PointCloud(n=%d, d=%d)' % (self.n, self.d)

    def with_points(self, points):
        """Returns a new cloud with the same labels and new coordinates."""
        return PointCloud(points, labels=self._labels)


def as_points(pc):
    """Returns the coordinates of *pc* as a (n, d) float array.

    Parameters
    ----------
    pc : PointCloud or array-like
      The point cloud.

    Returns
    -------
    points : array, shape (n, d)
    """
    if isinstance(pc, PointCloud):
        return pc.points
    return PointCloud(pc).points


def _as_cloud(pc):
    if isinstance(pc, PointCloud):
        return pc
    return PointCloud(pc)


def normalize_by_norm(pc):
    """Divides each point by its Euclidean norm.

    This projects the data on the unit sphere S^(d-1).

    Parameters
    ----------
    pc : PointCloud or array-like
      The input points. None of them may be the zero vector.

    Returns
    -------
    scaled : PointCloud
      The scaled points, all with unit norm.

    Raises
    ------
    ZeroNormPointError
      if a point has a norm below 1e-12.

    Examples
    --------
    >>> normalize_by_norm([[3., 4.]]).points.tolist()
    [[0.6, 0.8]]
    """
    pc = _as_cloud(pc)
    norms = np.linalg.norm(pc.points, axis=1)
    bad = np.flatnonzero(norms < ZERO_NORM)
    if len(bad):
        raise ZeroNormPointError(bad[0])
    return pc.with_points(pc.points / norms[:, np.newaxis])


def scale_points(pc, scaling='per_point_norm'):
    """Applies the preprocessing selected by *scaling*.

    Parameters
    ----------
    pc : PointCloud or array-like
      The input points.
    scaling : {'per_point_norm', 'none', 'max_norm'}
      ``per_point_norm`` divides each point by its own norm (see
      :func:`normalize_by_norm`), ``none`` returns the points unchanged and
      ``max_norm`` divides all points by the largest norm, which keeps the
      shape of the cloud.

    Returns
    -------
    scaled : PointCloud
    """
    pc = _as_cloud(pc)
    if scaling == 'per_point_norm':
        return normalize_by_norm(pc)
    elif scaling == 'none':
        return pc
    elif scaling == 'max_norm':
        norms = np.linalg.norm(pc.points, axis=1)
        top = np.argmax(norms)
        if norms[top] < ZERO_NORM:
            raise ZeroNormPointError(top)
        return pc.with_points(pc.points / norms[top])
    else:
        raise ValueError('scaling must be one of %s, got %r'
                         % (', '.join(SCALING_MODES), scaling))


def pairwise_distances(pc):
    """Euclidean distance matrix of a point cloud.

    Parameters
    ----------
    pc : PointCloud or array-like
      The points.

    Returns
    -------
    dm : array, shape (n, n)
      ``dm[i, j]`` is the distance between points i and j. The matrix is
      exactly symmetric with a zero diagonal.

    Examples
    --------
    >>> pairwise_distances([[0., 0.], [3., 4.]]).tolist()
    [[0.0, 5.0], [5.0, 0.0]]
    """
    points = as_points(pc)
    if points.shape[0] == 1:
        dm = np.zeros((1, 1))
    else:
        dm = distance.squareform(distance.pdist(points, 'euclidean'))
    dm.flags.writeable = False
    return dm


def check_distance_matrix(dm):
    """Checks that *dm* is a valid distance matrix and returns it as an array.

    Parameters
    ----------
    dm : array-like, shape (n, n)

    Returns
    -------
    dm : array, shape (n, n)

    Raises
    ------
    ValueError
      if the matrix is not square, not symmetric, has a nonzero diagonal or
      negative entries.
    """
    dm = np.asarray(dm, dtype=np.float64)
    if dm.ndim != 2 or dm.shape[0] != dm.shape[1]:
        raise ValueError('distance matrix must be square')
    if dm.shape[0] < 1:
        raise ValueError('distance matrix must have at least one row')
    if np.isnan(dm).any():
        raise ValueError('distance matrix contains NaN')
    if (dm < 0).any():
        raise ValueError('distance matrix has negative entries')
    if (np.diagonal(dm) != 0).any():
        raise ValueError('distance matrix must have a zero diagonal')
    if (dm != dm.T).any():
        raise ValueError('distance matrix must be symmetric')
    return dm
