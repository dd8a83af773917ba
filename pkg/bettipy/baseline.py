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
=========================================================
baseline.py : persistence based two-sample tests
=========================================================

Three permutation tests on Rips persistence diagrams, used as baselines for
the Betti number tests:

- ``robinson`` joint Wasserstein loss summed over dimensions 0 and ``dim``
- ``landscape`` difference of the grid means of the first landscapes
- ``permutation`` Wasserstein loss in dimension ``dim``

Functions
---------

- :func:`persistence_diagram` Rips persistence of a point cloud
- :func:`wasserstein_distance` optimal matching distance of two diagrams
- :func:`landscape`, :func:`mean_landscape` persistence landscapes
- :func:`permutation_two_sample_test` the test itself
- :func:`baseline_power` rejection rate of a baseline over replications
"""

import sys
from functools import partial
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator
from scipy.optimize import linear_sum_assignment
from scipy.spatial.distance import cdist

from .cookbook import map_replications, replication_rng, sample_sizes
from .pointfunc import PointCloud, scale_points
from .complexfunc import build_rips_filtration
from .homolfunc import reduce_filtration, PersistenceDiagram
from .statfunc import PowerEstimate, _draw, _resolve

__all__ = ['LandscapeFunction', 'PermutationTestResult', 'LOSSES', 'METHODS',
           'persistence_diagram', 'wasserstein_distance', 'landscape',
           'mean_landscape', 'landscape_grid', 'permutation_two_sample_test',
           'baseline_power']

LOSSES = ('wasserstein_joint', 'mean_landscape_diff', 'wasserstein_plain')

#: Loss used by each baseline
METHODS = {'robinson': 'wasserstein_joint',
           'landscape': 'mean_landscape_diff',
           'permutation': 'wasserstein_plain'}


def persistence_diagram(pc, max_threshold=4., max_dim=2):
    """Persistence diagram of the Rips filtration of a point cloud.

    Parameters
    ----------
    pc : PointCloud or array-like
    max_threshold : float, optional
      Largest simplex diameter in the filtration.
    max_dim : int, optional
      Largest simplex dimension; homology is meaningful below it.

    Returns
    -------
    diagram : PersistenceDiagram
    """
    if not isinstance(pc, PointCloud):
        pc = PointCloud(pc)
    return reduce_filtration(build_rips_filtration(pc, max_threshold,
                                                   max_dim=max_dim))


def _finite_pairs(diagram, dim):
    if isinstance(diagram, PersistenceDiagram):
        if dim is None and len(np.unique(diagram.dims)) > 1:
            raise ValueError('dim is required for a diagram holding '
                             'several homology dimensions')
        return diagram.pairs(dim=dim, finite=True)
    pairs = np.asarray(diagram, dtype=np.float64).reshape(-1, 2)
    return pairs[np.isfinite(pairs[:, 1])]


def wasserstein_distance(a, b, p=1., q=1., dim=None):
    """Wasserstein distance between two persistence diagrams.

    Points of one diagram are matched to points of the other or to their
    projection on the diagonal, with the L-infinity ground distance (the
    distance of (b, d) to the diagonal is (d - b) / 2). The optimal matching
    of the augmented square cost matrix is found by the Hungarian method.

    Parameters
    ----------
    a, b : PersistenceDiagram or array-like of shape (m, 2)
      The diagrams. Pairs with an infinite death are ignored.
    p : float, optional
      Order of the distance, >= 1.
    q : float, optional
      The result is raised to q / p, so p = q = 1 gives the plain matching
      cost.
    dim : int, optional
      Homology dimension to keep (required for PersistenceDiagram inputs
      holding several dimensions).

    Returns
    -------
    distance : float

    Raises
    ------
    ValueError
      if dim is None and a PersistenceDiagram holds several dimensions.

    Examples
    --------
    >>> wasserstein_distance([[0., 2.]], np.empty((0, 2)))
    1.0
    >>> wasserstein_distance([[0., 2.]], [[0., 2.]])
    0.0
    """
    if p < 1 or q < 1:
        raise ValueError('p and q must be >= 1')
    x = _finite_pairs(a, dim)
    y = _finite_pairs(b, dim)
    m, n = len(x), len(y)
    if m == 0 and n == 0:
        return 0.
    diag_x = (x[:, 1] - x[:, 0]) / 2.
    diag_y = (y[:, 1] - y[:, 0]) / 2.
    cost = np.zeros((m + n, m + n))
    if m and n:
        cost[:m, :n] = cdist(x, y, metric='chebyshev') ** p
    # a point may only go to its own diagonal projection
    forbidden = 1. + cost.sum() + (diag_x ** p).sum() + (diag_y ** p).sum()
    upper = np.full((m, m), forbidden)
    np.fill_diagonal(upper, diag_x ** p)
    cost[:m, n:] = upper
    lower = np.full((n, n), forbidden)
    np.fill_diagonal(lower, diag_y ** p)
    cost[m:, :n] = lower
    rows, cols = linear_sum_assignment(cost)
    total = float(cost[rows, cols].sum())
    return total ** (q / p)


def landscape_grid(max_threshold=4., size=1000):
    """``size`` equally spaced points on [0, max_threshold]."""
    return np.linspace(0., max_threshold, int(size))


class LandscapeFunction(object):
    """The k-th persistence landscape sampled on a grid.

    Parameters
    ----------
    k : int
      Landscape index, >= 1.
    grid : array-like
      Increasing sample points.
    values : array-like
      Nonnegative values at the grid points.
    """

    def __init__(self, k, grid, values):
        self.k = int(k)
        if self.k < 1:
            raise ValueError('k must be >= 1')
        grid = np.array(grid, dtype=np.float64)
        values = np.array(values, dtype=np.float64)
        if grid.ndim != 1 or grid.shape != values.shape:
            raise ValueError('grid and values must be 1-d of the same length')
        if (np.diff(grid) < 0).any():
            raise ValueError('grid must be sorted')
        if (values < 0).any():
            raise ValueError('landscape values must be nonnegative')
        grid.flags.writeable = False
        values.flags.writeable = False
        self.grid = grid
        self.values = values

    def mean(self):
        """Average of the values over the grid."""
        return float(self.values.mean()) if len(self.values) else 0.

    def __repr__(self):
        return 'LandscapeFunction(k=%d, %d grid points)' % (self.k, len(self.grid))


def landscape(diagram, k, grid, dim=None):
    """k-th persistence landscape of a diagram.

    lambda_k(t) is the k-th largest of the tents
    max(0, min(t - b, d - t)) over the finite pairs (b, d), and 0 where
    fewer than k tents are positive.

    Parameters
    ----------
    diagram : PersistenceDiagram or array-like of shape (m, 2)
    k : int
      Landscape index, >= 1.
    grid : array-like
      Sample points.
    dim : int, optional
      Homology dimension to keep.

    Returns
    -------
    lk : LandscapeFunction

    Examples
    --------
    >>> landscape([[0., 2.]], 1, [0., 1., 2.]).values.tolist()
    [0.0, 1.0, 0.0]
    """
    if int(k) < 1:
        raise ValueError('k must be >= 1')
    grid = np.asarray(grid, dtype=np.float64)
    pairs = _finite_pairs(diagram, dim)
    if len(pairs) < k:
        return LandscapeFunction(k, grid, np.zeros(len(grid)))
    tents = np.minimum(grid[np.newaxis, :] - pairs[:, :1],
                       pairs[:, 1:] - grid[np.newaxis, :])
    tents = np.maximum(tents, 0.)
    tents = -np.sort(-tents, axis=0)
    return LandscapeFunction(k, grid, tents[k - 1])


def mean_landscape(diagrams, k, grid, dim=None):
    """Pointwise mean of the k-th landscapes of several diagrams."""
    diagrams = list(diagrams)
    if not diagrams:
        raise ValueError('at least one diagram is needed')
    values = np.mean([landscape(dg, k, grid, dim=dim).values
                      for dg in diagrams], axis=0)
    return LandscapeFunction(k, grid, values)


class PermutationTestResult(BaseModel):
    """Outcome of a permutation test."""
    model_config = ConfigDict(frozen=True)

    loss: str
    observed_loss: float
    permutation_losses: List[float]
    p_value: float
    n_permutations: int
    seed: int

    @model_validator(mode='after')
    def _check_p_value(self):
        if len(self.permutation_losses) != self.n_permutations:
            raise ValueError('one loss per permutation is required')
        exceed = sum(1 for v in self.permutation_losses
                     if v >= self.observed_loss)
        if self.p_value != (1. + exceed) / (1. + self.n_permutations):
            raise ValueError('p_value must equal (1 + #exceed) / (1 + n_permutations)')
        return self


def _sorted_rows(points):
    return points[np.lexsort(points.T[::-1])]


def _loss(x, y, loss, max_threshold, dim, p, q, grid):
    # the loss is evaluated on a canonical ordering of the pair
    x, y = _sorted_rows(x), _sorted_rows(y)
    if (len(y), y.tobytes()) < (len(x), x.tobytes()):
        x, y = y, x
    dx = persistence_diagram(x, max_threshold, dim + 1)
    dy = persistence_diagram(y, max_threshold, dim + 1)
    if loss == 'wasserstein_joint':
        dims = sorted(set((0, dim)))
        return sum(wasserstein_distance(dx, dy, p, q, dim=k) for k in dims)
    elif loss == 'wasserstein_plain':
        return wasserstein_distance(dx, dy, p, q, dim=dim)
    return abs(landscape(dx, 1, grid, dim=dim).mean()
               - landscape(dy, 1, grid, dim=dim).mean())


def _permutation_loss(index, points, n1, seed, **kwds):
    perm = replication_rng(seed, index).permutation(len(points))
    return _loss(points[perm[:n1]], points[perm[n1:]], **kwds)


def permutation_two_sample_test(x, y, loss='wasserstein_joint', n_perm=30,
                                max_threshold=4., dim=1, seed=0, p=1., q=1.,
                                grid_size=1000, threads=1):
    """Permutation test comparing the persistence of two samples.

    The loss is computed on the original split, then on n_perm random
    relabelings of the pooled points that keep the group sizes. The p-value
    is (1 + #{permutation losses >= observed}) / (1 + n_perm).
    The pooled points are split in lexicographic row order, so swapping two
    samples of equal size gives the same result.

    Parameters
    ----------
    x, y : PointCloud or array-like
      The samples.
    loss : {'wasserstein_joint', 'mean_landscape_diff', 'wasserstein_plain'}
      The loss between the two diagrams.
    n_perm : int, optional
      Number of permutations, >= 1.
    max_threshold : float, optional
      Largest diameter of the Rips filtrations.
    dim : int, optional
      Homology dimension.
    seed : int, optional
      Permutation i uses a generator seeded with seed + i.
    p, q : float, optional
      Wasserstein orders, see :func:`wasserstein_distance`.
    grid_size : int, optional
      Landscape grid size on [0, max_threshold].
    threads : int, optional
      Worker processes for the permutations.

    Returns
    -------
    result : PermutationTestResult
    """
    if loss not in LOSSES:
        raise ValueError('loss must be one of %s, got %r'
                         % (', '.join(LOSSES), loss))
    if n_perm < 1:
        raise ValueError('n_perm must be >= 1')
    x = x.points if isinstance(x, PointCloud) else PointCloud(x).points
    y = y.points if isinstance(y, PointCloud) else PointCloud(y).points
    if x.shape[1] != y.shape[1]:
        raise ValueError('the samples live in different dimensions')
    kwds = dict(loss=loss, max_threshold=max_threshold, dim=int(dim), p=p, q=q,
                grid=landscape_grid(max_threshold, grid_size))
    observed = _loss(x, y, **kwds)
    pooled = _sorted_rows(np.vstack((x, y)))
    worker = partial(_permutation_loss, points=pooled, n1=len(x), seed=seed,
                     **kwds)
    losses = map_replications(worker, range(n_perm), threads)
    exceed = sum(1 for v in losses if v >= observed)
    return PermutationTestResult(loss=loss, observed_loss=observed,
                                 permutation_losses=losses,
                                 p_value=(1. + exceed) / (1. + n_perm),
                                 n_permutations=n_perm, seed=seed)


def _baseline_replicate(index, first, second, n1, n2, seed, scaling, **kwds):
    rng = replication_rng(seed, index)
    x = scale_points(_draw(first, n1, rng), scaling)
    y = scale_points(_draw(second, n2, rng), scaling)
    perm_seed = int(rng.integers(2 ** 31))
    return permutation_two_sample_test(x, y, seed=perm_seed, **kwds).p_value


def baseline_power(method, sampler1, sampler2, n=100, r=10, alpha=0.05,
                   seed=0, n_perm=30, max_threshold=4., dim=1,
                   scaling='none', grid_size=1000, threads=1, verbose=False):
    """Rejection rate of a baseline test between two distributions.

    Replication i draws the two samples from the generator seeded with
    seed + i and rejects when the permutation p-value is at most alpha.

    Parameters
    ----------
    method : {'robinson', 'landscape', 'permutation'}
      The baseline, see :data:`METHODS`.
    sampler1, sampler2 : DistributionSpec, preset name, dict or callable
    n : int or pair of int
      Sample sizes.
    r : int, optional
      Replications (10 in the simulation study).
    alpha, seed, n_perm, max_threshold, dim, grid_size
      Test settings.
    scaling : str, optional
      Preprocessing applied to both samples.
    threads : int, optional
      Worker processes for the replications.
    verbose : bool, optional

    Returns
    -------
    estimate : PowerEstimate
      The p-values are stored as ``alt_statistics``; ``critical_value`` is
      alpha.
    """
    if method not in METHODS:
        raise ValueError('method must be one of %s, got %r'
                         % (', '.join(sorted(METHODS)), method))
    if r < 1:
        raise ValueError('r must be >= 1')
    n1, n2 = sample_sizes(n)
    worker = partial(_baseline_replicate, first=_resolve(sampler1),
                     second=_resolve(sampler2), n1=n1, n2=n2, seed=seed,
                     scaling=scaling, loss=METHODS[method], n_perm=n_perm,
                     max_threshold=max_threshold, dim=dim,
                     grid_size=grid_size)
    p_values = map_replications(worker, range(r), threads)
    rejections = sum(1 for pv in p_values if pv <= alpha)
    estimate = PowerEstimate(power=rejections / r, rejections=rejections,
                             r=r, alpha=alpha, n=n1, n2=n2, seed=seed,
                             method=method, critical_value=alpha,
                             null_statistics=[], alt_statistics=p_values)
    if verbose:
        print('%s power at n = (%d, %d): %g' % (method, n1, n2, estimate.power),
              file=sys.stderr)
    return estimate
