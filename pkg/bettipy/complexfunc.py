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
=======================================================
complexfunc.py : simplicial complexes built from points
=======================================================

Simplices are tuples of strictly increasing vertex indices; a vertex is a
1-tuple. The ball-radius convention is used throughout: a Rips complex at
radius ``epsilon`` joins two points when their distance is at most
``2*epsilon``, and the Rips filtration indexes simplices by their diameter
(that is ``2*epsilon``).

complexes
---------

- :class:`SimplicialComplex` simplices grouped by dimension
- :class:`FilteredComplex` simplices sorted by filtration value
- :func:`build_rips` Vietoris-Rips complex at a ball radius
- :func:`build_collapsed_rips` Rips complex after removal of dominated vertices
- :func:`build_cech` Cech complex at a ball radius (d <= 3)
- :func:`build_rips_filtration` Rips filtration up to a maximal diameter

connectivity
------------

- :class:`UnionFind` disjoint sets with path compression
- :func:`connected_components` number of components of the 1-skeleton
- :func:`is_connected` whether the 1-skeleton is connected
- :func:`strong_collapse` dominated vertex removal on a graph
- :func:`minimal_enclosing_radius` radius of the smallest enclosing ball
"""

import itertools

import numpy as np

from .pointfunc import PointCloud, as_points, pairwise_distances, check_distance_matrix

__all__ = ['SimplicialComplex', 'FilteredComplex', 'UnionFind',
           'build_rips', 'build_collapsed_rips', 'build_cech',
           'build_rips_filtration', 'is_connected', 'connected_components',
           'strong_collapse', 'minimal_enclosing_radius', 'faces',
           'UnsupportedDimensionError', 'InvalidFiltrationError']

#: Largest ambient dimension handled by :func:`build_cech`
MAX_CECH_DIM = 3


class UnsupportedDimensionError(ValueError):
    """Raised when a construction is asked for an ambient dimension it
    does not support."""

    def __init__(self, dim):
        self.dim = int(dim)
        super(UnsupportedDimensionError, self).__init__(
            'Cech complexes are only available for d <= %d, got d = %d'
            % (MAX_CECH_DIM, self.dim))


class InvalidFiltrationError(ValueError):
    """Raised when a simplex of a filtration precedes one of its faces."""

    def __init__(self, index, message):
        self.index = int(index)
        super(InvalidFiltrationError, self).__init__(
            'invalid filtration at position %d: %s' % (self.index, message))


def faces(simplex):
    """Returns the codimension one faces of a simplex, in lexicographic order.

    Examples
    --------
    >>> faces((0, 1, 2))
    [(0, 1), (0, 2), (1, 2)]
    """
    return list(itertools.combinations(simplex, len(simplex) - 1))


class SimplicialComplex(object):
    """A finite abstract simplicial complex.

    Parameters
    ----------
    simplices : sequence of sequences of tuples
      ``simplices[p]`` lists the p-simplices, each a strictly increasing
      tuple of vertex indices.
    max_dim : int
      The maximal simplex dimension the complex was built to.
    truncated : bool, optional
      True if simplices above *max_dim* were discarded by the construction
      (default), False if the complex is complete.

    See Also
    --------
    SimplicialComplex.from_simplices, build_rips, build_cech
    """

    def __init__(self, simplices, max_dim, truncated=True):
        max_dim = int(max_dim)
        if max_dim < 0:
            raise ValueError('max_dim must be >= 0')
        simplices = [list(s) for s in simplices]
        if len(simplices) > max_dim + 1:
            if any(simplices[max_dim + 1:]):
                raise ValueError('simplices above max_dim were given')
            simplices = simplices[:max_dim + 1]
        simplices += [[] for _ in range(max_dim + 1 - len(simplices))]
        self._simplices = simplices
        self._max_dim = max_dim
        self._truncated = bool(truncated)
        self._index = {}

    @classmethod
    def from_simplices(cls, simplices, max_dim=None):
        """Builds the smallest complex containing the given simplices.

        Parameters
        ----------
        simplices : iterable of sequences of int
          Any simplices; they are sorted and all their faces are added.
        max_dim : int, optional
          If given, simplices of higher dimension are dropped and the complex
          is flagged as truncated.

        Examples
        --------
        >>> sc = SimplicialComplex.from_simplices([(0, 1, 2)])
        >>> sc.f_vector()
        [3, 3, 1]
        """
        closed = set()
        for s in simplices:
            s = tuple(sorted(int(v) for v in s))
            if len(set(s)) != len(s) or len(s) == 0:
                raise ValueError('invalid simplex %r' % (s,))
            if s in closed:
                continue
            for k in range(1, len(s) + 1):
                closed.update(itertools.combinations(s, k))
        top = max([len(s) - 1 for s in closed] + [0])
        truncated = max_dim is not None
        if max_dim is None:
            max_dim = top
        grouped = [[] for _ in range(max_dim + 1)]
        for s in closed:
            if len(s) - 1 <= max_dim:
                grouped[len(s) - 1].append(s)
        return cls([sorted(g) for g in grouped], max_dim, truncated=truncated)

    @property
    def max_dim(self):
        """The maximal dimension the complex was built to."""
        return self._max_dim

    @property
    def truncated(self):
        """Whether simplices above :attr:`max_dim` were discarded."""
        return self._truncated

    @property
    def dimension(self):
        """The largest dimension holding at least one simplex (-1 if empty)."""
        for p in range(self._max_dim, -1, -1):
            if self._simplices[p]:
                return p
        return -1

    def simplices(self, p):
        """The list of p-simplices (empty outside 0..max_dim)."""
        if p < 0 or p > self._max_dim:
            return []
        return self._simplices[p]

    def count(self, p):
        return len(self.simplices(p))

    @property
    def vertices(self):
        """Vertex indices, increasing."""
        return [s[0] for s in self._simplices[0]]

    def index(self, p):
        """Returns a dict mapping each p-simplex to its position."""
        if p not in self._index:
            self._index[p] = dict((s, i) for i, s in enumerate(self.simplices(p)))
        return self._index[p]

    def f_vector(self):
        """Number of simplices in each dimension 0..max_dim."""
        return [len(s) for s in self._simplices]

    def euler_characteristic(self):
        return sum((-1) ** p * len(s) for p, s in enumerate(self._simplices))

    def is_closed(self):
        """True if every face of every simplex belongs to the complex."""
        for p in range(1, self._max_dim + 1):
            lower = self.index(p - 1)
            for s in self._simplices[p]:
                if any(f not in lower for f in faces(s)):
                    return False
        return True

    def __contains__(self, simplex):
        simplex = tuple(simplex)
        return simplex in self.index(len(simplex) - 1)

    def __iter__(self):
        return itertools.chain.from_iterable(self._simplices)

    def __len__(self):
        return sum(self.f_vector())

    def __repr__(self):
        return 'SimplicialComplex(f_vector=%r)' % (self.f_vector(),)


class FilteredComplex(object):
    """Simplices with filtration values.

    Parameters
    ----------
    simplices : sequence of tuples
      The simplices.
    values : array-like
      The filtration value of each simplex (nonnegative).
    sort : bool, optional
      If True (default), sort by (value, dimension, vertices). If False the
      given order is kept; :func:`~bettipy.homolfunc.reduce_filtration`
      checks that it is a valid filtration order.
    """

    def __init__(self, simplices, values, sort=True):
        simplices = [tuple(int(v) for v in s) for s in simplices]
        values = np.array(values, dtype=np.float64).reshape(-1)
        if len(values) != len(simplices):
            raise ValueError('one filtration value per simplex is required')
        if len(values) and not (values >= 0).all():
            raise ValueError('filtration values must be nonnegative')
        if sort:
            order = sorted(range(len(simplices)),
                           key=lambda i: (values[i], len(simplices[i]), simplices[i]))
            simplices = [simplices[i] for i in order]
            values = values[order]
        values.flags.writeable = False
        self._simplices = simplices
        self._values = values
        self._dims = np.array([len(s) - 1 for s in simplices], dtype=np.int64)
        self._index = None

    @property
    def simplices(self):
        return self._simplices

    @property
    def values(self):
        return self._values

    @property
    def dims(self):
        return self._dims

    @property
    def max_dim(self):
        return int(self._dims.max()) if len(self._dims) else 0

    def index(self):
        """Returns a dict mapping each simplex to its position."""
        if self._index is None:
            self._index = dict((s, i) for i, s in enumerate(self._simplices))
        return self._index

    def prefix(self, t, max_dim=None):
        """The subcomplex of the simplices with value <= t.

        Parameters
        ----------
        t : float
          The filtration value.
        max_dim : int, optional
          Recorded as the truncation dimension of the result (default: the
          largest dimension of the filtration).
        """
        if max_dim is None:
            max_dim = self.max_dim
        keep = [s for s, v in zip(self._simplices, self._values) if v <= t]
        return SimplicialComplex.from_simplices(keep, max_dim=max_dim)

    def __len__(self):
        return len(self._simplices)

    def __iter__(self):
        return zip(self._simplices, self._values)

    def __repr__(self):
        return 'FilteredComplex(%d simplices)' % len(self)


class UnionFind(object):
    """Disjoint sets over 0..size-1, with path compression and union by size.

    Examples
    --------
    >>> uf = UnionFind(3)
    >>> uf.union(0, 1)
    True
    >>> uf.num_components
    2
    """

    def __init__(self, size):
        self.parents = list(range(size))
        self.sizes = [1] * size
        self.num_components = size

    def find(self, elem):
        root = elem
        while root != self.parents[root]:
            root = self.parents[root]
        while elem != root:
            self.parents[elem], elem = root, self.parents[elem]
        return root

    def union(self, a, b):
        """Merges the sets of a and b; returns False if already merged."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.sizes[ra] < self.sizes[rb]:
            ra, rb = rb, ra
        self.parents[rb] = ra
        self.sizes[ra] += self.sizes[rb]
        self.num_components -= 1
        return True


def connected_components(sc):
    """Number of connected components of the 1-skeleton of *sc*."""
    vindex = sc.index(0)
    uf = UnionFind(len(vindex))
    for a, b in sc.simplices(1):
        uf.union(vindex[(a,)], vindex[(b,)])
    return uf.num_components


def is_connected(sc):
    """Whether the 1-skeleton of *sc* has exactly one connected component.

    Parameters
    ----------
    sc : SimplicialComplex
      A complex with at least one vertex.

    Returns
    -------
    connected : bool

    Examples
    --------
    >>> is_connected(SimplicialComplex.from_simplices([(0, 1), (1, 2)]))
    True
    >>> is_connected(SimplicialComplex.from_simplices([(0, 1), (2, 3)]))
    False
    """
    if sc.count(0) < 1:
        raise ValueError('the complex has no vertex')
    return connected_components(sc) == 1


def _distances_and_dim(data, max_dim):
    if isinstance(data, PointCloud):
        dm = pairwise_distances(data)
        if max_dim is None:
            max_dim = data.d
    else:
        dm = check_distance_matrix(data)
        if max_dim is None:
            raise TypeError('max_dim is required when a distance matrix is given')
    max_dim = int(max_dim)
    if max_dim < 0:
        raise ValueError('max_dim must be >= 0')
    return dm, max_dim


def _expand_cliques(adjacency, max_dim, active=None, accept=None, weights=None):
    """Incremental expansion of the clique complex of a graph.

    Every simplex is extended by the common neighbours with a larger index,
    so each dimension comes out in lexicographic order. *accept* prunes
    simplices (and therefore all their cofaces); *weights* carries the
    largest edge weight of each simplex.
    """
    n = adjacency.shape[0]
    if active is None:
        active = np.ones(n, dtype=bool)
    adj = adjacency & active[np.newaxis, :] & active[:, np.newaxis]
    simplices = [[] for _ in range(max_dim + 1)]
    values = [[] for _ in range(max_dim + 1)]

    def extend(tau, value, candidates):
        dim = len(tau)
        for i, v in enumerate(candidates):
            sigma = tau + (int(v),)
            if accept is not None and not accept(sigma):
                continue
            if weights is not None:
                svalue = max(value, float(weights[v, list(tau)].max()))
            else:
                svalue = 0.
            simplices[dim].append(sigma)
            values[dim].append(svalue)
            if dim < max_dim:
                rest = candidates[i + 1:]
                extend(sigma, svalue, rest[adj[v, rest]])

    for v in np.flatnonzero(active):
        simplices[0].append((int(v),))
        values[0].append(0.)
        if max_dim > 0:
            extend((int(v),), 0., np.flatnonzero(adj[v, v + 1:]) + v + 1)
    return simplices, values


def _rips_adjacency(dm, diameter):
    adjacency = dm <= diameter
    np.fill_diagonal(adjacency, False)
    return adjacency


def build_rips(dm, epsilon, max_dim=None):
    """Vietoris-Rips complex at ball radius *epsilon*.

    A set of points spans a simplex when all its pairwise distances are at
    most ``2*epsilon`` (the radius-epsilon balls intersect pairwise).
    Distances equal to the threshold are included.

    Parameters
    ----------
    dm : array-like or PointCloud
      A (n, n) distance matrix, or a point cloud whose Euclidean distances
      are used.
    epsilon : float
      The ball radius, >= 0.
    max_dim : int, optional
      Maximal simplex dimension. Defaults to d for a point cloud; required
      for a distance matrix.

    Returns
    -------
    sc : SimplicialComplex
      All n vertices, and the cliques of dimension <= max_dim.

    Examples
    --------
    >>> dm = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]
    >>> build_rips(dm, 0.5, max_dim=2).f_vector()
    [3, 3, 1]
    >>> build_rips(dm, 0.49, max_dim=2).f_vector()
    [3, 0, 0]
    """
    dm, max_dim = _distances_and_dim(dm, max_dim)
    if epsilon < 0:
        raise ValueError('epsilon must be >= 0')
    simplices, _ = _expand_cliques(_rips_adjacency(dm, 2. * epsilon), max_dim)
    return SimplicialComplex(simplices, max_dim)


def strong_collapse(adjacency):
    """Removes dominated vertices of a graph, one at a time.

    A vertex v is dominated by a neighbour u when the closed neighbourhood
    of v is contained in the closed neighbourhood of u. Removing it is a
    strong collapse of the flag complex, which keeps its homotopy type.
    Passes are repeated until no vertex is dominated.

    Parameters
    ----------
    adjacency : array-like of bool, shape (n, n)
      Symmetric adjacency matrix (the diagonal is ignored).

    Returns
    -------
    alive : array of bool, shape (n,)
      The vertices that are kept.

    Examples
    --------
    >>> path = np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=bool)
    >>> strong_collapse(path).tolist()
    [False, False, True]
    """
    closed = np.array(adjacency, dtype=bool)
    np.fill_diagonal(closed, True)
    n = closed.shape[0]
    alive = np.ones(n, dtype=bool)
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not alive[v]:
                continue
            support = np.flatnonzero(closed[v] & alive)
            others = support[support != v]
            if len(others) == 0:
                continue
            if closed[np.ix_(others, support)].all(axis=1).any():
                alive[v] = False
                changed = True
    return alive


def build_collapsed_rips(dm, epsilon, max_dim=None):
    """Rips complex at radius *epsilon* on the vertices surviving
    :func:`strong_collapse`.

    The result is homotopy equivalent to ``build_rips(dm, epsilon, max_dim)``
    (so it has the same Betti numbers below *max_dim*) but is usually much
    smaller on dense samples. Vertex indices refer to the input points.

    Parameters
    ----------
    dm : array-like or PointCloud
      As in :func:`build_rips`.
    epsilon : float
      The ball radius, >= 0.
    max_dim : int, optional
      As in :func:`build_rips`.

    Returns
    -------
    sc : SimplicialComplex
    """
    dm, max_dim = _distances_and_dim(dm, max_dim)
    if epsilon < 0:
        raise ValueError('epsilon must be >= 0')
    adjacency = _rips_adjacency(dm, 2. * epsilon)
    alive = strong_collapse(adjacency)
    simplices, _ = _expand_cliques(adjacency, max_dim, active=alive)
    return SimplicialComplex(simplices, max_dim)


def _circumcenter(points):
    """Center of the smallest sphere through all *points*, lying in their
    affine hull; None for affinely dependent points."""
    base = points[0]
    vectors = points[1:] - base
    gram = np.dot(vectors, vectors.T)
    rhs = 0.5 * np.sum(vectors ** 2, axis=1)
    try:
        coeffs = np.linalg.solve(gram, rhs)
    except np.linalg.LinAlgError:
        return None
    return base + np.dot(coeffs, vectors)


def minimal_enclosing_radius(points):
    """Radius of the smallest ball containing *points*.

    The ball is supported by at most d+1 of the points and is the
    circumball of its support within the support's affine hull, so the
    radius is found exactly by checking every support of size <= min(d+1, 4).

    Parameters
    ----------
    points : array-like, shape (m, d)

    Returns
    -------
    radius : float

    Examples
    --------
    >>> minimal_enclosing_radius([[0., 0.], [2., 0.]])
    1.0
    """
    points = np.atleast_2d(np.asarray(points, dtype=np.float64))
    m, d = points.shape
    if m == 1:
        return 0.
    best = np.inf
    for k in range(2, min(m, d + 1, 4) + 1):
        for subset in itertools.combinations(range(m), k):
            support = points[list(subset)]
            if k == 2:
                center = 0.5 * (support[0] + support[1])
            else:
                center = _circumcenter(support)
                if center is None:
                    continue
            radius = np.linalg.norm(support - center, axis=1).max()
            if radius >= best:
                continue
            reach = np.linalg.norm(points - center, axis=1)
            if (reach <= radius * (1 + 1e-12) + 1e-15).all():
                best = radius
    return float(best)


def build_cech(pc, epsilon, max_dim=None):
    """Cech complex at ball radius *epsilon*.

    A set of points spans a simplex when the radius-epsilon balls around
    them have a common point, i.e. when their minimal enclosing ball has
    radius <= epsilon.

    Parameters
    ----------
    pc : PointCloud or array-like, shape (n, d)
      The points, d <= 3.
    epsilon : float
      The ball radius, >= 0.
    max_dim : int, optional
      Maximal simplex dimension, at most d (default d).

    Returns
    -------
    sc : SimplicialComplex

    Raises
    ------
    UnsupportedDimensionError
      if d > 3.
    """
    points = as_points(pc)
    d = points.shape[1]
    if d > MAX_CECH_DIM:
        raise UnsupportedDimensionError(d)
    if max_dim is None:
        max_dim = d
    if max_dim < 0 or max_dim > d:
        raise ValueError('max_dim must be between 0 and d = %d' % d)
    if epsilon < 0:
        raise ValueError('epsilon must be >= 0')

    def accept(sigma):
        # pairs are settled by the adjacency: dist/2 <= eps
        return (len(sigma) <= 2
                or minimal_enclosing_radius(points[list(sigma)]) <= epsilon)

    adjacency = _rips_adjacency(pairwise_distances(points), 2. * epsilon)
    simplices, _ = _expand_cliques(adjacency, max_dim, accept=accept)
    return SimplicialComplex(simplices, max_dim)


def build_rips_filtration(dm, max_threshold, max_dim=None):
    """Rips filtration indexed by simplex diameter.

    Parameters
    ----------
    dm : array-like or PointCloud
      As in :func:`build_rips`.
    max_threshold : float
      Simplices with diameter above this value are left out.
    max_dim : int, optional
      Maximal simplex dimension (default d for a point cloud).

    Returns
    -------
    fc : FilteredComplex
      Vertices at 0, every other simplex at the largest distance between
      two of its vertices, sorted by (value, dimension, vertices).

    Examples
    --------
    >>> fc = build_rips_filtration([[0., 1.], [1., 0.]], 4., max_dim=1)
    >>> [(s, float(v)) for s, v in fc]
    [((0,), 0.0), ((1,), 0.0), ((0, 1), 1.0)]
    """
    dm, max_dim = _distances_and_dim(dm, max_dim)
    if max_threshold < 0:
        raise ValueError('max_threshold must be >= 0')
    simplices, values = _expand_cliques(_rips_adjacency(dm, max_threshold),
                                        max_dim, weights=dm)
    return FilteredComplex(list(itertools.chain.from_iterable(simplices)),
                           list(itertools.chain.from_iterable(values)))
