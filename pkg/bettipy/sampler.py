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
sampler.py : seeded samples from the test supports
=====================================================

A distribution is described by a :class:`DistributionSpec`, built from
keyword arguments, a dict (e.g. read from a JSON experiment file) or one of
the :data:`PRESETS` names. :func:`sample` draws a :class:`PointCloud` from it.

Available kinds:

- ``vonmises_mixture_circle`` mixture of von Mises laws on the unit circle
- ``vmf_mixture_sphere`` mixture of von Mises-Fisher laws on S^2
- ``mvn`` multivariate normal
- ``uniform_disk``, ``uniform_square``, ``uniform_cube`` solid regions
- ``uniform_sphere_surface`` uniform on S^(dim-1)
- ``torus`` torus of revolution in R^3
- ``swiss_roll``, ``spiral`` rolled sheet in R^3 and planar spiral
"""

import json
from typing import List, Literal, Optional

import numpy as np
from pydantic import (BaseModel, ConfigDict, ValidationError,
                      model_validator)

from .pointfunc import PointCloud

__all__ = ['DistributionSpec', 'PRESETS', 'KINDS', 'parse_spec', 'sample',
           'InvalidSpecError']

KINDS = ('vonmises_mixture_circle', 'vmf_mixture_sphere', 'mvn',
         'uniform_disk', 'uniform_square', 'uniform_cube',
         'uniform_sphere_surface', 'torus', 'swiss_roll', 'spiral')

WEIGHT_TOL = 1e-12


class InvalidSpecError(ValueError):
    """Raised for an invalid distribution description.

    Attributes
    ----------
    violations : list of str
      One message per violated invariant.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super(InvalidSpecError, self).__init__(
            'invalid distribution:\n  ' + '\n  '.join(self.violations))


def _mvn_defaults(data):
    dim = data.get('dim')
    if data.get('mean') is not None:
        dim = len(data['mean'])
    elif data.get('cov') is not None:
        dim = len(data['cov'])
    if dim is None:
        dim = 2
    data.setdefault('dim', dim)
    if data.get('mean') is None:
        data['mean'] = [0.] * dim
    if data.get('cov') is None:
        cov = np.full((dim, dim), 0.5)
        np.fill_diagonal(cov, 1.)
        data['cov'] = cov.tolist()


_DEFAULTS = {
    'vonmises_mixture_circle': {'weights': [1. / 3, 2. / 3],
                                'means': [[1., 0.], [0., 1.]],
                                'kappas': [3., 4.]},
    'vmf_mixture_sphere': {'weights': [1. / 3, 1. / 3, 1. / 3],
                           'means': [[1., 0., 0.], [0., 1., 0.], [0., 0., 1.]],
                           'kappas': [3., 4., 5.]},
    'uniform_cube': {'dim': 3},
    'uniform_sphere_surface': {'dim': 3},
}


class DistributionSpec(BaseModel):
    """Parameters of a sampling distribution.

    Parameters that are not given take the values of the simulation study:
    weights 1/3, 2/3 with kappas 3, 4 on the circle, weights 1/3 each with
    kappas 3, 4, 5 on the sphere, normal covariances with 0.5 off the
    diagonal, and a torus with R = 2 and r = 1.

    Examples
    --------
    >>> spec = DistributionSpec(kind='torus')
    >>> spec.R, spec.r, spec.ambient_dim
    (2.0, 1.0, 3)
    """
    model_config = ConfigDict(frozen=True, extra='forbid')

    kind: Literal[KINDS]
    weights: Optional[List[float]] = None
    means: Optional[List[List[float]]] = None
    kappas: Optional[List[float]] = None
    mean: Optional[List[float]] = None
    cov: Optional[List[List[float]]] = None
    dim: Optional[int] = None
    R: float = 2.
    r: float = 1.
    area_uniform: bool = False
    noise: float = 0.

    @model_validator(mode='before')
    @classmethod
    def _fill_defaults(cls, data):
        if not isinstance(data, dict):
            return data
        data = dict(data)
        kind = data.get('kind')
        for key, value in _DEFAULTS.get(kind, {}).items():
            if data.get(key) is None:
                data[key] = value
        if kind == 'mvn':
            _mvn_defaults(data)
        return data

    @model_validator(mode='after')
    def _check(self):
        violations = _violations(self)
        if violations:
            raise ValueError('; '.join(violations))
        return self

    @property
    def ambient_dim(self):
        """Dimension of the space the samples live in."""
        if self.kind in ('vonmises_mixture_circle', 'uniform_disk',
                         'uniform_square', 'spiral'):
            return 2
        if self.kind in ('vmf_mixture_sphere', 'torus', 'swiss_roll'):
            return 3
        return self.dim


def _violations(spec):
    out = []
    if spec.kind in ('vonmises_mixture_circle', 'vmf_mixture_sphere'):
        dim = 2 if spec.kind == 'vonmises_mixture_circle' else 3
        w = np.asarray(spec.weights, dtype=np.float64)
        if (w <= 0).any():
            out.append('weights must be positive')
        if abs(w.sum() - 1.) > WEIGHT_TOL:
            out.append('weights must sum to 1, got %r' % (float(w.sum()),))
        if not len(w) == len(spec.means) == len(spec.kappas):
            out.append('weights, means and kappas must have the same length')
        if any(len(m) != dim for m in spec.means):
            out.append('means must be vectors of dimension %d' % dim)
        elif any(np.linalg.norm(m) == 0 for m in spec.means):
            out.append('means must be nonzero directions')
        if any(k <= 0 for k in spec.kappas):
            out.append('kappas must be > 0')
    elif spec.kind == 'mvn':
        cov = np.asarray(spec.cov, dtype=np.float64)
        dim = len(spec.mean)
        if spec.dim != dim:
            out.append('dim must equal the length of mean')
        if cov.shape != (dim, dim):
            out.append('cov must be a %d x %d matrix' % (dim, dim))
        elif not np.array_equal(cov, cov.T):
            out.append('cov must be symmetric')
        else:
            try:
                np.linalg.cholesky(cov)
            except np.linalg.LinAlgError:
                out.append('cov must be positive definite')
    elif spec.kind == 'torus':
        if not 0 < spec.r < spec.R < np.inf:
            out.append('torus radii must satisfy 0 < r < R < inf')
    elif spec.kind == 'uniform_sphere_surface':
        if spec.dim < 2:
            out.append('dim must be >= 2 for a sphere surface')
    elif spec.kind == 'uniform_cube':
        if spec.dim < 1:
            out.append('dim must be >= 1')
    if spec.noise < 0:
        out.append('noise must be >= 0')
    return out


#: Named distributions of the simulation study
PRESETS = {
    'circle_vonmises': {'kind': 'vonmises_mixture_circle'},
    'sphere_vmf': {'kind': 'vmf_mixture_sphere'},
    'normal_2d': {'kind': 'mvn', 'dim': 2},
    'normal_3d': {'kind': 'mvn', 'dim': 3},
    'circle': {'kind': 'uniform_sphere_surface', 'dim': 2},
    'disk': {'kind': 'uniform_disk'},
    'square': {'kind': 'uniform_square'},
    'cube': {'kind': 'uniform_cube', 'dim': 3},
    'sphere': {'kind': 'uniform_sphere_surface', 'dim': 3},
    'torus': {'kind': 'torus'},
    'swiss_roll': {'kind': 'swiss_roll'},
    'spiral': {'kind': 'spiral'},
}


def parse_spec(spec):
    """Returns a validated :class:`DistributionSpec`.

    Parameters
    ----------
    spec : DistributionSpec, str or dict
      A spec, a preset name, a JSON object string or a dict of parameters.

    Raises
    ------
    InvalidSpecError
      listing every violated invariant.

    Examples
    --------
    >>> parse_spec('sphere').dim
    3
    >>> try:
    ...     parse_spec({'kind': 'torus', 'R': 1, 'r': 2})
    ... except InvalidSpecError as e:
    ...     print(e.violations)
    ['torus radii must satisfy 0 < r < R < inf']
    """
    if isinstance(spec, DistributionSpec):
        return spec
    if isinstance(spec, str):
        if spec in PRESETS:
            spec = PRESETS[spec]
        elif spec.lstrip().startswith('{'):
            try:
                spec = json.loads(spec)
            except ValueError as e:
                raise InvalidSpecError(['not valid JSON: %s' % e])
        else:
            raise InvalidSpecError(['unknown preset %r (available: %s)'
                                    % (spec, ', '.join(sorted(PRESETS)))])
    if not isinstance(spec, dict):
        raise InvalidSpecError(['a distribution must be given as a name or '
                                'a dict, got %r' % (type(spec).__name__,)])
    try:
        return DistributionSpec(**spec)
    except ValidationError as e:
        violations = []
        for err in e.errors(include_url=False):
            msg = err['msg']
            if msg.startswith('Value error, '):
                violations.extend(msg[len('Value error, '):].split('; '))
            else:
                loc = '.'.join(str(x) for x in err['loc'])
                violations.append('%s: %s' % (loc, msg) if loc else msg)
        raise InvalidSpecError(violations)


def _unit(vectors):
    vectors = np.asarray(vectors, dtype=np.float64)
    return vectors / np.linalg.norm(vectors, axis=-1, keepdims=True)


def _sample_vonmises(spec, n, rng):
    labels = rng.choice(len(spec.weights), size=n, p=spec.weights)
    means = _unit(spec.means)
    mu = np.arctan2(means[:, 1], means[:, 0])
    theta = rng.vonmises(mu[labels], np.asarray(spec.kappas)[labels])
    return np.column_stack((np.cos(theta), np.sin(theta))), labels


def _tangent_basis(mu):
    """Two unit vectors orthogonal to mu and to each other."""
    helper = np.eye(3)[np.argmin(np.abs(mu))]
    e1 = np.cross(mu, helper)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(mu, e1)


def _sample_vmf(spec, n, rng):
    labels = rng.choice(len(spec.weights), size=n, p=spec.weights)
    means = _unit(spec.means)
    kappas = np.asarray(spec.kappas, dtype=np.float64)
    points = np.empty((n, 3))
    for k in range(len(kappas)):
        idx = np.flatnonzero(labels == k)
        if len(idx) == 0:
            continue
        kappa = kappas[k]
        # inverse CDF of the cosine to the mean direction on S^2
        u = rng.random(len(idx))
        w = 1. + np.log(u + (1. - u) * np.exp(-2. * kappa)) / kappa
        w = np.clip(w, -1., 1.)
        phi = rng.uniform(0., 2. * np.pi, len(idx))
        e1, e2 = _tangent_basis(means[k])
        s = np.sqrt(1. - w ** 2)
        points[idx] = (w[:, None] * means[k]
                       + (s * np.cos(phi))[:, None] * e1
                       + (s * np.sin(phi))[:, None] * e2)
    return points, labels


def _sample_torus(spec, n, rng):
    psi = rng.uniform(0., 2. * np.pi, n)
    if spec.area_uniform:
        # the area element is proportional to R + r cos(theta)
        theta = np.empty(0)
        while len(theta) < n:
            cand = rng.uniform(0., 2. * np.pi, 2 * (n - len(theta)))
            keep = (rng.random(len(cand)) * (spec.R + spec.r)
                    <= spec.R + spec.r * np.cos(cand))
            theta = np.concatenate((theta, cand[keep]))
        theta = theta[:n]
    else:
        theta = rng.uniform(0., 2. * np.pi, n)
    ring = spec.R + spec.r * np.cos(theta)
    return np.column_stack((ring * np.cos(psi), ring * np.sin(psi),
                            spec.r * np.sin(theta)))


def _draw_points(spec, n, rng):
    kind = spec.kind
    labels = None
    if kind == 'vonmises_mixture_circle':
        points, labels = _sample_vonmises(spec, n, rng)
    elif kind == 'vmf_mixture_sphere':
        points, labels = _sample_vmf(spec, n, rng)
    elif kind == 'mvn':
        points = rng.multivariate_normal(spec.mean, spec.cov, size=n,
                                         method='cholesky')
    elif kind == 'uniform_disk':
        radius = np.sqrt(rng.random(n))
        theta = rng.uniform(0., 2. * np.pi, n)
        points = np.column_stack((radius * np.cos(theta),
                                  radius * np.sin(theta)))
    elif kind == 'uniform_square':
        points = rng.random((n, 2))
    elif kind == 'uniform_cube':
        points = rng.random((n, spec.dim))
    elif kind == 'uniform_sphere_surface':
        points = _unit(rng.standard_normal((n, spec.dim)))
    elif kind == 'torus':
        points = _sample_torus(spec, n, rng)
    elif kind == 'swiss_roll':
        t = rng.uniform(1.5 * np.pi, 4.5 * np.pi, n)
        h = rng.uniform(0., 10., n)
        points = np.column_stack((t * np.cos(t), h, t * np.sin(t)))
    elif kind == 'spiral':
        t = rng.uniform(0., 4. * np.pi, n)
        radius = t / (2. * np.pi)
        points = np.column_stack((radius * np.cos(t), radius * np.sin(t)))
    else:
        raise InvalidSpecError(['unknown kind %r' % (kind,)])
    if spec.noise > 0:
        points = points + rng.normal(0., spec.noise, points.shape)
    return points, labels


def sample(spec, n, seed=None):
    """Draws n points from a distribution.

    Parameters
    ----------
    spec : DistributionSpec, str or dict
      The distribution (see :func:`parse_spec`).
    n : int
      Number of points, >= 1.
    seed : int, numpy.random.Generator or None
      Seed of a new generator, or a generator to draw from.

    Returns
    -------
    pc : PointCloud
      The sample; mixtures record the component of every point as labels.

    Examples
    --------
    >>> pc = sample('sphere', 5, seed=1)
    >>> pc.n, pc.d
    (5, 3)
    >>> np.allclose(np.linalg.norm(pc.points, axis=1), 1.)
    True
    """
    spec = parse_spec(spec)
    n = int(n)
    if n < 1:
        raise ValueError('n must be >= 1')
    if isinstance(seed, np.random.Generator):
        rng = seed
    else:
        rng = np.random.default_rng(seed)
    points, labels = _draw_points(spec, n, rng)
    return PointCloud(points, labels=labels)
