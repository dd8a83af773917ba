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
========================================================
statfunc.py : Betti number tests and Monte Carlo power
========================================================

Threshold rules
---------------

- :func:`epsilon_critical` ball radius n^(-1/d) (critical regime)
- :func:`epsilon_supercritical` ball radius (tau log n / n)^(1/d)
- :class:`ThresholdRule` a regime bound to a dimension

Statistics and decisions
------------------------

- :func:`estimate_betti` Rips Betti vector of a point cloud
- :func:`one_sample_statistic`, :func:`two_sample_statistic` L1 distances
  between Betti vectors
- :func:`estimate_critical_value` empirical quantile of null statistics
- :func:`one_sample_test`, :func:`two_sample_test` decisions on data
- :func:`one_sample_power`, :func:`two_sample_power` Monte Carlo power

Connectivity probes
-------------------

- :func:`check_disconnection` fraction of disconnected Rips complexes
- :func:`component_density` mean number of components per point

Every replication i of a run seeded with s draws from its own generator,
seeded with s + i, so results do not depend on the number of threads.
"""

import math
import sys
import warnings
from functools import partial
from typing import List, Optional

import numpy as np
from astropy.table import Table
from pydantic import BaseModel, ConfigDict, model_validator

from .cookbook import map_replications, replication_rng, sample_sizes
from .pointfunc import PointCloud, scale_points
from .complexfunc import (build_rips, build_collapsed_rips,
                          connected_components)
from .homolfunc import betti_numbers, as_betti_vector
from . import sampler as _sampler

__all__ = ['epsilon_critical', 'epsilon_supercritical', 'ThresholdRule',
           'one_sample_statistic', 'two_sample_statistic', 'quantile_level',
           'estimate_critical_value', 'estimate_betti', 'one_sample_test',
           'two_sample_test', 'one_sample_power', 'two_sample_power',
           'check_disconnection', 'component_density', 'TestReport',
           'PowerEstimate', 'BettiTestWarning', 'DomainError',
           'LengthMismatchError', 'EmptyInputError', 'REGIMES',
           'QUANTILE_MODES']

REGIMES = ('critical', 'supercritical')
QUANTILE_MODES = ('one_minus_half_alpha', 'one_minus_alpha')

#: Number of replications below which a critical value is unreliable
MIN_REPLICATIONS = 20


class BettiTestWarning(Warning):
    """Warns about a statistically weak test configuration."""
    pass


warnings.filterwarnings("always", category=BettiTestWarning, module=__name__)


class DomainError(ValueError):
    """Raised when a threshold rule is evaluated outside its domain."""


class LengthMismatchError(ValueError):
    """Raised when two Betti vectors have different lengths."""


class EmptyInputError(ValueError):
    """Raised when no null statistic is available."""


def epsilon_critical(n, d):
    """Ball radius of the critical regime, n^(-1/d).

    With this choice n*eps^d stays constant.

    Examples
    --------
    >>> round(epsilon_critical(100, 2), 12)
    0.1
    >>> epsilon_critical(1, 3)
    1.0
    """
    if n < 1 or d < 1:
        raise DomainError('the critical rule needs n >= 1 and d >= 1')
    return float(n) ** (-1. / d)


def epsilon_supercritical(n, d, tau=1.):
    """Ball radius of the supercritical regime, (tau * log(n) / n)^(1/d).

    Parameters
    ----------
    n : int
      Sample size, >= 2.
    d : int
      Dimension, >= 1.
    tau : float, optional
      Positive constant in front of log(n) (1 by default). n*eps^d grows
      like tau * log(n) whatever its value.

    Examples
    --------
    >>> round(epsilon_supercritical(100, 2), 5)
    0.2146
    >>> round(epsilon_supercritical(3, 1), 5)
    0.3662
    """
    if n < 2:
        raise DomainError('the supercritical rule needs n >= 2, got n = %r' % (n,))
    if d < 1:
        raise DomainError('the supercritical rule needs d >= 1')
    if tau <= 0:
        raise DomainError('tau must be > 0')
    return (tau * math.log(n) / n) ** (1. / d)


class ThresholdRule(object):
    """Ball radius as a function of the sample size.

    Parameters
    ----------
    regime : {'critical', 'supercritical'}
      Which rule to apply.
    d : int
      Ambient dimension of the samples, the exponent of the rule.
    tau : float, optional
      Constant of the supercritical rule (ignored for the critical one).
    betti_dim : int, optional
      Length of the estimated Betti vectors (default: d).

    Examples
    --------
    >>> rule = ThresholdRule('critical', 2)
    >>> round(rule(400), 12)
    0.05
    >>> ThresholdRule('critical', 3, betti_dim=2)
    ThresholdRule('critical', 3, tau=1, betti_dim=2)
    """

    def __init__(self, regime, d, tau=1., betti_dim=None):
        if regime not in REGIMES:
            raise ValueError('regime must be one of %s, got %r'
                             % (', '.join(REGIMES), regime))
        if int(d) < 1:
            raise ValueError('d must be >= 1')
        if betti_dim is not None and int(betti_dim) < 1:
            raise ValueError('betti_dim must be >= 1')
        if tau <= 0:
            raise ValueError('tau must be > 0')
        self.regime = regime
        self.d = int(d)
        self.tau = float(tau)
        self.betti_dim = int(betti_dim) if betti_dim is not None else self.d

    def __call__(self, n):
        if self.regime == 'critical':
            return epsilon_critical(n, self.d)
        return epsilon_supercritical(n, self.d, self.tau)

    def __repr__(self):
        return ('ThresholdRule(%r, %d, tau=%g, betti_dim=%d)'
                % (self.regime, self.d, self.tau, self.betti_dim))

    def __eq__(self, other):
        return (isinstance(other, ThresholdRule)
                and (self.regime, self.d, self.tau, self.betti_dim)
                == (other.regime, other.d, other.tau, other.betti_dim))

    def __ne__(self, other):
        return not self == other


def _l1(a, b):
    a = as_betti_vector(a)
    b = as_betti_vector(b)
    if len(a) != len(b):
        raise LengthMismatchError('Betti vectors of lengths %d and %d'
                                  % (len(a), len(b)))
    return int(np.abs(a - b).sum())


def one_sample_statistic(est, hyp):
    """Sum of absolute differences between estimated and hypothesized Betti
    numbers.

    Examples
    --------
    >>> one_sample_statistic([3, 0], [1, 1])
    3
    """
    return _l1(est, hyp)


def two_sample_statistic(a, b):
    """L1 distance between the Betti vectors of two samples.

    Examples
    --------
    >>> two_sample_statistic([2, 1, 0], [1, 1, 1])
    2
    """
    return _l1(a, b)


def quantile_level(alpha, quantile='one_minus_half_alpha'):
    """The quantile order used for the critical value.

    Examples
    --------
    >>> quantile_level(0.1), quantile_level(0.1, 'one_minus_alpha')
    (0.95, 0.9)
    """
    if not 0 < alpha < 1:
        raise ValueError('alpha must lie in (0, 1), got %r' % (alpha,))
    if quantile == 'one_minus_half_alpha':
        return 1. - alpha / 2.
    elif quantile == 'one_minus_alpha':
        return 1. - alpha
    raise ValueError('quantile must be one of %s, got %r'
                     % (', '.join(QUANTILE_MODES), quantile))


def estimate_critical_value(null_stats, alpha, quantile='one_minus_half_alpha'):
    """Empirical quantile of the null statistics.

    The order statistic of rank ceil(r * q) is returned, without
    interpolation, where q is given by :func:`quantile_level`.

    Parameters
    ----------
    null_stats : sequence of float
      The r statistics computed under the null hypothesis.
    alpha : float
      Level of the test, in (0, 1).
    quantile : {'one_minus_half_alpha', 'one_minus_alpha'}
      The quantile order, 1 - alpha/2 (default) or 1 - alpha.

    Returns
    -------
    c : float

    Examples
    --------
    >>> estimate_critical_value(range(1, 11), 0.05)
    10.0
    >>> estimate_critical_value(range(1, 11), 0.2)
    9.0
    """
    values = np.sort(np.asarray(list(null_stats), dtype=np.float64))
    if values.size == 0:
        raise EmptyInputError('at least one null statistic is needed')
    q = quantile_level(alpha, quantile)
    r = values.size
    # rounding keeps r * q = 9.000000000000002 at rank 9
    rank = int(math.ceil(round(r * q, 9)))
    rank = min(max(rank, 1), r)
    return float(values[rank - 1])


def _warn_replications(r, alpha, quantile):
    if r < MIN_REPLICATIONS:
        warnings.warn('only %d replications, the critical value is unreliable '
                      '(%d or more recommended)' % (r, MIN_REPLICATIONS),
                      category=BettiTestWarning)
    if r * (1. - quantile_level(alpha, quantile)) < 1:
        warnings.warn('with r = %d and alpha = %g the critical value is the '
                      'largest null statistic' % (r, alpha),
                      category=BettiTestWarning)


def estimate_betti(pc, epsilon, d=None, collapse=True):
    """Betti numbers beta_0 ... beta_{d-1} of the Rips complex of *pc*.

    Parameters
    ----------
    pc : PointCloud or array-like
      The sample.
    epsilon : float
      Ball radius of the Rips complex.
    d : int, optional
      Number of Betti numbers (default: the ambient dimension). The
      complex is built up to dimension d.
    collapse : bool, optional
      If True (default), dominated vertices are removed first (see
      :func:`~bettipy.complexfunc.build_collapsed_rips`), which gives the
      same Betti numbers faster.

    Returns
    -------
    betti : array of int, shape (d,)

    Examples
    --------
    >>> estimate_betti([[0., 0.], [1., 0.], [5., 5.]], 0.6).tolist()
    [2, 0]
    """
    if not isinstance(pc, PointCloud):
        pc = PointCloud(pc)
    if d is None:
        d = pc.d
    build = build_collapsed_rips if collapse else build_rips
    return betti_numbers(build(pc, epsilon, max_dim=d), d)


def _draw(spec, n, rng):
    if callable(spec):
        pc = spec(n, rng)
        return pc if isinstance(pc, PointCloud) else PointCloud(pc)
    return _sampler.sample(spec, n, rng)


def _resolve(spec):
    return spec if callable(spec) else _sampler.parse_spec(spec)


def _betti(pc, rule, scaling, collapse):
    pc = scale_points(pc, scaling)
    return estimate_betti(pc, rule(pc.n), rule.betti_dim, collapse=collapse)


class TestReport(BaseModel):
    """Outcome of a one- or two-sample test."""
    __test__ = False
    model_config = ConfigDict(frozen=True)

    statistic: int
    critical_value: float
    reject: bool
    alpha: float
    regime: str
    quantile: str
    epsilon: float
    n: int
    n2: Optional[int] = None
    epsilon2: Optional[float] = None
    r: int
    seed: int
    betti: List[int]
    betti2: Optional[List[int]] = None
    hypothesis: Optional[List[int]] = None

    @model_validator(mode='after')
    def _check_decision(self):
        if self.reject != (self.statistic > self.critical_value):
            raise ValueError('reject must equal statistic > critical_value')
        return self


class PowerEstimate(BaseModel):
    """Monte Carlo estimate of the power of a test."""
    model_config = ConfigDict(frozen=True)

    power: float
    rejections: int
    r: int
    alpha: float
    n: int
    n2: Optional[int] = None
    seed: int
    method: str = 'betti'
    regime: Optional[str] = None
    quantile: Optional[str] = None
    critical_value: float
    null_statistics: List[float]
    alt_statistics: List[float]

    @model_validator(mode='after')
    def _check_power(self):
        if self.r < 1:
            raise ValueError('r must be >= 1')
        if not 0 <= self.rejections <= self.r:
            raise ValueError('rejections must lie between 0 and r')
        if self.power != self.rejections / self.r:
            raise ValueError('power must equal rejections / r')
        return self


def _one_sample_replicate(index, null, hyp, rule, seed, n, scaling, collapse):
    rng = replication_rng(seed, index)
    pc = _draw(null, n, rng)
    return one_sample_statistic(_betti(pc, rule, scaling, collapse), hyp)


def one_sample_test(pc, hyp, rule, alpha=0.05, r=100, seed=0,
                    null_sampler=None, scaling='per_point_norm',
                    quantile='one_minus_half_alpha', collapse=True,
                    threads=1):
    """Tests whether the support of *pc* has the hypothesized Betti numbers.

    The statistic is the L1 distance between the Betti vector of the Rips
    complex of the (scaled) sample at radius ``rule(n)`` and *hyp*. Its
    critical value is estimated from r samples of the same size drawn from
    *null_sampler*; the null is rejected when the statistic exceeds it.

    Parameters
    ----------
    pc : PointCloud or array-like
      The observed sample.
    hyp : sequence of int
      Hypothesized Betti numbers, length ``rule.betti_dim``.
    rule : ThresholdRule
      Regime and dimension.
    alpha : float, optional
      Level, in (0, 1).
    r : int, optional
      Number of null replications.
    seed : int, optional
      Replication i uses a generator seeded with seed + i.
    null_sampler : DistributionSpec, preset name, dict or callable
      Generator of samples from the hypothesized support. A callable is
      called as ``null_sampler(n, rng)``.
    scaling : str, optional
      Preprocessing, see :func:`~bettipy.pointfunc.scale_points`.
    quantile : str, optional
      See :func:`estimate_critical_value`.
    collapse : bool, optional
      See :func:`estimate_betti`.
    threads : int, optional
      Worker processes for the null replications.

    Returns
    -------
    report : TestReport
    """
    if null_sampler is None:
        raise ValueError('a null sampler is required to calibrate the test')
    if r < 1:
        raise ValueError('r must be >= 1')
    hyp = as_betti_vector(hyp)
    if len(hyp) != rule.betti_dim:
        raise LengthMismatchError('hyp has length %d, the rule expects %d '
                                  'Betti numbers' % (len(hyp), rule.betti_dim))
    _warn_replications(r, alpha, quantile)
    if not isinstance(pc, PointCloud):
        pc = PointCloud(pc)
    betti = _betti(pc, rule, scaling, collapse)
    statistic = one_sample_statistic(betti, hyp)
    worker = partial(_one_sample_replicate, null=_resolve(null_sampler),
                     hyp=hyp, rule=rule, seed=seed, n=pc.n, scaling=scaling,
                     collapse=collapse)
    null_stats = map_replications(worker, range(r), threads)
    c = estimate_critical_value(null_stats, alpha, quantile)
    return TestReport(statistic=statistic, critical_value=c,
                      reject=statistic > c, alpha=alpha, regime=rule.regime,
                      quantile=quantile, epsilon=rule(pc.n), n=pc.n, r=r,
                      seed=seed, betti=betti.tolist(),
                      hypothesis=hyp.tolist())


def _pooled_replicate(index, points, n1, rule, seed, scaling, collapse):
    rng = replication_rng(seed, index)
    perm = rng.permutation(len(points))
    x = PointCloud(points[perm[:n1]])
    y = PointCloud(points[perm[n1:]])
    return two_sample_statistic(_betti(x, rule, scaling, collapse),
                                _betti(y, rule, scaling, collapse))


def _two_sample_replicate(index, first, second, rule, seed, n1, n2, scaling,
                          collapse):
    rng = replication_rng(seed, index)
    x = _draw(first, n1, rng)
    y = _draw(second, n2, rng)
    return two_sample_statistic(_betti(x, rule, scaling, collapse),
                                _betti(y, rule, scaling, collapse))


def two_sample_test(x, y, rule, alpha=0.05, r=100, seed=0, null_sampler=None,
                    scaling='per_point_norm', quantile='one_minus_half_alpha',
                    collapse=True, threads=1):
    """Tests whether two samples have supports with equal Betti numbers.

    The statistic is the L1 distance between the Betti vectors of the two
    samples, each at radius ``rule(n_i)``. The null statistics come from
    pairs of samples of sizes (n1, n2) drawn from *null_sampler* when one is
    given, and otherwise from r random splits of the pooled samples into
    groups of sizes n1 and n2.

    Parameters
    ----------
    x, y : PointCloud or array-like
      The two samples, in the same ambient dimension.
    rule : ThresholdRule
    alpha, r, seed, scaling, quantile, collapse, threads
      As in :func:`one_sample_test`.
    null_sampler : optional
      Generator of the common distribution under the null.

    Returns
    -------
    report : TestReport
    """
    if r < 1:
        raise ValueError('r must be >= 1')
    if not isinstance(x, PointCloud):
        x = PointCloud(x)
    if not isinstance(y, PointCloud):
        y = PointCloud(y)
    if x.d != y.d:
        raise ValueError('the samples live in dimensions %d and %d' % (x.d, y.d))
    _warn_replications(r, alpha, quantile)
    betti_x = _betti(x, rule, scaling, collapse)
    betti_y = _betti(y, rule, scaling, collapse)
    statistic = two_sample_statistic(betti_x, betti_y)
    if null_sampler is None:
        worker = partial(_pooled_replicate,
                         points=np.vstack((x.points, y.points)), n1=x.n,
                         rule=rule, seed=seed, scaling=scaling,
                         collapse=collapse)
    else:
        null = _resolve(null_sampler)
        worker = partial(_two_sample_replicate, first=null, second=null,
                         rule=rule, seed=seed, n1=x.n, n2=y.n,
                         scaling=scaling, collapse=collapse)
    null_stats = map_replications(worker, range(r), threads)
    c = estimate_critical_value(null_stats, alpha, quantile)
    return TestReport(statistic=statistic, critical_value=c,
                      reject=statistic > c, alpha=alpha, regime=rule.regime,
                      quantile=quantile, epsilon=rule(x.n), n=x.n, n2=y.n,
                      epsilon2=rule(y.n), r=r, seed=seed,
                      betti=betti_x.tolist(), betti2=betti_y.tolist())


def _power(null_stats, alt_stats, alpha, quantile, **kwds):
    c = estimate_critical_value(null_stats, alpha, quantile)
    rejections = int(np.count_nonzero(np.asarray(alt_stats) > c))
    r = len(alt_stats)
    return PowerEstimate(power=rejections / r, rejections=rejections, r=r,
                         alpha=alpha, quantile=quantile, critical_value=c,
                         null_statistics=[float(s) for s in null_stats],
                         alt_statistics=[float(s) for s in alt_stats], **kwds)


def _one_sample_power_replicate(index, null, alt, hyp, rule, seed, n, scaling,
                                collapse):
    rng = replication_rng(seed, index)
    null_pc = _draw(null, n, rng)
    alt_pc = _draw(alt, n, rng)
    return (one_sample_statistic(_betti(null_pc, rule, scaling, collapse), hyp),
            one_sample_statistic(_betti(alt_pc, rule, scaling, collapse), hyp))


def one_sample_power(null_sampler, alt_sampler, hyp, rule, alpha=0.05, r=100,
                     n=200, seed=0, scaling='per_point_norm',
                     quantile='one_minus_half_alpha', collapse=True,
                     threads=1, verbose=False):
    """Monte Carlo power of the one-sample test.

    Replication i draws a null and an alternative sample of size n from the
    generator seeded with seed + i and computes the statistic of both. The
    critical value is the quantile of the r null statistics and the power
    is the fraction of alternative statistics above it.

    Parameters
    ----------
    null_sampler, alt_sampler : DistributionSpec, preset name, dict or callable
      Distributions under the null and the alternative.
    hyp : sequence of int
      Hypothesized Betti numbers.
    rule : ThresholdRule
    alpha, r, seed, scaling, quantile, collapse, threads
      As in :func:`one_sample_test`.
    n : int
      Sample size.
    verbose : bool, optional
      Print a progress line to stderr.

    Returns
    -------
    estimate : PowerEstimate
    """
    if r < 1:
        raise ValueError('r must be >= 1')
    hyp = as_betti_vector(hyp)
    if len(hyp) != rule.betti_dim:
        raise LengthMismatchError('hyp has length %d, the rule expects %d '
                                  'Betti numbers' % (len(hyp), rule.betti_dim))
    worker = partial(_one_sample_power_replicate, null=_resolve(null_sampler),
                     alt=_resolve(alt_sampler), hyp=hyp, rule=rule, seed=seed,
                     n=int(n), scaling=scaling, collapse=collapse)
    stats = map_replications(worker, range(r), threads)
    estimate = _power([s[0] for s in stats], [s[1] for s in stats], alpha,
                      quantile, n=int(n), seed=seed, regime=rule.regime)
    if verbose:
        print('one-sample power at n = %d: %g' % (n, estimate.power),
              file=sys.stderr)
    return estimate


def _two_sample_power_replicate(index, first, second, rule, seed, n1, n2,
                                scaling, collapse):
    rng = replication_rng(seed, index)
    x0 = _draw(first, n1, rng)
    y0 = _draw(first, n2, rng)
    x1 = _draw(first, n1, rng)
    y1 = _draw(second, n2, rng)
    null = two_sample_statistic(_betti(x0, rule, scaling, collapse),
                                _betti(y0, rule, scaling, collapse))
    alt = two_sample_statistic(_betti(x1, rule, scaling, collapse),
                               _betti(y1, rule, scaling, collapse))
    return null, alt


def two_sample_power(sampler1, sampler2, rule, alpha=0.05, r=100, n=200,
                     seed=0, scaling='per_point_norm',
                     quantile='one_minus_half_alpha', collapse=True,
                     threads=1, verbose=False):
    """Monte Carlo power of the two-sample test.

    Under the null both samples come from *sampler1*; under the alternative
    the first comes from *sampler1* and the second from *sampler2*.

    Parameters
    ----------
    sampler1, sampler2 : DistributionSpec, preset name, dict or callable
    rule : ThresholdRule
    n : int or pair of int
      Common sample size, or the sizes (n1, n2).
    alpha, r, seed, scaling, quantile, collapse, threads, verbose
      As in :func:`one_sample_power`.

    Returns
    -------
    estimate : PowerEstimate
    """
    if r < 1:
        raise ValueError('r must be >= 1')
    n1, n2 = sample_sizes(n)
    worker = partial(_two_sample_power_replicate, first=_resolve(sampler1),
                     second=_resolve(sampler2), rule=rule, seed=seed, n1=n1,
                     n2=n2, scaling=scaling, collapse=collapse)
    stats = map_replications(worker, range(r), threads)
    estimate = _power([s[0] for s in stats], [s[1] for s in stats], alpha,
                      quantile, n=n1, n2=n2, seed=seed, regime=rule.regime)
    if verbose:
        print('two-sample power at n = (%d, %d): %g'
              % (n1, n2, estimate.power), file=sys.stderr)
    return estimate


def _components_replicate(index, spec, rule, seed, n, scaling):
    rng = replication_rng(seed, index)
    pc = scale_points(_draw(spec, n, rng), scaling)
    return connected_components(build_rips(pc, rule(n), max_dim=1))


def _component_counts(sampler, rule, n_list, reps, seed, scaling, threads,
                      verbose):
    if reps < 1:
        raise ValueError('reps must be >= 1')
    spec = _resolve(sampler)
    counts = []
    for n in n_list:
        worker = partial(_components_replicate, spec=spec, rule=rule,
                         seed=seed, n=int(n), scaling=scaling)
        counts.append(np.array(map_replications(worker, range(reps), threads)))
        if verbose:
            print('n = %d: %d replications done' % (n, reps), file=sys.stderr)
    return counts


def check_disconnection(sampler, rule, n_list, reps=50, seed=0,
                        scaling='none', threads=1, verbose=False):
    """Fraction of disconnected Rips complexes at radius ``rule(n)``.

    Parameters
    ----------
    sampler : DistributionSpec, preset name, dict or callable
    rule : ThresholdRule
    n_list : sequence of int
      Sample sizes.
    reps : int, optional
      Replications per sample size, >= 1.
    seed : int, optional
    scaling : str, optional
      Preprocessing (none by default).
    threads : int, optional
    verbose : bool, optional

    Returns
    -------
    table : astropy.table.Table
      Columns ``n``, ``reps``, ``epsilon`` and ``fraction_disconnected``.
    """
    counts = _component_counts(sampler, rule, n_list, reps, seed, scaling,
                               threads, verbose)
    return Table([[int(n) for n in n_list], [int(reps)] * len(n_list),
                  [rule(n) for n in n_list],
                  [float(np.mean(c > 1)) for c in counts]],
                 names=('n', 'reps', 'epsilon', 'fraction_disconnected'))


def component_density(sampler, rule, n_list, reps=50, seed=0, scaling='none',
                      threads=1, verbose=False):
    """Mean number of connected components per point, beta_0 / n.

    In the critical regime this ratio converges to a positive constant;
    in the supercritical one it goes to 0.

    Returns
    -------
    table : astropy.table.Table
      Columns ``n``, ``reps``, ``epsilon``, ``mean_b0_over_n`` and
      ``std_b0_over_n``.
    """
    counts = _component_counts(sampler, rule, n_list, reps, seed, scaling,
                               threads, verbose)
    ratios = [c / float(n) for c, n in zip(counts, n_list)]
    return Table([[int(n) for n in n_list], [int(reps)] * len(n_list),
                  [rule(n) for n in n_list],
                  [float(np.mean(q)) for q in ratios],
                  [float(np.std(q)) for q in ratios]],
                 names=('n', 'reps', 'epsilon', 'mean_b0_over_n',
                        'std_b0_over_n'))
