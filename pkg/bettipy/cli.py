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
"""Command line interface, ``bettipy <command> ...``.

Commands
--------

sample      draw a point cloud from a distribution
betti       Betti numbers of the Rips complex of a point cloud
test-one    one-sample test against hypothesized Betti numbers
test-two    two-sample test of two point clouds
power       power curves of an experiment configuration
baselines   persistence based permutation test of two point clouds
check-a2    fraction of disconnected Rips complexes per sample size

Data goes to stdout or to the requested files, messages to stderr. The
exit code is 0 on success and 1 on error.
"""

import argparse
import json
import os
import sys

import numpy as np

from .version import __version__
from .pointfunc import SCALING_MODES, scale_points
from .sampler import sample, PRESETS
from .homolfunc import as_betti_vector
from .statfunc import (ThresholdRule, REGIMES, QUANTILE_MODES, estimate_betti,
                       one_sample_test, two_sample_test, one_sample_power,
                       two_sample_power, check_disconnection,
                       component_density)
from .baseline import METHODS, LOSSES, permutation_two_sample_test, baseline_power
from .config import load_config
from .csvfunc import (load_point_cloud, write_point_cloud, write_power_table,
                      write_report, write_table, POWER_COLUMNS)
from .visufunc import plot_power_curves

__all__ = ['main', 'build_parser', 'power_rows']


def _betti_list(text):
    try:
        return as_betti_vector([int(v) for v in text.split(',')]).tolist()
    except ValueError:
        raise argparse.ArgumentTypeError('expected comma separated integers, '
                                         'got %r' % (text,))


def _add_rule_arguments(parser, required=True):
    parser.add_argument('--regime', choices=REGIMES, required=required,
                        help='threshold rule for the Rips radius')
    parser.add_argument('--tau', type=float, default=1.,
                        help='constant of the supercritical rule (default 1)')


def _add_test_arguments(parser):
    _add_rule_arguments(parser)
    parser.add_argument('--alpha', type=float, default=0.05)
    parser.add_argument('-r', '--replications', type=int, default=100,
                        dest='r', help='number of null replications')
    parser.add_argument('--seed', type=int, default=0)
    parser.add_argument('--scaling', choices=SCALING_MODES,
                        default='per_point_norm')
    parser.add_argument('--quantile', choices=QUANTILE_MODES,
                        default='one_minus_half_alpha')
    parser.add_argument('--no-collapse', action='store_false', dest='collapse',
                        help='build the full Rips complex')
    parser.add_argument('--json', metavar='FILE',
                        help='also write the report to FILE')


def _print_json(model, args):
    text = model.model_dump_json(indent=2)
    print(text)
    if getattr(args, 'json', None):
        write_report(args.json, model, overwrite=True)


def _emit_table(table, output):
    if output:
        write_table(output, table, overwrite=True)
    else:
        table.write(sys.stdout, format='ascii.csv')


def cmd_sample(args):
    pc = sample(args.dist, args.n, args.seed)
    if args.output:
        write_point_cloud(args.output, pc, overwrite=True)
    else:
        np.savetxt(sys.stdout, pc.points, fmt='%.17g', delimiter=',')


def cmd_betti(args):
    pc = scale_points(load_point_cloud(args.input, header=args.header),
                      args.scaling)
    max_dim = args.max_dim if args.max_dim is not None else pc.d
    if max_dim < 1:
        raise ValueError('--max-dim must be >= 1')
    if args.epsilon is not None:
        epsilon = args.epsilon
    else:
        epsilon = ThresholdRule(args.regime, pc.d, args.tau)(pc.n)
    betti = estimate_betti(pc, epsilon, max_dim, collapse=args.collapse)
    result = {'n': pc.n, 'd': pc.d, 'epsilon': epsilon, 'max_dim': max_dim,
              'betti': betti.tolist()}
    print(json.dumps(result))
    if args.json:
        with open(args.json, 'w') as f:
            json.dump(result, f, indent=2)
            f.write('\n')


def cmd_test_one(args):
    pc = load_point_cloud(args.input, header=args.header)
    rule = ThresholdRule(args.regime, pc.d, args.tau,
                         betti_dim=len(args.hypothesis))
    report = one_sample_test(pc, args.hypothesis, rule, alpha=args.alpha,
                             r=args.r, seed=args.seed, null_sampler=args.null,
                             scaling=args.scaling, quantile=args.quantile,
                             collapse=args.collapse, threads=args.threads)
    _print_json(report, args)


def cmd_test_two(args):
    x = load_point_cloud(args.x, header=args.header)
    y = load_point_cloud(args.y, header=args.header)
    rule = ThresholdRule(args.regime, x.d, args.tau, betti_dim=args.d)
    report = two_sample_test(x, y, rule, alpha=args.alpha, r=args.r,
                             seed=args.seed, null_sampler=args.null,
                             scaling=args.scaling, quantile=args.quantile,
                             collapse=args.collapse, threads=args.threads)
    _print_json(report, args)


def cmd_baselines(args):
    x = load_point_cloud(args.x, header=args.header)
    y = load_point_cloud(args.y, header=args.header)
    loss = args.loss or METHODS[args.method]
    result = permutation_two_sample_test(
        x, y, loss=loss, n_perm=args.n_perm, max_threshold=args.max_threshold,
        dim=args.dim, seed=args.seed, grid_size=args.grid_size,
        threads=args.threads)
    _print_json(result, args)


def power_rows(config, threads=1, verbose=False):
    """Runs the power experiment of *config*.

    Returns
    -------
    rows : list of dict
      One row per (method, n) with the power table columns.

    Raises
    ------
    ValueError
      if the configuration has no alternative distribution.
    """
    if config.alt is None:
        raise ValueError('scenario %s: a power experiment needs alt'
                         % config.scenario)
    rule = config.rule()
    rows = []
    for method in config.methods:
        for n in config.n_list:
            if method != 'betti':
                est = baseline_power(method, config.null, config.alt, n=n,
                                     r=config.baseline_r, alpha=config.alpha,
                                     seed=config.seed, n_perm=config.n_perm,
                                     max_threshold=config.max_threshold,
                                     dim=config.dim,
                                     scaling=config.baseline_scaling,
                                     grid_size=config.grid_size,
                                     threads=threads, verbose=verbose)
            elif config.test == 'one_sample':
                est = one_sample_power(config.null, config.alt,
                                       config.hypothesis, rule,
                                       alpha=config.alpha, r=config.r, n=n,
                                       seed=config.seed,
                                       scaling=config.scaling,
                                       quantile=config.quantile,
                                       threads=threads, verbose=verbose)
            else:
                est = two_sample_power(config.null, config.alt, rule,
                                       alpha=config.alpha, r=config.r, n=n,
                                       seed=config.seed,
                                       scaling=config.scaling,
                                       quantile=config.quantile,
                                       threads=threads, verbose=verbose)
            rows.append({'scenario': config.scenario, 'method': method,
                         'regime': config.regime, 'n': int(n), 'r': est.r,
                         'alpha': config.alpha, 'power': est.power,
                         'seed': config.seed})
    return rows


def cmd_power(args):
    config = load_config(args.config)
    output = args.output or config.output
    plot = args.plot or config.plot
    rows = power_rows(config, threads=args.threads, verbose=args.verbose)
    if output:
        write_power_table(output, rows, overwrite=True)
    else:
        print(','.join(POWER_COLUMNS))
        for row in rows:
            print(','.join(str(row[c]) for c in POWER_COLUMNS))
    if plot:
        plot_power_curves(rows, plot, alpha=config.alpha)


def cmd_check_a2(args):
    config = load_config(args.config)
    probe = component_density if args.density else check_disconnection
    table = probe(config.null, config.rule(), config.n_list, reps=config.reps,
                  seed=config.seed, scaling='none', threads=args.threads,
                  verbose=args.verbose)
    _emit_table(table, args.output or config.output)


def build_parser():
    parser = argparse.ArgumentParser(
        prog='bettipy',
        description='Homological equivalence tests from point cloud samples.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + __version__)
    parser.add_argument('--threads', type=int, default=os.cpu_count() or 1,
                        help='worker processes (default: available CPUs)')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='print progress to stderr')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('sample', help='draw a point cloud')
    p.add_argument('dist', help='preset name (%s) or JSON object'
                   % ', '.join(sorted(PRESETS)))
    p.add_argument('-n', type=int, required=True, help='number of points')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('-o', '--output', help='CSV file (default: stdout)')
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser('betti', help='Betti numbers of a point cloud')
    p.add_argument('input', help='CSV point cloud')
    p.add_argument('--header', action='store_true',
                   help='the first line is a header')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--epsilon', type=float, help='ball radius')
    group.add_argument('--regime', choices=REGIMES,
                       help='threshold rule for the ball radius')
    p.add_argument('--tau', type=float, default=1.)
    p.add_argument('--max-dim', type=int, dest='max_dim',
                   help='complex dimension and number of Betti numbers '
                   '(default: ambient dimension)')
    p.add_argument('--scale', choices=SCALING_MODES, default='none',
                   dest='scaling')
    p.add_argument('--no-collapse', action='store_false', dest='collapse')
    p.add_argument('--json', metavar='FILE')
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser('test-one', help='one-sample Betti number test')
    p.add_argument('input', help='CSV point cloud')
    p.add_argument('--header', action='store_true')
    p.add_argument('--null', required=True,
                   help='null distribution (preset name or JSON object)')
    p.add_argument('--hypothesis', type=_betti_list, required=True,
                   help='hypothesized Betti numbers, e.g. 1,1')
    _add_test_arguments(p)
    p.set_defaults(func=cmd_test_one)

    p = sub.add_parser('test-two', help='two-sample Betti number test')
    p.add_argument('x', help='first CSV point cloud')
    p.add_argument('y', help='second CSV point cloud')
    p.add_argument('--header', action='store_true')
    p.add_argument('--null', help='null distribution; pooled relabeling '
                   'when omitted')
    p.add_argument('-d', type=int, help='number of Betti numbers '
                   '(default: ambient dimension)')
    _add_test_arguments(p)
    p.set_defaults(func=cmd_test_two)

    p = sub.add_parser('power', help='power curves of an experiment')
    p.add_argument('config', help='JSON experiment configuration or '
                   'bundled experiment name')
    p.add_argument('-o', '--output', help='power CSV (default: config output '
                   'or stdout)')
    p.add_argument('--plot', metavar='SVG', help='plot power against n')
    p.set_defaults(func=cmd_power)

    p = sub.add_parser('baselines', help='persistence permutation test')
    p.add_argument('x')
    p.add_argument('y')
    p.add_argument('--header', action='store_true')
    p.add_argument('--method', choices=sorted(METHODS), default='robinson')
    p.add_argument('--loss', choices=LOSSES,
                   help='loss function (overrides --method)')
    p.add_argument('--n-perm', type=int, default=30, dest='n_perm')
    p.add_argument('--max-threshold', type=float, default=4.,
                   dest='max_threshold')
    p.add_argument('--dim', type=int, default=1)
    p.add_argument('--grid-size', type=int, default=1000, dest='grid_size')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--json', metavar='FILE')
    p.set_defaults(func=cmd_baselines)

    p = sub.add_parser('check-a2', help='disconnection probe of the Rips '
                       'complex')
    p.add_argument('config', help='JSON experiment configuration (null '
                   'distribution, regime, n_list, reps, seed)')
    p.add_argument('-o', '--output')
    p.add_argument('--density', action='store_true',
                   help='report mean beta_0 / n instead')
    p.set_defaults(func=cmd_check_a2)
    return parser


def main(argv=None):
    """Entry point of the ``bettipy`` command; returns the exit code."""
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, OSError) as e:
        print('bettipy: error: %s' % e, file=sys.stderr)
        return 1
    return 0
