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
visufunc.py : power curve plots
=====================================================

- :func:`plot_power_curves` power against sample size, one line per
  (scenario, method), optionally saved as SVG
"""

__all__ = ['plot_power_curves']

import numpy as np
from matplotlib import rc_context
from matplotlib.figure import Figure
from matplotlib.backends.backend_agg import FigureCanvasAgg


def plot_power_curves(rows, filename=None, title=None, alpha=None,
                      figsize=(6., 4.)):
    """Plots estimated power against the sample size.

    Parameters
    ----------
    rows : sequence of dict
      Power table rows (see :func:`bettipy.csvfunc.read_power_table`),
      with at least the keys ``scenario``, ``method``, ``n`` and ``power``.
    filename : str, optional
      If given, the figure is written there; the format follows the
      extension (``.svg`` for a standalone SVG file).
    title : str, optional
      Figure title (default: the scenario names).
    alpha : float, optional
      If given, a horizontal line is drawn at the level of the test.
    figsize : tuple, optional

    Returns
    -------
    fig : matplotlib.figure.Figure
    """
    rows = list(rows)
    if not rows:
        raise ValueError('no power estimate to plot')
    fig = Figure(figsize=figsize)
    FigureCanvasAgg(fig)
    ax = fig.add_subplot(1, 1, 1)
    curves = {}
    for row in rows:
        curves.setdefault((row['scenario'], row['method']), []).append(
            (int(row['n']), float(row['power'])))
    for (scenario, method), points in sorted(curves.items()):
        points.sort()
        n, power = np.array(points).T
        label = method if len(set(s for s, _ in curves)) == 1 else \
            '%s (%s)' % (scenario, method)
        ax.plot(n, power, marker='o', label=label)
    if alpha is not None:
        ax.axhline(alpha, color='grey', linestyle='--', linewidth=0.8)
    ax.set_xlabel('sample size n')
    ax.set_ylabel('estimated power')
    ax.set_ylim(-0.02, 1.02)
    ax.legend(loc='best')
    if title is None:
        title = ', '.join(sorted(set(s for s, _ in curves)))
    ax.set_title(title)
    if filename is not None:
        # no date and a fixed id salt: identical runs give identical files
        with rc_context({'svg.hashsalt': 'bettipy'}):
            if str(filename).lower().endswith('.svg'):
                fig.savefig(filename, metadata={'Date': None})
            else:
                fig.savefig(filename)
    return fig
