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
"""bettipy tests whether distribution supports are homologically equivalent,
from point cloud samples: Rips and Cech complexes, Betti numbers and
persistence over GF(2), one- and two-sample Betti number tests with Monte
Carlo power, and persistence based baseline tests.
"""

from .version import __version__

from .pointfunc import (PointCloud, as_points, normalize_by_norm,
                        scale_points, pairwise_distances,
                        check_distance_matrix, ZeroNormPointError)

from .complexfunc import (SimplicialComplex, FilteredComplex, UnionFind,
                          build_rips, build_collapsed_rips, build_cech,
                          build_rips_filtration, is_connected,
                          connected_components, strong_collapse,
                          minimal_enclosing_radius,
                          UnsupportedDimensionError, InvalidFiltrationError)

from .homolfunc import (GF2Matrix, PersistenceDiagram, boundary_matrix,
                        betti_numbers, reduce_filtration, persistent_betti,
                        OrderViolationError)

from .statfunc import (epsilon_critical, epsilon_supercritical, ThresholdRule,
                       one_sample_statistic, two_sample_statistic,
                       estimate_critical_value, estimate_betti,
                       one_sample_test, two_sample_test, one_sample_power,
                       two_sample_power, check_disconnection,
                       component_density, TestReport, PowerEstimate,
                       BettiTestWarning)

from .sampler import DistributionSpec, PRESETS, parse_spec, sample, InvalidSpecError

from .baseline import (wasserstein_distance, landscape, mean_landscape,
                       persistence_diagram, permutation_two_sample_test,
                       baseline_power, LandscapeFunction,
                       PermutationTestResult)

from .csvfunc import (load_point_cloud, write_point_cloud, read_diagram,
                      write_diagram, read_power_table, write_power_table,
                      read_report, write_report, ParseError, EmptyFileError)

from .config import ExperimentConfig, load_config, ConfigError, experiments
