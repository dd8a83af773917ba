import os
import unittest

import numpy as np

from ..homolfunc import PersistenceDiagram
from ..sampler import sample
from ..baseline import *

slow = unittest.skipUnless(os.environ.get('BETTIPY_RUN_SLOW'),
                           'slow Monte Carlo test, set BETTIPY_RUN_SLOW=1')


def random_diagram(rng, size):
    births = rng.random(size)
    return np.column_stack((births, births + rng.random(size)))


def brute_force_wasserstein(x, y, p):
    """Cheapest partial matching, every unmatched point going to the diagonal."""
    def diagonal(pt):
        return ((pt[1] - pt[0]) / 2.) ** p

    def best(i, free):
        if i == len(x):
            return sum(diagonal(y[j]) for j in free)
        cost = diagonal(x[i]) + best(i + 1, free)
        for j in free:
            match = max(abs(x[i][0] - y[j][0]), abs(x[i][1] - y[j][1])) ** p
            cost = min(cost, match + best(i + 1, free - {j}))
        return cost

    return best(0, frozenset(range(len(y))))


class TestWasserstein(unittest.TestCase):

    def test_examples(self):
        empty = np.empty((0, 2))
        self.assertEqual(wasserstein_distance(empty, empty), 0.)
        self.assertEqual(wasserstein_distance([[0., 2.]], empty), 1.)
        self.assertEqual(wasserstein_distance([[1., 1.]], empty), 0.)
        self.assertEqual(wasserstein_distance([[0., np.inf]], empty), 0.)
        self.assertEqual(wasserstein_distance([[0., 2.]], [[0., 2.5]]), 0.5)
        # matching costs 3, two diagonal projections cost 1 + 1
        self.assertEqual(wasserstein_distance([[0., 2.]], [[3., 5.]]), 2.)
        self.assertAlmostEqual(wasserstein_distance([[0., 2.]], empty, p=2.),
                               1.)
        self.assertRaises(ValueError, wasserstein_distance, empty, empty, p=0.5)

    def test_brute_force(self):
        rng = np.random.default_rng(0)
        for i in range(1000):
            p = 1. if i % 2 else 2.
            x = random_diagram(rng, rng.integers(0, 5))
            y = random_diagram(rng, rng.integers(0, 5))
            expected = brute_force_wasserstein(x.tolist(), y.tolist(), p)
            self.assertAlmostEqual(wasserstein_distance(x, y, p=p, q=p),
                                   expected, delta=1e-9)

    def test_metric(self):
        rng = np.random.default_rng(1)
        for _ in range(300):
            a, b, c = [random_diagram(rng, rng.integers(0, 6)) for _ in range(3)]
            for p in (1., 2.):
                ab = wasserstein_distance(a, b, p=p)
                self.assertGreaterEqual(ab, 0.)
                self.assertAlmostEqual(ab, wasserstein_distance(b, a, p=p), delta=1e-9)
                self.assertAlmostEqual(wasserstein_distance(a, a, p=p), 0., delta=1e-12)
                self.assertLessEqual(wasserstein_distance(a, c, p=p),
                                     ab + wasserstein_distance(b, c, p=p) + 1e-9)

    def test_diagram_input(self):
        dg = PersistenceDiagram([0, 0, 1], [0., 0., 1.], [2., np.inf, 3.])
        self.assertEqual(wasserstein_distance(dg, np.empty((0, 2)), dim=0), 1.)
        self.assertEqual(wasserstein_distance(dg, np.empty((0, 2)), dim=1), 1.)
        self.assertRaises(ValueError, wasserstein_distance, dg,
                          np.empty((0, 2)))
        h0 = dg.restrict(0)
        self.assertEqual(wasserstein_distance(h0, np.empty((0, 2))), 1.)


class TestLandscape(unittest.TestCase):

    def test_triangle(self):
        grid = [0., 0.5, 1., 1.5, 2.]
        l1 = landscape([[0., 2.]], 1, grid)
        self.assertEqual(np.max(np.abs(l1.values - [0., 0.5, 1., 0.5, 0.])), 0.)
        self.assertEqual(l1.mean(), 0.4)
        self.assertEqual(landscape([[0., 2.]], 2, grid).values.tolist(), [0.] * 5)

    def test_two_pairs(self):
        grid = np.linspace(0., 4., 9)
        dg = [[0., 2.], [1., 3.]]
        np.testing.assert_array_equal(landscape(dg, 1, grid).values,
                                      [0., .5, 1., .5, 1., .5, 0., 0., 0.])
        np.testing.assert_array_equal(landscape(dg, 2, grid).values,
                                      [0., 0., 0., .5, 0., 0., 0., 0., 0.])

    def test_ordering(self):
        rng = np.random.default_rng(2)
        grid = landscape_grid(2., 200)
        for _ in range(100):
            dg = random_diagram(rng, rng.integers(1, 8))
            values = [landscape(dg, k, grid).values for k in range(1, 5)]
            for upper, lower in zip(values, values[1:]):
                self.assertTrue(np.all(upper >= lower))
            self.assertTrue(np.all(values[-1] >= 0))

    def test_stability(self):
        rng = np.random.default_rng(3)
        grid = landscape_grid(3., 300)
        delta = 0.02
        for _ in range(100):
            births = rng.random(5)
            dg = np.column_stack((births, births + 0.1 + rng.random(5)))
            moved = dg + rng.uniform(-delta, delta, dg.shape)
            for k in (1, 2):
                diff = (landscape(dg, k, grid).values
                        - landscape(moved, k, grid).values)
                self.assertLessEqual(np.abs(diff).max(), delta + 1e-12)

    def test_lipschitz(self):
        rng = np.random.default_rng(4)
        grid = landscape_grid(2., 150)
        steps = np.diff(grid)
        for _ in range(100):
            dg = random_diagram(rng, rng.integers(1, 8))
            for k in (1, 2, 3):
                jumps = np.abs(np.diff(landscape(dg, k, grid).values))
                self.assertTrue(np.all(jumps <= steps + 1e-12))

    def test_mean_landscape(self):
        grid = [0., 1., 2.]
        mean = mean_landscape([[[0., 2.]], np.empty((0, 2))], 1, grid)
        self.assertEqual(mean.values.tolist(), [0., .5, 0.])
        self.assertRaises(ValueError, mean_landscape, [], 1, grid)

    def test_invalid(self):
        self.assertRaises(ValueError, landscape, [[0., 1.]], 0, [0., 1.])
        self.assertRaises(ValueError, LandscapeFunction, 1, [1., 0.], [0., 0.])
        self.assertRaises(ValueError, LandscapeFunction, 1, [0., 1.], [0., -1.])
        self.assertEqual(len(landscape_grid()), 1000)
        self.assertEqual(landscape_grid(4., 5).tolist(), [0., 1., 2., 3., 4.])


class TestPersistenceDiagram(unittest.TestCase):

    def test_circle(self):
        theta = np.linspace(0., 2. * np.pi, 12, endpoint=False)
        points = np.column_stack((np.cos(theta), np.sin(theta)))
        dg = persistence_diagram(points)
        self.assertEqual(dg.num_essential(0), 1)
        deaths = dg.pairs(dim=0, finite=True)[:, 1]
        np.testing.assert_allclose(deaths, 2. * np.sin(np.pi / 12))
        h1 = dg.pairs(dim=1, finite=True)
        self.assertEqual(np.count_nonzero(h1[:, 1] - h1[:, 0] > 0.5), 1)


class TestPermutationTest(unittest.TestCase):

    def setUp(self):
        self.x = sample('circle', 15, seed=1)
        self.y = sample('disk', 15, seed=2)

    def test_p_value(self):
        for loss in LOSSES:
            result = permutation_two_sample_test(self.x, self.y, loss=loss,
                                                 n_perm=9, seed=3,
                                                 grid_size=100)
            self.assertEqual(result.loss, loss)
            self.assertEqual(len(result.permutation_losses), 9)
            self.assertGreaterEqual(result.p_value, 0.1)
            self.assertLessEqual(result.p_value, 1.)
            exceed = sum(v >= result.observed_loss
                         for v in result.permutation_losses)
            self.assertEqual(result.p_value, (1. + exceed) / 10.)

    def test_identical_samples(self):
        result = permutation_two_sample_test(self.x, self.x, n_perm=5)
        self.assertEqual(result.observed_loss, 0.)
        self.assertEqual(result.p_value, 1.)

    def test_deterministic(self):
        a = permutation_two_sample_test(self.x, self.y, n_perm=5, seed=4)
        b = permutation_two_sample_test(self.x, self.y, n_perm=5, seed=4)
        self.assertEqual(a, b)

    def test_swap_samples(self):
        for seed in range(5):
            for loss in LOSSES:
                xy = permutation_two_sample_test(self.x, self.y, loss=loss,
                                                 n_perm=19, seed=seed,
                                                 grid_size=100)
                yx = permutation_two_sample_test(self.y, self.x, loss=loss,
                                                 n_perm=19, seed=seed,
                                                 grid_size=100)
                self.assertEqual(xy, yx)

    def check_exchangeable(self, n, n_perm, trials):
        accepted = 0
        for seed in range(trials):
            x = sample('circle', n, seed=seed).points
            y = x[np.random.default_rng(seed).permutation(n)]
            result = permutation_two_sample_test(x, y, n_perm=n_perm, seed=seed)
            accepted += result.p_value > 0.05
        self.assertGreaterEqual(accepted, 0.9 * trials)

    def check_circle_vs_segment(self, n, n_perm, trials):
        rejected = 0
        for seed in range(trials):
            rng = np.random.default_rng(seed)
            circle = sample('circle', n, seed=rng)
            segment = np.column_stack((rng.uniform(-1., 1., n), np.zeros(n)))
            result = permutation_two_sample_test(circle, segment,
                                                 loss='wasserstein_plain',
                                                 n_perm=n_perm, seed=seed)
            rejected += result.p_value <= 0.1
        self.assertGreaterEqual(rejected, 0.8 * trials)

    def test_exchangeable(self):
        self.check_exchangeable(20, 30, 10)

    def test_circle_vs_segment(self):
        self.check_circle_vs_segment(20, 19, 5)

    @slow
    def test_exchangeable_full(self):
        self.check_exchangeable(100, 30, 10)

    @slow
    def test_circle_vs_segment_full(self):
        self.check_circle_vs_segment(100, 30, 10)

    def test_invalid(self):
        self.assertRaises(ValueError, permutation_two_sample_test, self.x,
                          self.y, loss='bottleneck')
        self.assertRaises(ValueError, permutation_two_sample_test, self.x,
                          self.y, n_perm=0)
        self.assertRaises(ValueError, permutation_two_sample_test, self.x,
                          sample('sphere', 5, seed=0))
        self.assertRaises(ValueError, PermutationTestResult, loss='x',
                          observed_loss=1., permutation_losses=[2., 0.],
                          p_value=1., n_permutations=2, seed=0)


class TestBaselinePower(unittest.TestCase):

    def test_estimate(self):
        for method in METHODS:
            est = baseline_power(method, 'circle', 'normal_2d', n=12, r=3,
                                 n_perm=4, grid_size=50, seed=5)
            self.assertEqual(est.method, method)
            self.assertEqual(est.r, 3)
            self.assertEqual(est.critical_value, 0.05)
            self.assertEqual(len(est.alt_statistics), 3)
            self.assertTrue(all(0.2 <= pv <= 1. for pv in est.alt_statistics))
            # with 4 permutations no p-value reaches 0.05
            self.assertEqual(est.power, 0.)
        self.assertRaises(ValueError, baseline_power, 'bootstrap', 'circle',
                          'disk')

    def test_deterministic(self):
        a = baseline_power('landscape', 'circle', 'disk', n=(10, 12), r=2,
                           n_perm=3, grid_size=20, seed=6)
        b = baseline_power('landscape', 'circle', 'disk', n=(10, 12), r=2,
                           n_perm=3, grid_size=20, seed=6)
        self.assertEqual(a, b)
        self.assertEqual((a.n, a.n2), (10, 12))


if __name__ == '__main__':
    unittest.main()
