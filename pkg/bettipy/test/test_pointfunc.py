import unittest

import numpy as np

from ..pointfunc import *


class TestPointCloud(unittest.TestCase):

    def test_shape(self):
        pc = PointCloud([[0., 0., 1.], [1., 2., 3.]])
        self.assertEqual((pc.n, pc.d), (2, 3))
        self.assertEqual(len(pc), 2)
        self.assertIsNone(pc.labels)

    def test_invalid(self):
        self.assertRaises(ValueError, PointCloud, [1., 2.])
        self.assertRaises(ValueError, PointCloud, np.empty((0, 2)))
        self.assertRaises(ValueError, PointCloud, np.empty((3, 0)))
        self.assertRaises(ValueError, PointCloud, [[0., np.nan]])
        self.assertRaises(ValueError, PointCloud, [[0., 1.]], labels=[0, 1])

    def test_read_only(self):
        pc = PointCloud([[0., 1.]], labels=[3])
        with self.assertRaises(ValueError):
            pc.points[0, 0] = 5.
        self.assertEqual(pc.with_points([[2., 2.]]).labels.tolist(), [3])

    def test_as_points(self):
        points = as_points([[1, 2], [3, 4]])
        self.assertEqual(points.dtype, np.float64)
        np.testing.assert_array_equal(np.asarray(PointCloud(points)), points)


class TestScaling(unittest.TestCase):

    def setUp(self):
        self.rng = np.random.default_rng(12)

    def test_normalize_by_norm(self):
        np.testing.assert_allclose(normalize_by_norm([[3., 4.]]).points,
                                   [[0.6, 0.8]], rtol=0, atol=1e-15)

    def test_unit_vectors_unchanged(self):
        pc = normalize_by_norm([[1., 0.], [0., 1.]])
        np.testing.assert_array_equal(pc.points, [[1., 0.], [0., 1.]])

    def test_zero_norm(self):
        with self.assertRaises(ZeroNormPointError) as cm:
            normalize_by_norm([[0., 0.]])
        self.assertEqual(cm.exception.index, 0)
        with self.assertRaises(ZeroNormPointError) as cm:
            normalize_by_norm([[1., 0.], [2., 2.], [1e-13, 0.]])
        self.assertEqual(cm.exception.index, 2)

    def test_unit_norm_and_idempotence(self):
        for _ in range(100):
            pc = PointCloud(self.rng.normal(size=(20, 3)) * 10.)
            once = normalize_by_norm(pc)
            twice = normalize_by_norm(once)
            norms = np.linalg.norm(once.points, axis=1)
            self.assertTrue(np.all(np.abs(norms - 1.) < 1e-12))
            self.assertTrue(np.all(np.abs(twice.points - once.points) < 1e-12))

    def test_scale_points_modes(self):
        pc = PointCloud([[3., 4.], [0., 1.]])
        self.assertIs(scale_points(pc, 'none'), pc)
        np.testing.assert_allclose(scale_points(pc, 'max_norm').points,
                                   [[0.6, 0.8], [0., 0.2]])
        np.testing.assert_allclose(scale_points(pc, 'per_point_norm').points,
                                   [[0.6, 0.8], [0., 1.]])
        self.assertRaises(ValueError, scale_points, pc, 'unit')
        self.assertRaises(ZeroNormPointError, scale_points, [[0., 0.]],
                          'max_norm')

    def test_labels_survive_scaling(self):
        pc = PointCloud([[3., 4.], [0., 2.]], labels=[0, 1])
        self.assertEqual(scale_points(pc).labels.tolist(), [0, 1])


class TestDistances(unittest.TestCase):

    def test_examples(self):
        self.assertEqual(pairwise_distances([[0., 0.], [3., 4.]])[0, 1], 5.)
        np.testing.assert_array_equal(pairwise_distances([[1., 2.]]), [[0.]])
        dm = pairwise_distances([[0., 0.], [1., 0.], [0., 1.]])
        np.testing.assert_allclose(sorted(dm[np.triu_indices(3, 1)]),
                                   [1., 1., np.sqrt(2.)])

    def test_metric_properties(self):
        rng = np.random.default_rng(2024)
        for _ in range(1000):
            n = rng.integers(1, 51)
            d = rng.integers(1, 6)
            dm = pairwise_distances(rng.normal(size=(n, d)))
            self.assertTrue(np.array_equal(dm, dm.T))
            self.assertTrue(np.all(np.diagonal(dm) == 0))
            through = dm[:, :, np.newaxis] + dm[np.newaxis, :, :]
            self.assertTrue(np.all(dm[:, np.newaxis, :] <= through + 1e-9))
            check_distance_matrix(dm)

    def test_check_distance_matrix(self):
        self.assertRaises(ValueError, check_distance_matrix, [[0., 1.]])
        self.assertRaises(ValueError, check_distance_matrix, [[0., 1.], [2., 0.]])
        self.assertRaises(ValueError, check_distance_matrix, [[1., 1.], [1., 0.]])
        self.assertRaises(ValueError, check_distance_matrix, [[0., -1.], [-1., 0.]])
        self.assertRaises(ValueError, check_distance_matrix, [[0., np.nan], [np.nan, 0.]])


if __name__ == '__main__':
    unittest.main()
