import json
import unittest

import numpy as np
from scipy import stats

from ..sampler import *


class TestParseSpec(unittest.TestCase):

    def test_presets(self):
        for name in PRESETS:
            spec = parse_spec(name)
            self.assertIn(spec.kind, KINDS)
            pc = sample(spec, 7, seed=0)
            self.assertEqual((pc.n, pc.d), (7, spec.ambient_dim))

    def test_sources(self):
        spec = parse_spec('torus')
        self.assertIs(parse_spec(spec), spec)
        self.assertEqual(parse_spec({'kind': 'torus'}), spec)
        self.assertEqual(parse_spec(json.dumps({'kind': 'torus', 'R': 3.})).R, 3.)

    def test_defaults(self):
        spec = parse_spec('circle_vonmises')
        np.testing.assert_allclose(spec.weights, [1. / 3, 2. / 3])
        self.assertEqual(spec.kappas, [3., 4.])
        spec = parse_spec('normal_3d')
        self.assertEqual(spec.mean, [0., 0., 0.])
        self.assertEqual(spec.cov, [[1., .5, .5], [.5, 1., .5], [.5, .5, 1.]])

    def test_violations(self):
        with self.assertRaises(InvalidSpecError) as cm:
            parse_spec({'kind': 'vonmises_mixture_circle', 'weights': [.5, .6],
                        'kappas': [-1., 2.]})
        self.assertEqual(len(cm.exception.violations), 2)
        self.assertTrue(cm.exception.violations[0].startswith('weights must sum'))
        self.assertEqual(cm.exception.violations[1], 'kappas must be > 0')
        with self.assertRaises(InvalidSpecError) as cm:
            parse_spec({'kind': 'mvn', 'cov': [[1., 2.], [2., 1.]]})
        self.assertEqual(cm.exception.violations, ['cov must be positive definite'])
        with self.assertRaises(InvalidSpecError) as cm:
            parse_spec({'kind': 'torus', 'R': 1., 'r': 1.})
        self.assertEqual(cm.exception.violations,
                         ['torus radii must satisfy 0 < r < R < inf'])

    def test_invalid_sources(self):
        self.assertRaises(InvalidSpecError, parse_spec, 'klein_bottle')
        self.assertRaises(InvalidSpecError, parse_spec, '{"kind": ')
        self.assertRaises(InvalidSpecError, parse_spec, 3)
        self.assertRaises(InvalidSpecError, parse_spec, {'kind': 'cone'})
        self.assertRaises(InvalidSpecError, parse_spec,
                          {'kind': 'torus', 'radius': 1.})
        self.assertRaises(InvalidSpecError, parse_spec,
                          {'kind': 'uniform_disk', 'noise': -1.})
        self.assertRaises(ValueError, parse_spec, 'klein_bottle')


class TestSample(unittest.TestCase):

    def test_deterministic(self):
        for name in PRESETS:
            a = sample(name, 20, seed=3)
            b = sample(name, 20, seed=3)
            np.testing.assert_array_equal(a.points, b.points)
        rng = np.random.default_rng(5)
        a = sample('disk', 10, rng)
        b = sample('disk', 10, rng)
        self.assertFalse(np.array_equal(a.points, b.points))
        self.assertRaises(ValueError, sample, 'disk', 0)

    def test_torus(self):
        for area_uniform in (False, True):
            spec = {'kind': 'torus', 'R': 2., 'r': 1., 'area_uniform': area_uniform}
            p = sample(spec, 1000, seed=1).points
            ring = np.hypot(p[:, 0], p[:, 1])
            np.testing.assert_allclose((ring - 2.) ** 2 + p[:, 2] ** 2, 1.,
                                       rtol=0, atol=1e-9)

    def test_torus_area_uniform(self):
        spec = {'kind': 'torus', 'area_uniform': True}
        p = sample(spec, 20000, seed=2).points
        outer = np.mean(np.hypot(p[:, 0], p[:, 1]) > 2.)
        self.assertAlmostEqual(outer, (np.pi * 2. + 2.) / (2. * np.pi * 2.),
                               delta=0.02)
        p = sample('torus', 20000, seed=2).points
        self.assertAlmostEqual(np.mean(np.hypot(p[:, 0], p[:, 1]) > 2.), 0.5,
                               delta=0.02)

    def test_supports(self):
        for name in ('circle', 'sphere', 'circle_vonmises', 'sphere_vmf'):
            p = sample(name, 500, seed=4).points
            np.testing.assert_allclose(np.linalg.norm(p, axis=1), 1.,
                                       rtol=0, atol=1e-12)
        p = sample('disk', 500, seed=4).points
        self.assertTrue(np.all(np.linalg.norm(p, axis=1) <= 1.))
        for name, dim in (('square', 2), ('cube', 3)):
            p = sample(name, 500, seed=4).points
            self.assertEqual(p.shape, (500, dim))
            self.assertTrue(np.all((p >= 0) & (p < 1)))
        p = sample({'kind': 'uniform_sphere_surface', 'dim': 5}, 50, 4).points
        self.assertEqual(p.shape, (50, 5))

    def test_labels(self):
        pc = sample('circle_vonmises', 3000, seed=6)
        self.assertEqual(set(pc.labels.tolist()), {0, 1})
        self.assertAlmostEqual(np.mean(pc.labels == 1), 2. / 3, delta=0.03)
        self.assertIsNone(sample('disk', 5, seed=6).labels)

    def test_vonmises_law(self):
        spec = {'kind': 'vonmises_mixture_circle', 'weights': [1.],
                'means': [[0., 2.]], 'kappas': [2.]}
        p = sample(spec, 20000, seed=7).points
        theta = np.arctan2(p[:, 1], p[:, 0])
        self.assertAlmostEqual(stats.circmean(theta, low=-np.pi, high=np.pi),
                               np.pi / 2, delta=0.05)
        # angles relative to the mean direction, in (-pi, pi]
        phi = np.angle(np.exp(1j * (theta - np.pi / 2)))
        edges = np.linspace(-np.pi, np.pi, 37)
        observed, _ = np.histogram(phi, edges)
        expected = np.diff(stats.vonmises.cdf(edges, 2.))
        expected *= observed.sum() / expected.sum()
        self.assertGreater(stats.chisquare(observed, expected).pvalue, 1e-3)

    def test_vmf_law(self):
        kappa = 5.
        spec = {'kind': 'vmf_mixture_sphere', 'weights': [1.],
                'means': [[0., 0., 3.]], 'kappas': [kappa]}
        p = sample(spec, 20000, seed=8).points
        mean_cos = 1. / np.tanh(kappa) - 1. / kappa
        self.assertAlmostEqual(p[:, 2].mean(), mean_cos, delta=0.01)
        self.assertAlmostEqual(p[:, 0].mean(), 0., delta=0.02)

    def test_mvn(self):
        p = sample('normal_2d', 20000, seed=9).points
        np.testing.assert_allclose(np.cov(p.T), [[1., .5], [.5, 1.]], atol=0.05)
        np.testing.assert_allclose(p.mean(axis=0), 0., atol=0.05)

    def test_noise(self):
        clean = sample('circle', 100, seed=10).points
        noisy = sample({'kind': 'uniform_sphere_surface', 'dim': 2,
                        'noise': 0.1}, 100, seed=10).points
        self.assertFalse(np.allclose(np.linalg.norm(noisy, axis=1), 1.))
        self.assertEqual(clean.shape, noisy.shape)


if __name__ == '__main__':
    unittest.main()
