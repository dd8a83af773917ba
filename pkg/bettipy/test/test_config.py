import json
import os
import shutil
import tempfile
import unittest

from ..statfunc import ThresholdRule
from ..config import *


class TestExperimentConfig(unittest.TestCase):

    def setUp(self):
        self.data = {'schema': 1, 'scenario': 'circle_vs_normal',
                     'test': 'one_sample', 'null': 'circle_vonmises',
                     'alt': 'normal_2d', 'hypothesis': [1, 1],
                     'regime': 'critical', 'alpha': 0.05, 'r': 100,
                     'n_list': [20, 50, 100, 150, 200], 'seed': 0}

    def test_valid(self):
        config = load_config(self.data)
        self.assertEqual(config.schema_version, SCHEMA_VERSION)
        self.assertEqual(config.null.kind, 'vonmises_mixture_circle')
        self.assertEqual(config.betti_dim, 2)
        self.assertEqual(config.rule(), ThresholdRule('critical', 2))
        self.assertEqual(config.methods, ['betti'])

    def test_defaults(self):
        config = load_config({'scenario': 'disk_vs_square', 'null': 'disk',
                              'alt': {'kind': 'uniform_square'}})
        self.assertEqual(config.test, 'two_sample')
        self.assertEqual(config.n_list, [20, 50, 100, 150, 200])
        self.assertEqual(config.r, 100)
        self.assertEqual(config.baseline_scaling, 'none')

    def test_rule_dimensions(self):
        config = load_config(dict(self.data, d=1, hypothesis=[1]))
        self.assertEqual(config.betti_dim, 1)
        self.assertEqual(config.rule(),
                         ThresholdRule('critical', 2, betti_dim=1))
        self.assertAlmostEqual(config.rule()(100), 0.1, delta=1e-12)

    def test_optional_alt(self):
        config = load_config({'scenario': 'square', 'null': 'square',
                              'regime': 'supercritical'})
        self.assertIsNone(config.alt)
        self.assertEqual(config.rule().d, 2)

    def test_file(self):
        tmpdir = tempfile.mkdtemp()
        try:
            filename = os.path.join(tmpdir, 'config.json')
            with open(filename, 'w') as f:
                json.dump(self.data, f)
            self.assertEqual(load_config(filename), load_config(self.data))
            with open(filename, 'w') as f:
                f.write('{"scenario": ')
            self.assertRaises(ConfigError, load_config, filename)
            with open(filename, 'w') as f:
                f.write('[1, 2]')
            self.assertRaises(ConfigError, load_config, filename)
        finally:
            shutil.rmtree(tmpdir)

    def test_violations_name_fields(self):
        self.data.update(alpha=1.5, n_list=[50, 20], reps=0)
        with self.assertRaises(ConfigError) as cm:
            load_config(self.data)
        fields = sorted(v.split(':')[0] for v in cm.exception.violations)
        self.assertEqual(fields, ['alpha', 'n_list', 'reps'])

    def test_distribution_errors(self):
        self.data['alt'] = {'kind': 'torus', 'R': 1., 'r': 2.}
        with self.assertRaises(ConfigError) as cm:
            load_config(self.data)
        self.assertEqual(cm.exception.violations,
                         ['alt: torus radii must satisfy 0 < r < R < inf'])

    def test_consistency(self):
        data = dict(self.data, alt='sphere')
        self.assertRaises(ConfigError, load_config, data)
        data = dict(self.data, hypothesis=[1, 1, 0])
        self.assertRaises(ConfigError, load_config, data)
        data = dict(self.data, methods=['betti', 'robinson'])
        self.assertRaises(ConfigError, load_config, data)
        data = dict(self.data, regime='supercritical', n_list=[1, 10])
        self.assertRaises(ConfigError, load_config, data)
        data = dict(self.data, hypothesis=None)
        self.assertRaises(ConfigError, load_config, data)

    def test_unknown_fields(self):
        self.assertRaises(ConfigError, load_config, dict(self.data, schema=2))
        self.assertRaises(ConfigError, load_config, dict(self.data, colour='red'))
        self.assertRaises(ConfigError, load_config,
                          dict(self.data, methods=['bootstrap']))


if __name__ == '__main__':
    unittest.main()
