import os
import shutil
import tempfile
import unittest

import numpy as np

from ..homolfunc import PersistenceDiagram
from ..pointfunc import PointCloud
from ..statfunc import TestReport, PowerEstimate
from ..csvfunc import *


class TestPointCloudFiles(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.filename = os.path.join(self.tmpdir, 'points.csv')

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def write(self, text):
        with open(self.filename, 'w') as f:
            f.write(text)

    def test_load(self):
        self.write('0,0\n1,0\n\n0,1\n')
        pc = load_point_cloud(self.filename)
        self.assertEqual((pc.n, pc.d), (3, 2))
        np.testing.assert_array_equal(pc.points, [[0, 0], [1, 0], [0, 1]])

    def test_header(self):
        self.write('x,y,z\n1.5,-2,3e-1\n')
        pc = load_point_cloud(self.filename, header=True)
        np.testing.assert_array_equal(pc.points, [[1.5, -2., 0.3]])
        self.assertRaises(ParseError, load_point_cloud, self.filename)

    def test_parse_errors(self):
        self.write('0,0\n1,a\n')
        with self.assertRaises(ParseError) as cm:
            load_point_cloud(self.filename)
        self.assertEqual(cm.exception.line, 2)
        self.write('0,0\n1,2\n3,4,5\n')
        with self.assertRaises(ParseError) as cm:
            load_point_cloud(self.filename)
        self.assertEqual(cm.exception.line, 3)
        self.write('0,nan\n')
        with self.assertRaises(ParseError) as cm:
            load_point_cloud(self.filename)
        self.assertEqual(cm.exception.line, 1)

    def test_empty(self):
        self.write('')
        self.assertRaises(EmptyFileError, load_point_cloud, self.filename)
        self.write('x,y\n\n')
        self.assertRaises(EmptyFileError, load_point_cloud, self.filename,
                          header=True)
        self.assertRaises(ValueError, load_point_cloud, self.filename,
                          format='fits')

    def test_round_trip(self):
        points = np.random.default_rng(0).standard_normal((50, 3))
        write_point_cloud(self.filename, PointCloud(points))
        np.testing.assert_array_equal(load_point_cloud(self.filename).points,
                                      points)
        write_point_cloud(self.filename, points, header=['a', 'b', 'c'],
                          overwrite=True)
        np.testing.assert_array_equal(
            load_point_cloud(self.filename, header=True).points, points)

    def test_overwrite(self):
        write_point_cloud(self.filename, [[0., 1.]])
        self.assertRaises(OSError, write_point_cloud, self.filename, [[2., 3.]])
        write_point_cloud(self.filename, [[2., 3.]], overwrite=True)
        self.assertEqual(load_point_cloud(self.filename).points.tolist(),
                         [[2., 3.]])


class TestTableFiles(unittest.TestCase):

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_diagram(self):
        filename = os.path.join(self.tmpdir, 'diagram.csv')
        dg = PersistenceDiagram([0, 0, 1], [0., 0., 0.5], [1.25, np.inf, 2.])
        write_diagram(filename, dg)
        self.assertEqual(read_diagram(filename), dg)
        self.assertRaises(OSError, write_diagram, filename, dg)

    def test_power_table(self):
        filename = os.path.join(self.tmpdir, 'power.csv')
        rows = [{'scenario': 'circle_vs_normal', 'method': 'betti',
                 'regime': 'critical', 'n': n, 'r': 100, 'alpha': 0.05,
                 'power': p, 'seed': 7} for n, p in ((20, 0.25), (200, 1.))]
        write_power_table(filename, rows)
        self.assertEqual(read_power_table(filename), rows)
        with open(filename) as f:
            self.assertEqual(f.readline().strip(), ','.join(POWER_COLUMNS))

    def test_missing_columns(self):
        filename = os.path.join(self.tmpdir, 'other.csv')
        with open(filename, 'w') as f:
            f.write('n,power\n10,0.5\n')
        self.assertRaises(ValueError, read_power_table, filename)

    def test_reports(self):
        filename = os.path.join(self.tmpdir, 'report.json')
        report = TestReport(statistic=3, critical_value=2., reject=True,
                            alpha=0.05, regime='critical',
                            quantile='one_minus_half_alpha', epsilon=0.1,
                            n=100, r=100, seed=0, betti=[4, 0],
                            hypothesis=[1, 1])
        write_report(filename, report)
        self.assertEqual(read_report(filename), report)
        self.assertRaises(OSError, write_report, filename, report)
        estimate = PowerEstimate(power=0.5, rejections=1, r=2, alpha=0.05,
                                 n=10, seed=0, critical_value=1.,
                                 null_statistics=[0., 1.],
                                 alt_statistics=[0., 2.])
        write_report(filename, estimate, overwrite=True)
        self.assertEqual(read_report(filename, PowerEstimate), estimate)


if __name__ == '__main__':
    unittest.main()
