# -*- coding: utf-8 -*-
import sys, os
project_home = os.path.abspath(os.path.join(os.path.dirname(__file__), '../../../'))
if project_home not in sys.path:
    sys.path.insert(0, project_home)

from flask_testing import TestCase
import unittest
import csv
import shutil
import tempfile

import forcesrv.app as app
from forcesrv.model.common import InvalidSpecError
from forcesrv.experiment import reproduce
from forcesrv.sensing import protocol
from forcesrv.experiment.output import RunOutput

SLOW = os.environ.get('FORCESRV_SLOW_TESTS') == '1'


def read_csv(path):
    with open(path) as f:
        return list(csv.reader(f))


class TestReproduce(TestCase):
    def create_app(self):
        self.current_app = app.create_app(**{'FORCESRV_MAX_JOBS': 4})
        return self.current_app

    def setUp(self):
        self.directory = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.directory)

    def output(self, name):
        return RunOutput(self.directory, name, stamp='20260101T000000Z')

    def test_check(self):
        self.assertEqual(str(reproduce.Check('dF_x', True, '4.43 yN')), 'PASS dF_x: 4.43 yN')
        self.assertEqual(str(reproduce.Check('dF_n', False)), 'FAIL dF_n')
        reproduction = reproduce.Reproduction('x')
        self.assertTrue(reproduction.passed)
        reproduction.check('one', 1)
        reproduction.check('two', 0)
        self.assertEqual([check.passed for check in reproduction.checks], [True, False])
        self.assertFalse(reproduction.passed)

    def test_relative_error(self):
        self.assertAlmostEqual(reproduce.relative_error(1.1, 1.0), 0.1)
        self.assertAlmostEqual(reproduce.relative_error(-0.9, -1.0), 0.1)
        self.assertAlmostEqual(reproduce.to_hz(reproduce.KHZ), 1000.0)

    def test_fig4(self):
        reproduction = reproduce.reproduce('fig4', self.output('fig4'))
        for check in reproduction.checks:
            self.assertTrue(check.passed, str(check))
        rows = read_csv(reproduction.files[0])
        self.assertEqual(rows[0], reproduce.SENSITIVITY_HEADER)
        self.assertEqual(len(rows), 41)
        self.assertEqual(float(rows[1][0]), 1000.0)
        self.assertTrue(os.path.exists(os.path.join(self.directory, 'fig4_20260101T000000Z.plot.txt')))

    def test_tab_sensitivities(self):
        reproduction = reproduce.reproduce('tab-sensitivities', self.output('tab-sensitivities'))
        self.assertTrue(reproduction.passed, '\n'.join(str(check) for check in reproduction.checks))
        rows = read_csv(reproduction.files[0])
        self.assertEqual(rows[0], ['quantity', 'computed', 'quoted', 'unit', 'rel_error', 'tolerance'])
        table = dict((row[0], row) for row in rows[1:])
        self.assertAlmostEqual(float(table['dFx'][1]), 4.43, delta=0.02)
        self.assertAlmostEqual(float(table['Fmin_ratio'][1]), 8.8, delta=0.05)
        self.assertEqual(table['dFQ'][2], '')

    def test_dissipative_protocol_point(self):
        """
        the lossy sweep sits in the adiabatic regime and its loss-free F_min is close to the quoted 1.1 yN
        """
        p = reproduce.DISSIPATIVE_PROTOCOL
        self.assertEqual(protocol.validity_warnings(p), [])
        lossless = protocol.min_force_demkov(p) / reproduce.YN
        self.assertAlmostEqual(lossless, 1.0955, delta=0.01)
        self.assertLess(reproduce.relative_error(lossless, reproduce.QUOTED['Fmin_dissipative'] / reproduce.YN), 0.20)
        self.assertAlmostEqual(p.kappa * p.t_final, 16.96, delta=0.01)

    @unittest.skipUnless(SLOW, 'set FORCESRV_SLOW_TESTS=1')
    def test_dissipative_min_force(self):
        reproduction = reproduce.tab_sensitivities(self.output('tab-sensitivities'), include_dissipative=True)
        self.assertTrue(reproduction.passed, '\n'.join(str(check) for check in reproduction.checks))
        table = dict((row[0], row) for row in read_csv(reproduction.files[0])[1:])
        self.assertAlmostEqual(float(table['Fmin_dissipative'][1]), 1.1, delta=0.22)

    def test_unknown_figure(self):
        with self.assertRaises(InvalidSpecError):
            reproduce.reproduce('fig9', self.output('fig9'))

    @unittest.skipUnless(SLOW, 'set FORCESRV_SLOW_TESTS=1')
    def test_fig1(self):
        reproduction = reproduce.reproduce('fig1', self.output('fig1'), jobs=3)
        self.assertTrue(reproduction.passed, '\n'.join(str(check) for check in reproduction.checks))
        header = read_csv(reproduction.files[0])[0]
        self.assertEqual(header, ['t_s', 'x_5yN', 'x_6yN', 'x_7yN', 'x_ss_5yN', 'x_ss_6yN', 'x_ss_7yN'])

    @unittest.skipUnless(SLOW, 'set FORCESRV_SLOW_TESTS=1')
    def test_fig3(self):
        reproduction = reproduce.reproduce('fig3', self.output('fig3'))
        self.assertTrue(reproduction.passed, '\n'.join(str(check) for check in reproduction.checks))


if __name__ == '__main__':
    unittest.main()
