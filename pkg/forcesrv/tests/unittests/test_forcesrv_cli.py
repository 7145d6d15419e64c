# -*- coding: utf-8 -*-
import sys, os
project_home = os.path.abspath(os.path.join(os.path.dirname(__file__), '../../../'))
if project_home not in sys.path:
    sys.path.insert(0, project_home)

from flask_testing import TestCase
import unittest
import mock
import csv
import glob
import io
import shutil
import tempfile

import forcesrv.app as app
from forcesrv import cli
from forcesrv.model.common import NoSignal, InstabilityError, IntegrationError, ConfigError
from forcesrv.experiment import expconfig
from forcesrv.tests.unittests.stubdata import experiments


class TestCli(TestCase):
    def create_app(self):
        self.current_app = app.create_app(**{'FORCESRV_MAX_JOBS': 1})
        return self.current_app

    def setUp(self):
        self.directory = tempfile.mkdtemp()
        self.out = os.path.join(self.directory, 'out')

    def tearDown(self):
        shutil.rmtree(self.directory)

    def config_file(self, text, name='experiment.cfg'):
        path = os.path.join(self.directory, name)
        with open(path, 'w') as f:
            f.write(text)
        return path

    def run_cli(self, argv):
        """
        :return: exit status, stdout, stderr
        """
        with mock.patch('sys.stdout', new_callable=io.StringIO) as stdout, \
                mock.patch('sys.stderr', new_callable=io.StringIO) as stderr:
            status = cli.main(argv, app=self.app)
        return status, stdout.getvalue(), stderr.getvalue()

    def outputs(self, pattern):
        return sorted(glob.glob(os.path.join(self.out, pattern)))

    def read_csv(self, pattern):
        paths = self.outputs(pattern)
        self.assertEqual(len(paths), 1, paths)
        with open(paths[0]) as f:
            return list(csv.reader(f))

    def test_format_force(self):
        self.assertEqual(cli.format_force(4.43e-24), '4.43 yN')
        self.assertEqual(cli.format_force(3.94e-26), '39.4 xN')
        self.assertEqual(cli.format_force(2.5e-21), '2.5 zN')
        self.assertEqual(cli.format_force(1e-30), '1e-30 N')
        self.assertEqual(cli.format_force(NoSignal('p', 'no dissipation')), 'no signal (no dissipation)')

    def test_axis_column(self):
        self.assertEqual(cli.axis_column('g'), ('g_Hz', cli.TWO_PI))
        self.assertEqual(cli.axis_column('F'), ('F_N', 1.0))
        self.assertEqual(cli.axis_column('kappa'), ('kappa_per_s', 1.0))

    def test_sensitivity(self):
        status, stdout, _ = self.run_cli(['sensitivity', '--config', self.config_file(experiments.fig4_text_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertRegex(stdout, r'dFx = 4\.4\d yN')
        self.assertRegex(stdout, r'dFn = 7\.[78]\d yN')
        self.assertTrue('dFQ = ' in stdout)
        rows = self.read_csv('sensitivity_*.csv')
        self.assertEqual(rows[0], cli.SENSITIVITY_HEADER)
        self.assertEqual(len(rows), 2)
        self.assertEqual(len(self.outputs('sensitivity_*.manifest')), 1)

    def test_sensitivity_repetitions(self):
        path = self.config_file(experiments.fig4_text_config)
        self.run_cli(['sensitivity', '--config', path, '--out', self.out])
        single = float(self.read_csv('sensitivity_*.csv')[1][1])
        shutil.rmtree(self.out)
        self.run_cli(['sensitivity', '--config', path, '--out', self.out, '--nu', '100'])
        repeated = float(self.read_csv('sensitivity_*.csv')[1][1])
        self.assertAlmostEqual(repeated / single, 0.1)

    def test_manifest_reproduces_the_run(self):
        path = self.config_file(experiments.fig4_text_config)
        self.run_cli(['sensitivity', '--config', path, '--out', self.out, '--set', 'g=4 kHz'])
        manifest = self.outputs('sensitivity_*.manifest')[0]
        with open(manifest) as f:
            text = f.read()
        self.assertTrue('# override: g=4 kHz' in text)
        with self.app.app_context():
            again = expconfig.parse_config(text)
            self.assertEqual(again.params, expconfig.parse_config(experiments.fig4_text_config, ['g=4 kHz']).params)

    def test_steady(self):
        status, stdout, _ = self.run_cli(['steady', '--config', self.config_file(experiments.small_effective_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertTrue(stdout.startswith('<x> = '))
        rows = self.read_csv('steady_*.csv')
        self.assertEqual(rows[0], cli.STEADY_HEADER)
        values = dict(zip(rows[0], [float(value) for value in rows[1]]))
        self.assertAlmostEqual(values['x_numeric'], values['x_ss'], delta=1e-4)
        self.assertAlmostEqual(values['n_numeric'], values['n_ss'], delta=1e-4)
        self.assertAlmostEqual(values['purity_numeric'], values['purity'], delta=1e-4)

    def test_sweep(self):
        status, stdout, _ = self.run_cli(['sweep', '--config', self.config_file(experiments.coupling_sweep_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_OK)
        rows = self.read_csv('sweep_*.csv')
        self.assertEqual(rows[0], ['g_Hz'] + cli.SWEEP_HEADER)
        self.assertEqual([float(row[0]) for row in rows[1:]], [1000.0, 2000.0, 3000.0, 4000.0])
        self.assertEqual(len(self.outputs('sweep_*.plot.txt')), 1)
        self.assertTrue('4 points written' in stdout)

    def test_sweep_needs_axis(self):
        status, _, stderr = self.run_cli(['sweep', '--config', self.config_file(experiments.fig4_text_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_USAGE)
        self.assertTrue('[sweep]' in stderr)

    def test_evolve(self):
        status, stdout, _ = self.run_cli(['evolve', '--config', self.config_file(experiments.small_effective_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_OK)
        rows = self.read_csv('evolve_*.csv')
        self.assertEqual(rows[0], ['t_s', 'x', 'p', 'n'])
        self.assertEqual(len(rows), 6)
        self.assertEqual(float(rows[1][1]), 0.0)
        self.assertTrue(stdout.startswith('final: x = '))

    def test_qfi(self):
        status, stdout, _ = self.run_cli(['qfi', '--config', self.config_file(experiments.fig4_text_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertTrue(stdout.startswith('I_Q = '))
        rows = self.read_csv('qfi_*.csv')
        self.assertEqual(rows[0], cli.QFI_HEADER)
        self.assertEqual(rows[1][3], '')

    def test_squeeze_analytic(self):
        status, stdout, _ = self.run_cli(['squeeze', '--analytic', '--config',
                                          self.config_file(experiments.fig5_config), '--out', self.out])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertTrue('Fmin = 39.4 xN' in stdout)
        rows = self.read_csv('squeeze_*.csv')
        self.assertEqual(rows[0], cli.SQUEEZE_HEADER)
        self.assertEqual(rows[1][2], '')

    def test_squeezed_sensitivity(self):
        status, stdout, _ = self.run_cli(['sensitivity', '--config', self.config_file(experiments.fig5_config),
                                          '--out', self.out, '--set', 'xi=0 kHz'])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertRegex(stdout, r'Fmin = 34\d xN')

    def test_reproduce(self):
        status, stdout, _ = self.run_cli(['reproduce', 'fig4', '--out', self.out])
        self.assertEqual(status, cli.EXIT_OK)
        self.assertTrue('PASS fig4 Cramer-Rao ordering' in stdout)
        self.assertEqual(len(self.outputs('fig4_*.csv')), 1)
        self.assertEqual(len(self.outputs('fig4_*.manifest')), 1)

    def test_physics_error(self):
        status, _, stderr = self.run_cli(['sensitivity', '--config', self.config_file(experiments.unstable_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_PHYSICS)
        self.assertTrue(stderr.startswith('error: '))

    def test_config_errors(self):
        status, _, stderr = self.run_cli(['steady', '--config', self.config_file(experiments.bad_unit_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_USAGE)
        self.assertTrue('line 7, field `params.g`' in stderr)

        status, _, _ = self.run_cli(['steady', '--config', os.path.join(self.directory, 'missing.cfg')])
        self.assertEqual(status, cli.EXIT_USAGE)

        status, _, stderr = self.run_cli(['steady', '--config', self.config_file(experiments.fig5_config),
                                          '--out', self.out])
        self.assertEqual(status, cli.EXIT_USAGE)
        self.assertTrue('model type' in stderr)

    def test_usage(self):
        with mock.patch('sys.stderr', new_callable=io.StringIO):
            with self.assertRaises(SystemExit) as context:
                cli.main(['steady'], app=self.app)
            self.assertEqual(context.exception.code, cli.EXIT_USAGE)
            with self.assertRaises(SystemExit) as context:
                cli.main(['reproduce', 'fig9'], app=self.app)
            self.assertEqual(context.exception.code, cli.EXIT_USAGE)

    def test_exit_status(self):
        self.assertEqual(cli.exit_status(InstabilityError(1.2, 1.0)), cli.EXIT_PHYSICS)
        self.assertEqual(cli.exit_status(IntegrationError('failed')), cli.EXIT_NUMERICAL)
        self.assertEqual(cli.exit_status(ConfigError('bad')), cli.EXIT_USAGE)


if __name__ == '__main__':
    unittest.main()
