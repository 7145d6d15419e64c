# -*- coding: utf-8 -*-
import sys, os
project_home = os.path.abspath(os.path.join(os.path.dirname(__file__), '../../../'))
if project_home not in sys.path:
    sys.path.insert(0, project_home)

from flask_testing import TestCase
import unittest
import mock
import json

import forcesrv.app as app
from forcesrv.model.common import NoSignal, IntegrationError
from forcesrv.views import json_value

SENSITIVITY_QUERY = {'omega': '0.28 kHz', 'Omega': '320 kHz', 'g': '4.5 kHz', 'gamma': '0.08 kHz', 'z': '14 nm'}
PROTOCOL_QUERY = {'omega': '4.4 kHz', 'g': '1.6 kHz', 'F': '46 xN', 'xi': '1.95 kHz', 'Omega0': '200 kHz',
                  'kappa': '9.5 Hz', 't_final': '284 ms'}


class TestViews(TestCase):
    def create_app(self):
        self.current_app = app.create_app(**{'FORCESRV_DEFAULT_Z_NM': 14.0})
        return self.current_app

    def get(self, endpoint, query):
        response = self.client.get(endpoint, query_string=query)
        return response.status_code, json.loads(response.data)

    def test_json_value(self):
        self.assertIsNone(json_value(NoSignal('p', 'none')))
        self.assertIsNone(json_value(float('inf')))
        self.assertEqual(json_value(2), 2.0)

    def test_sensitivity(self):
        status, results = self.get('/sensitivity', SENSITIVITY_QUERY)
        self.assertEqual(status, 200)
        self.assertAlmostEqual(results['dFx_N'] / 1e-24, 4.43, delta=0.02)
        self.assertAlmostEqual(results['dFn_N'] / 1e-24, 7.80, delta=0.05)
        self.assertLess(results['dFQ_N'], results['dFx_N'])
        self.assertEqual(results['nu'], 1.0)
        self.assertLess(results['lambda'], results['lambda_c'])

        query = dict(SENSITIVITY_QUERY, nu='4')
        status, repeated = self.get('/sensitivity', query)
        self.assertAlmostEqual(repeated['dFx_N'] / results['dFx_N'], 0.5)
        self.assertAlmostEqual(repeated['dFQ_N'] / results['dFQ_N'], 0.5)

    def test_no_dissipation(self):
        query = dict(SENSITIVITY_QUERY)
        del query['gamma']
        status, results = self.get('/sensitivity', query)
        self.assertEqual(status, 200)
        self.assertIsNone(results['dFp_N'])
        self.assertEqual(results['lambda_c'], 1.0)

    def test_steady(self):
        status, results = self.get('/steady', dict(SENSITIVITY_QUERY, g='2 kHz', F='5 yN'))
        self.assertEqual(status, 200)
        self.assertLess(results['x_ss'], 0.0)
        self.assertGreater(results['var_x'], 1.0)
        self.assertLess(results['purity'], 1.0)
        self.assertAlmostEqual(results['thermal_n'], (1 - results['purity']) / (2 * results['purity']))
        self.assertEqual(sorted(results), sorted(['lambda', 'lambda_c', 'f_tilde', 'x_ss', 'var_x', 'p_ss', 'var_p',
                                                  'sigma12', 'n_ss', 'var_n', 'purity', 'thermal_n', 'alpha', 'r',
                                                  'chi', 'delta']))

    def test_qfi(self):
        status, results = self.get('/qfi', SENSITIVITY_QUERY)
        self.assertEqual(status, 200)
        self.assertAlmostEqual(results['qfi_covariance'] / results['qfi_closed_form'], 1.0, places=8)
        self.assertAlmostEqual(results['dFQ_N'] * results['qfi_closed_form'] ** 0.5, 1.0)
        self.assertEqual(len(results['sld_beta']), 2)

    def test_squeeze(self):
        status, results = self.get('/squeeze', PROTOCOL_QUERY)
        self.assertEqual(status, 200)
        self.assertAlmostEqual(results['Fmin_N'] / 1e-27, 39.4, delta=0.2)
        self.assertEqual(results['warnings'], [])
        self.assertGreater(results['sigma_z'], 0.0)

        status, results = self.get('/squeeze', dict(PROTOCOL_QUERY, t_final='0.1 ms'))
        self.assertEqual(status, 200)
        self.assertEqual(len(results['warnings']), 2)

    def test_client_errors(self):
        status, results = self.get('/sensitivity', dict(SENSITIVITY_QUERY, g='6 kHz'))
        self.assertEqual(status, 400)
        self.assertEqual(results['type'], 'InstabilityError')

        query = dict(SENSITIVITY_QUERY)
        del query['omega']
        status, results = self.get('/steady', query)
        self.assertEqual(status, 400)
        self.assertEqual(results['type'], 'ConfigError')
        self.assertTrue('`omega`' in results['error'])

        status, results = self.get('/qfi', dict(SENSITIVITY_QUERY, g='4 furlongs'))
        self.assertEqual(status, 400)
        self.assertTrue('furlongs' in results['error'])

        status, results = self.get('/squeeze', dict(PROTOCOL_QUERY, xi='2.5 kHz'))
        self.assertEqual(status, 400)
        self.assertEqual(results['type'], 'SpectrumCollapseError')

    def test_server_error(self):
        with mock.patch('forcesrv.views.metrology.delta_f_n', side_effect=IntegrationError('step size underflow')):
            status, results = self.get('/sensitivity', SENSITIVITY_QUERY)
        self.assertEqual(status, 500)
        self.assertEqual(results['type'], 'IntegrationError')


if __name__ == '__main__':
    unittest.main()
