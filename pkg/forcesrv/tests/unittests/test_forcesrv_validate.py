# -*- coding: utf-8 -*-
import sys, os
project_home = os.path.abspath(os.path.join(os.path.dirname(__file__), '../../../'))
if project_home not in sys.path:
    sys.path.insert(0, project_home)

from flask_testing import TestCase
import unittest

import forcesrv.app as app
from forcesrv.model.common import NullSpaceError
from forcesrv.experiment import validate
from forcesrv.experiment.reproduce import Check

SLOW = os.environ.get('FORCESRV_SLOW_TESTS') == '1'


class TestValidate(TestCase):
    def create_app(self):
        self.current_app = app.create_app(**{'FORCESRV_MAX_JOBS': 2})
        return self.current_app

    def assertPassed(self, checks):
        self.assertTrue(checks)
        for check in checks:
            self.assertTrue(check.passed, str(check))

    def test_lindblad_invariants(self):
        checks = validate.lindblad_invariants(samples=2)
        self.assertEqual(len(checks), 3)
        self.assertTrue(all('on 2 samples' in check.name for check in checks))
        self.assertPassed(checks)

    def test_force_linearity(self):
        checks = validate.force_linearity()
        self.assertEqual(len(checks), 2)
        self.assertPassed(checks)

    def test_qfi_grid(self):
        checks = validate.qfi_forms()
        self.assertEqual(len(checks), 1)
        self.assertIn('on 20 (lambda, gamma/omega) points', checks[0].name)
        self.assertPassed(checks)
        self.assertTrue(any(suite.name == 'dissipative protocol' and suite.slow for suite in validate.SUITES))

    def test_steady_state_equivalence(self):
        self.assertPassed(validate.steady_state_equivalence(validate.EQUIVALENCE_MODELS[::3]))

    def test_closed_forms(self):
        self.assertPassed(validate.moments_against_null_space())
        self.assertPassed(validate.gaussian_reconstruction())
        self.assertPassed(validate.qfi_forms())
        self.assertPassed(validate.sld_identities())

    def test_critical_scaling(self):
        self.assertPassed(validate.critical_scaling())
        self.assertAlmostEqual(validate.fitted_slope([1.0, 0.01], [1.0, 10.0]), -2.0)

    def test_sensitivities(self):
        self.assertPassed(validate.cramer_rao(points=10))
        self.assertPassed(validate.quoted_sensitivities())

    def test_run_suites(self):
        def broken(output, jobs):
            raise NullSpaceError('steady state is not unique', 2)

        suites = (validate.Suite('passing', lambda output, jobs: [Check('fine', True)]),
                  validate.Suite('broken', broken),
                  validate.Suite('slow', lambda output, jobs: [Check('slow', False)], slow=True))
        results = validate.run_suites(suites=suites)
        self.assertEqual([name for name, _ in results], ['passing', 'broken'])
        failed = results[1][1][0]
        self.assertFalse(failed.passed)
        self.assertTrue('NullSpaceError' in failed.detail)
        results = validate.run_suites(slow=True, suites=suites)
        self.assertEqual(len(results), 3)

    @unittest.skipUnless(SLOW, 'set FORCESRV_SLOW_TESTS=1')
    def test_dissipative_protocol(self):
        self.assertPassed(validate.dissipative_protocol())

    @unittest.skipUnless(SLOW, 'set FORCESRV_SLOW_TESTS=1')
    def test_fast_suites(self):
        for name, checks in validate.run_suites():
            self.assertPassed(checks)


if __name__ == '__main__':
    unittest.main()
