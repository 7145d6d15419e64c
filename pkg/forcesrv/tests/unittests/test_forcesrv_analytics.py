# -*- coding: utf-8 -*-
import sys, os
project_home = os.path.abspath(os.path.join(os.path.dirname(__file__), '../../../'))
if project_home not in sys.path:
    sys.path.insert(0, project_home)

from flask_testing import TestCase
import unittest
import math

import numpy as np

import forcesrv.app as app
from forcesrv.model.common import HBAR, SystemParams, HilbertSpec, InstabilityError, InvalidSpecError
from forcesrv.model.dynamics import DensityMatrix, steady_state_direct
from forcesrv.sensing import analytics


class TestDerived(unittest.TestCase):

    def setUp(self):
        self.p = SystemParams.from_khz(omega_khz=0.3, Omega_khz=320.0, g_khz=2.0, gamma_khz=0.08, F_yN=5.0)

    def test_derived(self):
        d = analytics.derived(self.p)
        self.assertAlmostEqual(d.lam, 4.0 / math.sqrt(96.0), places=12)
        self.assertAlmostEqual(d.lam_c, math.sqrt(1 + (0.08 / 0.3) ** 2), places=12)
        self.assertAlmostEqual(d.f_tilde, self.p.z * self.p.F / (HBAR * self.p.omega), places=12)
        self.assertAlmostEqual(d.gamma_over_omega, 0.08 / 0.3, places=12)
        self.assertAlmostEqual(d.gap, d.lam_c ** 2 - d.lam ** 2)
        self.assertEqual(d.with_force(0.0).f_tilde, 0.0)
        self.assertEqual(d.with_force(0.0).lam, d.lam)

    def test_critical_coupling(self):
        g_c = analytics.critical_coupling_g(self.p)
        d = analytics.derived(self.p.with_(g=g_c))
        self.assertAlmostEqual(d.lam / d.lam_c, 1.0, places=12)

    def test_instability(self):
        d = analytics.derived(self.p.with_(g=3 * analytics.critical_coupling_g(self.p)))
        with self.assertRaises(InstabilityError):
            analytics.x_ss(d)
        with self.assertRaises(InstabilityError):
            analytics.gaussian_decomposition(d)
        with self.assertRaises(InvalidSpecError):
            analytics.derived(self.p.with_(omega=0.0))
        with self.assertRaises(InvalidSpecError):
            analytics.effective_hamiltonian(self.p, HilbertSpec(10))

    def test_uncoupled_limit(self):
        """
        without coupling and loss the steady state is the coherent state with alpha = -f_tilde/2
        """
        d = analytics.derived(self.p.with_(g=0.0, gamma=0.0))
        self.assertEqual(d.lam_c, 1.0)
        self.assertAlmostEqual(analytics.x_ss(d), -d.f_tilde)
        self.assertAlmostEqual(analytics.p_ss(d), 0.0)
        self.assertAlmostEqual(analytics.var_x_ss(d), 1.0)
        self.assertAlmostEqual(analytics.var_p_ss(d), 1.0)
        self.assertAlmostEqual(analytics.n_ss(d), d.f_tilde ** 2 / 4)
        self.assertAlmostEqual(analytics.var_n_ss(d), d.f_tilde ** 2 / 4)
        self.assertTrue(np.allclose(analytics.covariance_ss(d), np.eye(2)))
        gss = analytics.gaussian_decomposition(d)
        self.assertAlmostEqual(gss.purity, 1.0)
        self.assertAlmostEqual(gss.thermal_n, 0.0)
        self.assertAlmostEqual(gss.squeeze_r, 0.0)
        self.assertAlmostEqual(gss.disp_alpha.real, -d.f_tilde / 2)

    def test_loss_tilts_the_mean(self):
        d = analytics.derived(self.p)
        self.assertAlmostEqual(analytics.p_ss(d) / analytics.x_ss(d), d.gamma_over_omega)
        self.assertGreater(analytics.sigma12_ss(d), 0.0)

    def test_divergence_towards_critical_coupling(self):
        g_c = analytics.critical_coupling_g(self.p)
        values = [analytics.derived(self.p.with_(g=fraction * g_c)) for fraction in (0.5, 0.9, 0.99)]
        n = [analytics.n_ss(d) for d in values]
        spread = [analytics.var_x_ss(d) for d in values]
        self.assertTrue(n[0] < n[1] < n[2])
        self.assertTrue(spread[0] < spread[1] < spread[2])
        # the p quadrature stays bounded
        self.assertLess(analytics.var_p_ss(values[-1]), 10.0)

    def test_force_linearity(self):
        at = lambda scale: analytics.derived(self.p.with_(F=scale * self.p.F))
        single, double, reverse, zero = at(1.0), at(2.0), at(-1.0), at(0.0)
        self.assertAlmostEqual(analytics.x_ss(double), 2 * analytics.x_ss(single), places=12)
        self.assertAlmostEqual(analytics.x_ss(reverse), -analytics.x_ss(single), places=12)
        self.assertAlmostEqual(analytics.p_ss(double), 2 * analytics.p_ss(single), places=12)
        self.assertAlmostEqual(analytics.p_ss(reverse), -analytics.p_ss(single), places=12)
        excess = analytics.n_ss(single) - analytics.n_ss(zero)
        self.assertGreater(excess, 0.0)
        self.assertAlmostEqual((analytics.n_ss(double) - analytics.n_ss(zero)) / excess, 4.0, places=10)
        self.assertAlmostEqual(analytics.n_ss(reverse), analytics.n_ss(single), places=12)
        # the spread does not depend on the force
        self.assertEqual(analytics.var_x_ss(double), analytics.var_x_ss(zero))

    def test_displacement_sign(self):
        """
        <a> = alpha e^{i delta} with tan delta = gamma/omega, so alpha has the sign of -F
        """
        d = analytics.derived(self.p)
        gss = analytics.gaussian_decomposition(d)
        self.assertLess(gss.disp_alpha.real, 0.0)
        self.assertAlmostEqual(abs(gss.disp_alpha), d.f_tilde * d.lam_c / (2 * d.gap), places=12)
        self.assertAlmostEqual(math.tan(gss.rot_delta), d.gamma_over_omega, places=12)
        mean_a = gss.disp_alpha * np.exp(1j * gss.rot_delta)
        self.assertAlmostEqual(2 * mean_a.real, analytics.x_ss(d), places=12)
        self.assertAlmostEqual(2 * mean_a.imag, analytics.p_ss(d), places=12)
        reversed_force = analytics.gaussian_decomposition(analytics.derived(self.p.with_(F=-self.p.F)))
        self.assertAlmostEqual(reversed_force.disp_alpha.real, -gss.disp_alpha.real, places=12)

    def test_decompose_covariance(self):
        purity, r, theta = analytics.decompose_covariance(np.diag([math.exp(0.6), math.exp(-0.6)]))
        self.assertAlmostEqual(purity, 1.0)
        self.assertAlmostEqual(r, 0.3)
        self.assertAlmostEqual(theta, 0.0)
        purity, r, _ = analytics.decompose_covariance(3.0 * np.eye(2))
        self.assertAlmostEqual(purity, 1.0 / 3.0)
        self.assertAlmostEqual(r, 0.0)

    def test_thermal_weights(self):
        self.assertTrue(np.array_equal(analytics.thermal_weights(0.0, 4), [1.0, 0.0, 0.0, 0.0]))
        weights = analytics.thermal_weights(1.0, 200)
        self.assertAlmostEqual(weights.sum(), 1.0)
        self.assertAlmostEqual(weights @ np.arange(200), 1.0, places=10)
        self.assertAlmostEqual(weights[1] / weights[0], 0.5)


class TestAgainstNumerics(TestCase):
    def create_app(self):
        self.current_app = app.create_app()
        return self.current_app

    def setUp(self):
        self.p = SystemParams.from_khz(omega_khz=0.3, Omega_khz=320.0, g_khz=2.0, gamma_khz=0.08, F_yN=5.0)
        self.d = analytics.derived(self.p)

    def test_null_space_moments(self):
        spec = HilbertSpec(30, include_spin=False)
        rho = steady_state_direct(analytics.effective_hamiltonian(self.p, spec), self.p.gamma, spec)
        moments = analytics.moments_of_state(rho)
        self.assertAlmostEqual(moments.mean_x, analytics.x_ss(self.d), delta=1e-4)
        self.assertAlmostEqual(moments.mean_p, analytics.p_ss(self.d), delta=1e-4)
        self.assertAlmostEqual(moments.delta_x, analytics.var_x_ss(self.d), delta=1e-4)
        self.assertAlmostEqual(moments.delta_p, analytics.var_p_ss(self.d), delta=1e-4)
        self.assertAlmostEqual(moments.cov[0, 1], analytics.sigma12_ss(self.d), delta=1e-4)
        self.assertAlmostEqual(moments.n, analytics.n_ss(self.d), delta=1e-4)
        self.assertAlmostEqual(moments.var_n, analytics.var_n_ss(self.d), delta=1e-4)
        self.assertAlmostEqual(rho.purity(), analytics.gaussian_decomposition(self.d).purity, delta=1e-4)

    def test_null_space_force_linearity(self):
        spec = HilbertSpec(30, include_spin=False)

        def moments(scale):
            q = self.p.with_(F=scale * self.p.F)
            return analytics.moments_of_state(steady_state_direct(analytics.effective_hamiltonian(q, spec), q.gamma,
                                                                  spec))

        single, double, reverse, zero = moments(1.0), moments(2.0), moments(-1.0), moments(0.0)
        self.assertAlmostEqual(double.mean_x / single.mean_x, 2.0, delta=1e-5)
        self.assertAlmostEqual(reverse.mean_x / single.mean_x, -1.0, delta=1e-5)
        self.assertAlmostEqual(double.mean_p / single.mean_p, 2.0, delta=1e-5)
        self.assertAlmostEqual(reverse.mean_p / single.mean_p, -1.0, delta=1e-5)
        self.assertAlmostEqual((double.n - zero.n) / (single.n - zero.n), 4.0, delta=1e-4)
        self.assertAlmostEqual(zero.mean_x, 0.0, delta=1e-8)

    def test_reconstruction(self):
        gss = analytics.gaussian_decomposition(self.d)
        rho = analytics.reconstruct_state(gss, HilbertSpec(40, include_spin=False))
        moments = analytics.moments_of_state(rho)
        self.assertAlmostEqual(moments.mean_x, gss.mean_x, delta=1e-4)
        self.assertAlmostEqual(moments.mean_p, gss.mean_p, delta=1e-4)
        self.assertTrue(np.allclose(moments.cov, gss.cov, atol=1e-4))
        self.assertAlmostEqual(rho.purity(), gss.purity, delta=1e-4)
        with self.assertRaises(InvalidSpecError):
            analytics.reconstruct_state(gss, HilbertSpec(40))

    def test_spin_traced_out(self):
        spec = HilbertSpec(6)
        moments = analytics.moments_of_state(DensityMatrix.ground(spec))
        self.assertAlmostEqual(moments.mean_x, 0.0)
        self.assertTrue(np.allclose(moments.cov, np.eye(2)))
        self.assertAlmostEqual(moments.n, 0.0)


if __name__ == '__main__':
    unittest.main()
