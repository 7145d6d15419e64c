"""
Force sensitivities of the steady state: shot-noise limited estimates for x, p and the
phonon number, the quantum Fisher information in closed form, from the covariance
matrix and from the Uhlmann fidelity of numerically computed steady states, and the
symmetric logarithmic derivative of the Gaussian steady state.

All closed-form sensitivities are per shot (nu = 1); RepetitionBudget scales them.
"""

import math
import time

from dataclasses import dataclass, replace

import numpy as np

from flask import current_app
from scipy.optimize import bisect

from forcesrv.model.common import HBAR, NoSignal, NoSensitivityError, InvalidSpecError, BracketError, \
    FidelityError, NumericalError
from forcesrv.model import hilbert
from forcesrv.model.dynamics import DensityMatrix, steady_state_direct, settle
from forcesrv.model.workers import run_jobs
from forcesrv.sensing import analytics


@dataclass(frozen=True)
class RepetitionBudget:
    """
    nu = T/tau repetitions of a measurement cycle of length tau within a total time T
    """
    total_time_T: float
    cycle_time_tau: float

    def __post_init__(self):
        if not (self.total_time_T > 0 and self.cycle_time_tau > 0):
            raise InvalidSpecError('T and tau must be positive')
        if self.nu < 1:
            raise InvalidSpecError('T=%.3g s is shorter than one cycle tau=%.3g s' % (self.total_time_T, self.cycle_time_tau))

    @property
    def nu(self):
        return self.total_time_T / self.cycle_time_tau

    @classmethod
    def repetitions(cls, nu):
        return cls(total_time_T=float(nu), cycle_time_tau=1.0)

    def apply(self, report):
        """
        :param report: SensitivityReport
        :return: the report for nu repetitions
        """
        scale = math.sqrt(report.nu / self.nu)
        return replace(report, delta_F=report.delta_F * scale, nu=self.nu)


@dataclass(frozen=True)
class SensitivityReport:
    observable: str
    signal: float
    variance: float
    dSignal_dF: float
    delta_F: float
    nu: float = 1.0


def shot_noise_delta_f(signal_var, dSignal_dF, nu=1.0):
    """
    delta F = <Delta A> / (sqrt(nu) |d<A>/dF|)

    :param signal_var: variance of the observable
    :param dSignal_dF: slope per newton
    :param nu: repetitions
    :return: newtons
    """
    if dSignal_dF == 0:
        raise NoSensitivityError('the observable does not respond to the force')
    return math.sqrt(signal_var) / (math.sqrt(nu) * abs(dSignal_dF))


def _scale(p):
    """
    hbar omega / z, the force unit of f_tilde
    """
    return HBAR * p.omega / p.z


def mean_derivative(p):
    """
    d(<x>, <p>)/dF per newton
    """
    d = analytics.derived(p)
    per_newton = 1.0 / _scale(p)
    return np.array([analytics.x_ss(d.with_force(per_newton)), analytics.p_ss(d.with_force(per_newton))])


def alpha_derivative(p):
    d = analytics.derived(p)
    return -d.lam_c / (2 * analytics._stable(d) * _scale(p))


def delta_f_x(p):
    d = analytics.derived(p)
    gap = analytics._stable(d)
    return _scale(p) / math.sqrt(2) * math.sqrt((2 * d.lam_c ** 2 - d.lam ** 2) * gap)


def delta_f_p(p):
    """
    :return: newtons, or NoSignal when gamma = 0
    """
    d = analytics.derived(p)
    gap = analytics._stable(d)
    if p.gamma == 0:
        return NoSignal('p', 'the momentum quadrature carries no force signal without dissipation')
    return _scale(p) * p.omega / (math.sqrt(2) * p.gamma) * math.sqrt((2 * d.lam_c ** 2 - 3 * d.lam ** 2 + d.lam ** 4) * gap)


def number_snr_gap(p, force):
    """
    <n>(F) - <Delta n>(F), negative below the minimal detectable force
    """
    d = analytics.derived(p.with_(F=force))
    return analytics.n_ss(d) - math.sqrt(analytics.var_n_ss(d))


def delta_f_n(p, bracket=None, rel_tol=None, expansions=6):
    """
    force at which the phonon number signal equals its noise, by bisection

    :param p: SystemParams, F ignored
    :param bracket: search interval in units of delta_f_x
    :param rel_tol:
    :param expansions: times each end of the bracket may be widened tenfold
    :return: newtons
    """
    start_time = time.time()
    config = current_app.config
    bracket = bracket or config.get('FORCESRV_FORCE_BRACKET', [1e-3, 1e3])
    rel_tol = rel_tol or config.get('FORCESRV_ROOT_REL_TOL', 1e-3)
    unit = delta_f_x(p)
    f = lambda scaled: number_snr_gap(p, scaled * unit)

    lo, hi = bracket
    for _ in range(expansions):
        if f(lo) < 0:
            break
        lo /= 10.0
    for _ in range(expansions):
        if f(hi) > 0:
            break
        hi *= 10.0
    if not (f(lo) < 0 < f(hi)):
        raise BracketError('no sign change of <n> - <Delta n> on [%.3g, %.3g] x dF_x' % (lo, hi))

    root = bisect(f, lo, hi, xtol=1e-15, rtol=rel_tol)
    current_app.logger.debug('dF_n bracketed on [%.3g, %.3g] x dF_x and solved in %s ms'
                             % (lo, hi, (time.time() - start_time) * 1000))
    return root * unit


def qfi_closed_form(p):
    """
    I_Q = (sqrt(2) z / hbar omega)^2 (2 lam_c^2 - lam^2) / ((lam_c^2 - lam^2)(4(lam_c^2 - lam^2) + lam^4))

    :return: per newton squared
    """
    d = analytics.derived(p)
    gap = analytics._stable(d)
    return 2.0 / _scale(p) ** 2 * (2 * d.lam_c ** 2 - d.lam ** 2) / (gap * (4 * gap + d.lam ** 4))


def qfi_covariance(mean_derivative, cov):
    """
    X'^T cov^{-1} X' for a Gaussian family with force independent covariance

    :param mean_derivative: d(<x>, <p>)/dF
    :param cov: 2x2 covariance in the vacuum = identity convention
    :return: per newton squared
    """
    cov = np.asarray(cov, dtype=float)
    if abs(np.linalg.det(cov)) < 1e-300 or np.linalg.cond(cov) > 1e14:
        raise NumericalError('covariance matrix is singular')
    derivative = np.asarray(mean_derivative, dtype=float)
    return float(derivative @ np.linalg.solve(cov, derivative))


def delta_f_q(p, nu=1.0):
    """
    Cramer-Rao bound 1/sqrt(nu I_Q)
    """
    return 1.0 / math.sqrt(nu * qfi_closed_form(p))


def sensitivity_report(observable, p):
    """
    :param observable: x, p or n
    :param p: SystemParams, F is the working point of the signal
    :return: SensitivityReport or NoSignal
    """
    d = analytics.derived(p)
    if observable == 'x':
        slope = mean_derivative(p)[0]
        return SensitivityReport('x', analytics.x_ss(d), analytics.var_x_ss(d) ** 2, slope, delta_f_x(p))
    if observable == 'p':
        result = delta_f_p(p)
        if isinstance(result, NoSignal):
            return result
        slope = mean_derivative(p)[1]
        return SensitivityReport('p', analytics.p_ss(d), analytics.var_p_ss(d) ** 2, slope, result)
    if observable == 'n':
        force = delta_f_n(p)
        at_root = analytics.derived(p.with_(F=force))
        slope = at_root.f_tilde * at_root.lam_c ** 2 / (2 * at_root.gap ** 2) / _scale(p)
        return SensitivityReport('n', analytics.n_ss(at_root), analytics.var_n_ss(at_root), slope, force)
    raise InvalidSpecError('unknown observable `%s`, expected x, p or n' % observable)


def _steady_state_at(p, spec):
    """
    effective model: Liouvillian null space; full model: quasi-steady state of the |-> branch
    """
    if spec.include_spin:
        H = hilbert.rabi_hamiltonian(p, spec)
        return settle(DensityMatrix.ground(spec, '-'), H, p.gamma).final_state
    return steady_state_direct(analytics.effective_hamiltonian(p, spec), p.gamma, spec)


def fidelity_qfi(rho_minus, rho_plus, step, fidelity_max=None):
    """
    8 (1 - sqrt(Fid)) / step^2 for two states a force `step` apart
    """
    fidelity_max = fidelity_max or current_app.config.get('FORCESRV_FIDELITY_MAX', 1.0 + 1e-8)
    fidelity = rho_minus.fidelity(rho_plus)
    if fidelity > fidelity_max:
        raise FidelityError('fidelity %.12g exceeds 1; traces %.12g, %.12g, lowest eigenvalues %.3e, %.3e'
                            % (fidelity, rho_minus.trace(), rho_plus.trace(),
                               rho_minus.eigenvalues()[0], rho_plus.eigenvalues()[0]))
    return 8.0 * (1.0 - math.sqrt(min(fidelity, 1.0))) / step ** 2


def qfi_fidelity_oracle(p, spec, epsilon=None, richardson=True, jobs=None):
    """
    quantum Fisher information from the Bures distance of steady states at F - eps and F + eps,
    Richardson-extrapolated with eps/2

    :param p: SystemParams
    :param spec: bosonic spec for the effective model, spin spec for the full Rabi model
    :param epsilon: force step in newtons, defaults to a f_tilde step of FORCESRV_FIDELITY_STEP_FTILDE
    :param richardson: when False, return the plain central estimate at epsilon
    :param jobs: steady states are computed concurrently
    :return: per newton squared
    """
    start_time = time.time()
    if epsilon is None:
        epsilon = current_app.config.get('FORCESRV_FIDELITY_STEP_FTILDE', 1e-2) * _scale(p)
    shifts = [-epsilon, epsilon]
    if richardson:
        shifts += [-epsilon / 2.0, epsilon / 2.0]
    states = run_jobs(lambda shift: _steady_state_at(p.with_(F=p.F + shift), spec), shifts, jobs)

    coarse = fidelity_qfi(states[0], states[1], 2 * epsilon)
    if not richardson:
        return coarse
    fine = fidelity_qfi(states[2], states[3], epsilon)
    estimate = (4.0 * fine - coarse) / 3.0
    current_app.logger.debug('fidelity QFI %.6g (coarse %.6g, fine %.6g) in %s ms'
                             % (estimate, coarse, fine, (time.time() - start_time) * 1000))
    return estimate


def sld_parameters(gss, dAlpha_dF):
    """
    beta = P (cosh r - e^{2 i chi} sinh r) and the prefactor 2 dalpha/dF of the SLD
    2 (dalpha/dF) U (beta a_dag + beta* a) U^dag, U = R(delta) D(alpha) S(zeta)

    :param gss: GaussianSteadyState
    :param dAlpha_dF: per newton
    :return: beta, prefactor
    """
    r, chi = gss.squeeze_r, gss.squeeze_chi
    beta = gss.purity * (math.cosh(r) - np.exp(2j * chi) * math.sinh(r))
    return complex(beta), 2.0 * dAlpha_dF


def sld_operator(gss, dAlpha_dF, spec):
    """
    the symmetric logarithmic derivative as a matrix on the Fock space
    """
    beta, prefactor = sld_parameters(gss, dAlpha_dF)
    a, a_dag, _ = hilbert.fock_ops(spec)
    U = analytics.gaussian_unitary(gss, spec)
    inner = beta * a_dag + np.conj(beta) * a
    return prefactor * (U @ inner @ U.conj().T)
