"""
Oracle-equivalence suite: every closed form and every solver is compared against an
independent numerical route. Each suite returns a list of Check; `run_suites` collects
them. Slow suites run the full-model reproductions as well.
"""

import math
import time

from dataclasses import dataclass

import numpy as np

from flask import current_app

from forcesrv.model.common import HBAR, SystemParams, HilbertSpec, Error, FREQUENCY_UNITS
from forcesrv.model import hilbert
from forcesrv.model.dynamics import DensityMatrix, EvolveConfig, evolve, lindblad_rhs, default_jump, \
    steady_state_evolve, steady_state_direct
from forcesrv.sensing import analytics, metrology, protocol
from forcesrv.experiment import reproduce
from forcesrv.experiment.reproduce import Check

KHZ = FREQUENCY_UNITS['kHz']

# effective model at the steady state figure parameters
EFFECTIVE_POINT = SystemParams.from_khz(omega_khz=0.3, Omega_khz=320.0, g_khz=2.0, gamma_khz=0.08, F_yN=5.0)

# models for evolve against null space; the full Rabi ones mix their spin branches quickly
EQUIVALENCE_MODELS = (
    ('effective g=2 kHz', EFFECTIVE_POINT, HilbertSpec(20, include_spin=False)),
    ('effective g=3 kHz', EFFECTIVE_POINT.with_(g=3.0 * KHZ), HilbertSpec(30, include_spin=False)),
    ('effective omega=0.32 kHz', EFFECTIVE_POINT.with_(omega=0.32 * KHZ, g=2.5 * KHZ, F=6e-24),
     HilbertSpec(25, include_spin=False)),
    ('rabi Omega=1.5 kHz', SystemParams.from_khz(omega_khz=1.0, Omega_khz=1.5, g_khz=0.6, gamma_khz=1.0, F_yN=10.0),
     HilbertSpec(16)),
    ('rabi Omega=1 kHz', SystemParams.from_khz(omega_khz=2.0, Omega_khz=1.0, g_khz=0.5, gamma_khz=1.5, F_yN=10.0),
     HilbertSpec(12)),
)


@dataclass(frozen=True)
class Suite:
    name: str
    run: object
    slow: bool = False


def model_hamiltonian(p, spec):
    if spec.include_spin:
        return hilbert.rabi_hamiltonian(p, spec)
    return analytics.effective_hamiltonian(p, spec)


def random_state(rng, spec):
    """
    A A^dag / Tr(A A^dag) for a complex Gaussian A
    """
    A = rng.normal(size=(spec.dim, spec.dim)) + 1j * rng.normal(size=(spec.dim, spec.dim))
    rho = A @ A.conj().T
    return DensityMatrix(rho / np.trace(rho).real, spec)


def random_hamiltonian(rng, spec, scale=HBAR * KHZ):
    A = rng.normal(size=(spec.dim, spec.dim)) + 1j * rng.normal(size=(spec.dim, spec.dim))
    return 0.5 * scale * (A + A.conj().T)


def lindblad_invariants(samples=100, seed=7):
    """
    trace preservation and Hermiticity of the generator, and a valid state after evolution,
    for random Hamiltonians and random initial states; one check per invariant, worst sample reported
    """
    rng = np.random.default_rng(seed)
    spec = HilbertSpec(4)
    gamma = 0.5 * KHZ
    jump = default_jump(spec)
    worst_trace, worst_hermiticity, lowest, failures = 0.0, 0.0, np.inf, []
    for sample in range(samples):
        H = random_hamiltonian(rng, spec)
        rho = random_state(rng, spec)
        derivative = lindblad_rhs(rho.data, H, gamma, jump)
        scale = np.linalg.norm(derivative)
        worst_trace = max(worst_trace, abs(np.trace(derivative)) / scale)
        worst_hermiticity = max(worst_hermiticity, np.linalg.norm(derivative - derivative.conj().T) / scale)
        result = evolve(rho, H, gamma, EvolveConfig.from_config(2.0 / gamma, 0.5 / gamma))
        lowest = min(lowest, result.min_eigenvalue)
        try:
            result.final_state.validate()
        except Error as e:
            failures.append('sample %d: %s' % (sample, e))
    return [Check('generator trace free on %d samples' % samples, worst_trace < 1e-12,
                  'worst |Tr drho|/||drho|| = %.2e' % worst_trace),
            Check('generator Hermitian on %d samples' % samples, worst_hermiticity < 1e-12,
                  'worst relative anti-Hermitian part %.2e' % worst_hermiticity),
            Check('evolved states valid on %d samples' % samples, not failures,
                  '; '.join(failures) if failures else 'lowest eigenvalue %.2e' % lowest)]


def steady_state_equivalence(models=EQUIVALENCE_MODELS, epsilon=1e-7, max_decay_times=400):
    """
    steady_state_evolve against steady_state_direct, trace distance below 1e-5
    """
    checks = []
    for name, p, spec in models:
        H = model_hamiltonian(p, spec)
        direct = steady_state_direct(H, p.gamma, spec)
        evolved = steady_state_evolve(DensityMatrix.ground(spec), H, p.gamma, epsilon=epsilon,
                                      max_decay_times=max_decay_times)
        distance = evolved.state.trace_distance(direct)
        checks.append(Check('steady states agree, %s (dim %d)' % (name, spec.dim), distance < 1e-5,
                            'trace distance %.2e, residual %.2e' % (distance, evolved.residual)))
    return checks


def moments_against_null_space(p=EFFECTIVE_POINT, fock_dim=30):
    """
    closed-form first and second moments against the Liouvillian null space of the effective model
    """
    spec = HilbertSpec(fock_dim, include_spin=False)
    d = analytics.derived(p)
    moments = analytics.moments_of_state(steady_state_direct(model_hamiltonian(p, spec), p.gamma, spec))
    pairs = [('<x>', moments.mean_x, analytics.x_ss(d)), ('<p>', moments.mean_p, analytics.p_ss(d)),
             ('Delta x', moments.delta_x, analytics.var_x_ss(d)), ('Delta p', moments.delta_p, analytics.var_p_ss(d)),
             ('sigma12', moments.cov[0, 1], analytics.sigma12_ss(d)), ('<n>', moments.n, analytics.n_ss(d)),
             ('Delta n^2', moments.var_n, analytics.var_n_ss(d))]
    return [Check('null space %s matches the closed form' % label, abs(numeric - closed) < 1e-4 * max(1.0, abs(closed)),
                  'numerical %.8f, closed form %.8f' % (numeric, closed))
            for label, numeric, closed in pairs]


def force_linearity(p=EFFECTIVE_POINT, fock_dim=30):
    """
    <x>, <p> odd and linear in F, <n>(F) - <n>(0) quadratic; closed forms and null-space states
    """
    spec = HilbertSpec(fock_dim, include_spin=False)

    def closed(q):
        d = analytics.derived(q)
        return analytics.x_ss(d), analytics.p_ss(d), analytics.n_ss(d)

    def numerical(q):
        moments = analytics.moments_of_state(steady_state_direct(model_hamiltonian(q, spec), q.gamma, spec))
        return moments.mean_x, moments.mean_p, moments.n

    checks = []
    for label, moments_at, tolerance in (('closed form', closed, 1e-12), ('null space', numerical, 1e-5)):
        zero, single, double, reverse = [moments_at(p.with_(F=scale * p.F)) for scale in (0.0, 1.0, 2.0, -1.0)]
        worst = max(abs(double[0] - 2 * single[0]) / abs(single[0]), abs(reverse[0] + single[0]) / abs(single[0]),
                    abs(double[1] - 2 * single[1]) / abs(single[1]), abs(reverse[1] + single[1]) / abs(single[1]),
                    abs((double[2] - zero[2]) - 4 * (single[2] - zero[2])) / abs(single[2] - zero[2]),
                    abs(reverse[2] - single[2]) / abs(single[2] - zero[2]))
        checks.append(Check('%s moments linear and quadratic in F' % label, worst < tolerance,
                            'worst relative deviation %.2e' % worst))
    return checks


def gaussian_reconstruction(p=EFFECTIVE_POINT, fock_dim=60):
    """
    the state rebuilt from (alpha, r, chi, delta, purity) has the closed-form moments
    """
    d = analytics.derived(p)
    gss = analytics.gaussian_decomposition(d)
    moments = analytics.moments_of_state(analytics.reconstruct_state(gss, HilbertSpec(fock_dim, include_spin=False)))
    cov = analytics.covariance_ss(d)
    error = max(abs(moments.mean_x - gss.mean_x), abs(moments.mean_p - gss.mean_p),
                float(np.abs(moments.cov - cov).max()))
    return [Check('reconstructed Gaussian state has the closed-form moments', error < 1e-4, 'max error %.2e' % error)]


QFI_COUPLING_FRACTIONS = (0.1, 0.3, 0.5, 0.7, 0.95)
QFI_LOSS_RATIOS = (0.05, 0.27, 1.0, 3.0)


def qfi_forms(p=EFFECTIVE_POINT, fractions=QFI_COUPLING_FRACTIONS, loss_ratios=QFI_LOSS_RATIOS):
    """
    closed-form QFI against the covariance form on a lambda/lambda_c x gamma/omega grid
    """
    worst = 0.0
    for ratio in loss_ratios:
        lossy = p.with_(gamma=ratio * p.omega)
        g_c = analytics.critical_coupling_g(lossy)
        for fraction in fractions:
            q = lossy.with_(g=fraction * g_c)
            closed = metrology.qfi_closed_form(q)
            covariance = metrology.qfi_covariance(metrology.mean_derivative(q),
                                                  analytics.covariance_ss(analytics.derived(q)))
            worst = max(worst, abs(closed - covariance) / closed)
    points = len(fractions) * len(loss_ratios)
    return [Check('QFI closed form equals covariance form on %d (lambda, gamma/omega) points' % points, worst < 1e-10,
                  'worst relative difference %.2e' % worst)]


def qfi_fidelity(p=EFFECTIVE_POINT, fock_dim=30, jobs=None):
    spec = HilbertSpec(fock_dim, include_spin=False)
    estimate = metrology.qfi_fidelity_oracle(p, spec, jobs=jobs)
    closed = metrology.qfi_closed_form(p)
    error = abs(estimate - closed) / closed
    return [Check('fidelity QFI of the effective model within 2%', error < 0.02,
                  'fidelity %.6g, closed form %.6g per N^2' % (estimate, closed))]


def sld_identities(p=EFFECTIVE_POINT, fock_dim=60):
    """
    Tr(rho L) = 0 and Tr(rho L^2) = I_Q for the symmetric logarithmic derivative
    """
    spec = HilbertSpec(fock_dim, include_spin=False)
    d = analytics.derived(p)
    gss = analytics.gaussian_decomposition(d)
    rho = analytics.reconstruct_state(gss, spec)
    sld = metrology.sld_operator(gss, metrology.alpha_derivative(p), spec)
    qfi = metrology.qfi_closed_form(p)
    first = abs(rho.expect_complex(sld)) / math.sqrt(qfi)
    second = abs(rho.expect(sld @ sld) - qfi) / qfi
    return [Check('Tr(rho L) vanishes', first < 1e-6, 'relative %.2e' % first),
            Check('Tr(rho L^2) equals the QFI', second < 1e-4, 'relative %.2e' % second)]


def fitted_slope(values, distances):
    return float(np.polyfit(np.log(distances), np.log(np.abs(values)), 1)[0])


def critical_scaling(p=EFFECTIVE_POINT, points=12):
    """
    <x> ~ (lam_c - lam)^-1, Delta x ~ (lam_c - lam)^-1/2, <n> ~ (lam_c - lam)^-2
    """
    d0 = analytics.derived(p)
    distances = np.logspace(-5, -3, points) * d0.lam_c
    states = [analytics.DerivedParams(lam=d0.lam_c - distance, lam_c=d0.lam_c, f_tilde=d0.f_tilde)
              for distance in distances]
    checks = []
    for label, function, exponent in (('<x>', analytics.x_ss, -1.0), ('Delta x', analytics.var_x_ss, -0.5),
                                      ('<n>', analytics.n_ss, -2.0)):
        slope = fitted_slope([function(d) for d in states], distances)
        checks.append(Check('critical exponent of %s' % label, abs(slope - exponent) < 0.05,
                            'fitted %.4f, expected %.1f' % (slope, exponent)))
    return checks


def cramer_rao(p=reproduce.FIG4_PARAMS, points=25):
    checks = []
    lam_c = analytics.derived(p).lam_c
    dominated, near_worst = True, 0.0
    for g in np.linspace(1.0 * KHZ, 0.995 * analytics.critical_coupling_g(p), points):
        q = p.with_(g=g)
        bound = metrology.delta_f_q(q)
        values = [metrology.delta_f_x(q), metrology.delta_f_p(q), metrology.delta_f_n(q)]
        dominated &= all(value >= bound * (1 - 1e-12) for value in values if value)
        if analytics.derived(q).lam >= 0.95 * lam_c:
            near_worst = max(near_worst, (values[0] - bound) / bound)
    checks.append(Check('dF_x, dF_p, dF_n never beat the Cramer-Rao bound', dominated))
    checks.append(Check('dF_x within 5% of the bound near critical coupling', near_worst < 0.05,
                        'worst excess %.4f' % near_worst))
    return checks


def quoted_sensitivities():
    reproduction = reproduce.Reproduction('quoted')
    d_fx = metrology.delta_f_x(reproduce.SENSITIVITY_PARAMS)
    d_fn = metrology.delta_f_n(reproduce.SENSITIVITY_PARAMS)
    reproduction.check('dF_x is 4.4 yN within 2%', reproduce.relative_error(d_fx, reproduce.QUOTED['dFx']) < 0.02,
                       '%.3g yN' % (d_fx / reproduce.YN))
    reproduction.check('dF_n is 7.8 yN within 5%', reproduce.relative_error(d_fn, reproduce.QUOTED['dFn']) < 0.05,
                       '%.3g yN' % (d_fn / reproduce.YN))
    squeezed = protocol.min_force_demkov(reproduce.FIG5_PROTOCOL)
    ratio = protocol.min_force_demkov(reproduce.FIG5_PROTOCOL.with_(xi=0.0)) / squeezed
    reproduction.check('squeezing enhancement is 8.7 within 5%',
                       reproduce.relative_error(ratio, reproduce.QUOTED['Fmin_ratio']) < 0.05, '%.3g' % ratio)
    reproduction.check('Demkov signal is odd in the force', abs(protocol.signal_parity(reproduce.FIG5_PROTOCOL)) < 1e-12)
    return reproduction.checks


def full_model_fidelity(jobs=None, fock_dim=20):
    """
    fidelity QFI of the full Rabi model at Omega/omega = 1000 within 5% of the closed form
    """
    p = SystemParams.from_khz(omega_khz=0.3, Omega_khz=300.0, g_khz=2.0, gamma_khz=0.08, F_yN=5.0)
    estimate = metrology.qfi_fidelity_oracle(p, HilbertSpec(fock_dim), jobs=jobs)
    closed = metrology.qfi_closed_form(p)
    error = abs(estimate - closed) / closed
    return [Check('fidelity QFI of the full model within 5%', error < 0.05,
                  'fidelity %.6g, closed form %.6g per N^2' % (estimate, closed))]


def sweep_parity(fock_dim=None):
    """
    simulated <sigma_z(t_f)> is odd in the force
    """
    spec = HilbertSpec(fock_dim) if fock_dim else None
    parity = protocol.signal_parity(reproduce.FIG5_PROTOCOL, lambda q: protocol.numeric_sigma_z(q, spec))
    return [Check('simulated spin signal is odd in the force', abs(parity) < 1e-3, 'sum %.2e' % parity)]


def dissipative_protocol(fock_dim=None):
    """
    master-equation sweep at gamma/2pi = 1 Hz against the quoted 1.1 yN
    """
    force = reproduce.dissipative_min_force(fock_dim)
    error = reproduce.relative_error(force, reproduce.QUOTED['Fmin_dissipative'])
    return [Check('dissipative F_min is 1.1 yN within 20%', error < 0.20, '%.3g yN' % (force / reproduce.YN))]


SUITES = (
    Suite('lindblad invariants', lambda output, jobs: lindblad_invariants()),
    Suite('steady state equivalence', lambda output, jobs: steady_state_equivalence()),
    Suite('moments against null space', lambda output, jobs: moments_against_null_space()),
    Suite('force linearity', lambda output, jobs: force_linearity()),
    Suite('gaussian reconstruction', lambda output, jobs: gaussian_reconstruction()),
    Suite('qfi forms', lambda output, jobs: qfi_forms()),
    Suite('qfi fidelity', lambda output, jobs: qfi_fidelity(jobs=jobs)),
    Suite('sld identities', lambda output, jobs: sld_identities()),
    Suite('critical scaling', lambda output, jobs: critical_scaling()),
    Suite('cramer-rao', lambda output, jobs: cramer_rao()),
    Suite('quoted sensitivities', lambda output, jobs: quoted_sensitivities()),
    Suite('fig1', lambda output, jobs: reproduce.fig1(output, jobs=jobs).checks, slow=True),
    Suite('fig2', lambda output, jobs: reproduce.fig2(output, jobs=jobs).checks, slow=True),
    Suite('fig5', lambda output, jobs: reproduce.fig5(output, jobs=jobs).checks, slow=True),
    Suite('full model fidelity', lambda output, jobs: full_model_fidelity(jobs=jobs), slow=True),
    Suite('sweep parity', lambda output, jobs: sweep_parity(), slow=True),
    Suite('dissipative protocol', lambda output, jobs: dissipative_protocol(), slow=True),
)


def run_suites(output=None, slow=False, jobs=None, suites=SUITES):
    """
    :param output: RunOutput for the reproductions of the slow suites
    :param slow: include the slow suites
    :param jobs:
    :return: list of (suite name, list of Check); a suite that raises yields one failed check
    """
    results = []
    for suite in suites:
        if suite.slow and not slow:
            continue
        start_time = time.time()
        try:
            checks = suite.run(output, jobs)
        except Error as e:
            current_app.logger.error('suite %s raised %s: %s' % (suite.name, e.__class__.__name__, e))
            checks = [Check(suite.name, False, '%s: %s' % (e.__class__.__name__, e))]
        current_app.logger.info('suite %s: %d/%d passed in %s ms'
                                % (suite.name, sum(check.passed for check in checks), len(checks),
                                   (time.time() - start_time) * 1000))
        results.append((suite.name, checks))
    return results
