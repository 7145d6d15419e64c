"""
Closed-form steady state of the bosonic effective model

    H_eff = hbar omega (1 - lambda^2/2) a_dag a - hbar omega lambda^2/4 (a_dag^2 + a^2) + zF/2 (a_dag + a)

with decay gamma. Quadratures are x = a_dag + a and p = i(a_dag - a), so the vacuum has
unit variances and unit covariance matrix; purity is det(cov)^(-1/2).
"""

import math

from dataclasses import dataclass

import numpy as np

from forcesrv.model.common import HBAR, InvalidSpecError, InstabilityError
from forcesrv.model import hilbert
from forcesrv.model.dynamics import DensityMatrix


@dataclass(frozen=True)
class DerivedParams:
    """
    lam = 2g/sqrt(omega Omega), lam_c = sqrt(1 + gamma^2/omega^2), f_tilde = zF/(hbar omega)
    """
    lam: float
    lam_c: float
    f_tilde: float

    @property
    def gamma_over_omega(self):
        return math.sqrt(max(self.lam_c ** 2 - 1.0, 0.0))

    @property
    def gap(self):
        """
        lam_c^2 - lam^2, positive in the stable phase
        """
        return self.lam_c ** 2 - self.lam ** 2

    def with_force(self, f_tilde):
        return DerivedParams(self.lam, self.lam_c, f_tilde)


def derived(p):
    """

    :param p: SystemParams
    :return: DerivedParams
    """
    if not (p.omega > 0 and p.Omega > 0):
        raise InvalidSpecError('omega and Omega must be positive to form lambda')
    lam = 2.0 * p.g / math.sqrt(p.omega * p.Omega)
    lam_c = math.sqrt(1.0 + (p.gamma / p.omega) ** 2)
    f_tilde = p.z * p.F / (HBAR * p.omega)
    return DerivedParams(lam=lam, lam_c=lam_c, f_tilde=f_tilde)


def critical_coupling_g(p):
    """
    the coupling g (rad/s) at which lambda reaches lambda_c
    """
    d = derived(p)
    return 0.5 * d.lam_c * math.sqrt(p.omega * p.Omega)


def _stable(d):
    if d.lam >= d.lam_c:
        raise InstabilityError(d.lam, d.lam_c)
    return d.gap


def _ratio(d, gamma_over_omega):
    return d.gamma_over_omega if gamma_over_omega is None else gamma_over_omega


def effective_hamiltonian(p, spec):
    """
    :param p: SystemParams
    :param spec: bosonic-only HilbertSpec
    :return: joules
    """
    if spec.include_spin:
        raise InvalidSpecError('the effective model acts on the oscillator only')
    d = derived(p)
    a, a_dag, n = hilbert.fock_ops(spec)
    x, _ = hilbert.quadratures(spec)
    H = HBAR * p.omega * (1.0 - d.lam ** 2 / 2.0) * n \
        - HBAR * p.omega * d.lam ** 2 / 4.0 * (a_dag @ a_dag + a @ a) \
        + 0.5 * p.z * p.F * x
    return hilbert.embed(0.5 * (H + H.conj().T), spec)


def x_ss(d):
    return -d.f_tilde / _stable(d)


def var_x_ss(d):
    """
    standard deviation of x, independent of the force
    """
    gap = _stable(d)
    return math.sqrt((2 * d.lam_c ** 2 - d.lam ** 2) / (2 * gap))


def p_ss(d, gamma_over_omega=None):
    return -d.f_tilde * _ratio(d, gamma_over_omega) / _stable(d)


def var_p_ss(d):
    """
    standard deviation of p, independent of the force
    """
    gap = _stable(d)
    return math.sqrt((2 * d.lam_c ** 2 - 3 * d.lam ** 2 + d.lam ** 4) / (2 * gap))


def sigma12_ss(d, gamma_over_omega=None):
    gap = _stable(d)
    return d.lam ** 2 * _ratio(d, gamma_over_omega) / (2 * gap)


def covariance_ss(d, gamma_over_omega=None):
    """
    symmetrized covariance matrix of (x, p); the vacuum gives the identity

    :param d: DerivedParams
    :param gamma_over_omega: defaults to sqrt(lam_c^2 - 1)
    :return: 2x2 array
    """
    s11 = var_x_ss(d) ** 2
    s22 = var_p_ss(d) ** 2
    s12 = sigma12_ss(d, gamma_over_omega)
    return np.array([[s11, s12], [s12, s22]])


def n_ss(d):
    gap = _stable(d)
    return d.f_tilde ** 2 * d.lam_c ** 2 / (4 * gap ** 2) + d.lam ** 4 / (8 * gap)


def var_n_ss(d, gamma_over_omega=None):
    """
    variance of the phonon number of the Gaussian steady state,
    (s11^2 + s22^2 + 2 s12^2 - 2)/8 + m^T cov m / 4 with m the quadrature means
    """
    cov = covariance_ss(d, gamma_over_omega)
    mean = np.array([x_ss(d), p_ss(d, gamma_over_omega)])
    return (np.sum(cov ** 2) - 2.0) / 8.0 + mean @ cov @ mean / 4.0


@dataclass(frozen=True, eq=False)
class GaussianSteadyState:
    """
    rho = sum_n p_n R(delta) D(alpha) S(zeta) |n><n| S^dag D^dag R^dag with zeta = r e^{2 i chi}
    and S(zeta) = exp(zeta/2 a_dag^2 - zeta*/2 a^2); p_n thermal with mean thermal_n
    """
    mean_x: float
    mean_p: float
    cov: np.ndarray
    purity: float
    thermal_n: float
    disp_alpha: complex
    squeeze_r: float
    squeeze_chi: float
    rot_delta: float

    @property
    def zeta(self):
        return self.squeeze_r * np.exp(2j * self.squeeze_chi)


def decompose_covariance(cov):
    """
    purity, squeezing and ellipse orientation of a covariance matrix

    :param cov: 2x2 symmetric array
    :return: purity, r, theta where theta is the angle of the major axis in the (x, p) plane
    """
    a, b, c = cov[0, 0], cov[0, 1], cov[1, 1]
    det = a * c - b * b
    purity = 1.0 / math.sqrt(det)
    spread = math.sqrt((a - c) ** 2 + 4 * b * b)
    r = 0.5 * math.atanh(spread / (a + c))
    theta = 0.5 * math.atan2(2 * b, a - c)
    return purity, r, theta


def gaussian_decomposition(d, gamma_over_omega=None):
    """
    first moments, covariance, purity and the (alpha, r, chi, delta) decomposition of the steady state.

    <a> = alpha e^{i delta} with tan delta = gamma/omega, so alpha = -f_tilde lam_c / (2 (lam_c^2 - lam^2))
    is signed: it has the sign of -F and the usual magnitude-only expression is |alpha|

    :param d: DerivedParams
    :param gamma_over_omega:
    :return: GaussianSteadyState
    """
    ratio = _ratio(d, gamma_over_omega)
    gap = _stable(d)
    cov = covariance_ss(d, ratio)
    purity, r, theta = decompose_covariance(cov)
    delta = math.atan(ratio)
    alpha = -d.f_tilde * math.sqrt(1.0 + ratio ** 2) / (2 * gap)
    return GaussianSteadyState(mean_x=x_ss(d), mean_p=p_ss(d, ratio), cov=cov, purity=purity,
                               thermal_n=(1.0 - purity) / (2.0 * purity), disp_alpha=complex(alpha),
                               squeeze_r=r, squeeze_chi=theta - delta, rot_delta=delta)


def thermal_weights(mean_n, fock_dim):
    """
    p_n = N^n/(N+1)^(n+1), renormalized on the truncated space
    """
    n = np.arange(fock_dim)
    if mean_n <= 0:
        weights = (n == 0).astype(float)
    else:
        weights = np.exp(n * math.log(mean_n / (mean_n + 1.0))) / (mean_n + 1.0)
    return weights / weights.sum()


def gaussian_unitary(gss, spec):
    """
    R(delta) D(alpha) S(zeta) on the Fock space
    """
    return hilbert.rotation(gss.rot_delta, spec) @ hilbert.displacement(gss.disp_alpha, spec) \
        @ hilbert.squeeze(-gss.zeta, spec)


def reconstruct_state(gss, spec):
    """
    builds the Gaussian state from its decomposition

    :param gss: GaussianSteadyState
    :param spec: bosonic-only HilbertSpec
    :return: DensityMatrix
    """
    if spec.include_spin:
        raise InvalidSpecError('the Gaussian steady state lives on the oscillator only')
    U = gaussian_unitary(gss, spec)
    rho = U @ np.diag(thermal_weights(gss.thermal_n, spec.fock_dim)) @ U.conj().T
    return DensityMatrix(rho, spec).hermitized()


@dataclass(frozen=True, eq=False)
class StateMoments:
    """
    quadrature moments read off a numerical state
    """
    mean_x: float
    mean_p: float
    cov: np.ndarray
    n: float
    var_n: float

    @property
    def delta_x(self):
        return math.sqrt(self.cov[0, 0])

    @property
    def delta_p(self):
        return math.sqrt(self.cov[1, 1])


def moments_of_state(rho):
    """
    first and symmetrized second moments of x and p, mean and variance of a_dag a;
    the spin is traced out for full-model states

    :param rho: DensityMatrix
    :return: StateMoments
    """
    boson = rho.reduced_boson()
    spec = boson.spec
    x, p = hilbert.quadratures(spec)
    _, _, n = hilbert.fock_ops(spec)
    mean_x, mean_p = boson.expect(x), boson.expect(p)
    s11 = boson.expect(x @ x) - mean_x ** 2
    s22 = boson.expect(p @ p) - mean_p ** 2
    s12 = 0.5 * boson.expect(x @ p + p @ x) - mean_x * mean_p
    mean_n = boson.expect(n)
    return StateMoments(mean_x=mean_x, mean_p=mean_p, cov=np.array([[s11, s12], [s12, s22]]),
                        n=mean_n, var_n=boson.expect(n @ n) - mean_n ** 2)
