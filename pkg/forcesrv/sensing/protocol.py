"""
Squeezing enhanced adiabatic force sensing.

The transverse field is swept down as Omega(t) = Omega0 exp(-kappa t) with the squeezing
term hbar xi (a_dag^2 e^{i phi} + a^2 e^{-i phi}) switched on; starting from |->|0> the
system ends in a superposition of the two displaced squeezed ground states and the force
is read from <sigma_z(t_f)>. In the two-state reduction the sweep is a Demkov problem:

    <sigma_z(t_f)> = tanh(pi g f_tilde / (kappa (1 - 2 xi/omega)))
"""

import math
import time

from dataclasses import dataclass, replace

import numpy as np

from flask import current_app
from scipy.linalg import eigvalsh
from scipy.optimize import bisect

from forcesrv.model.common import HBAR, HilbertSpec, SpectrumCollapseError, NoSensitivityError, BracketError, \
    InvalidSpecError
from forcesrv.model import hilbert
from forcesrv.model.dynamics import DensityMatrix, EvolveConfig, HamiltonianSchedule, evolve, schrodinger_evolve

# SNR = 1 for the spin signal: tanh(u) = sqrt(1 - tanh(u)^2)
U_SNR_ONE = math.atanh(1.0 / math.sqrt(2.0))


@dataclass(frozen=True)
class SqueezeProtocolParams:
    """
    base carries omega, g, gamma, z and F; its Omega is replaced by the schedule
    """
    base: object
    xi: float
    Omega0: float
    kappa: float
    t_final: float
    phi: float = math.pi

    def __post_init__(self):
        if not self.xi >= 0:
            raise InvalidSpecError('xi must be >= 0, got %r' % (self.xi,))
        if not (self.Omega0 > 0 and self.kappa > 0 and self.t_final > 0):
            raise InvalidSpecError('Omega0, kappa and t_final must be positive')
        if 2 * self.xi >= self.base.omega:
            raise SpectrumCollapseError(self.xi, self.base.omega)

    def with_(self, **changes):
        base_changes = dict((key, changes.pop(key)) for key in list(changes) if key in ('omega', 'g', 'gamma', 'z', 'F'))
        params = replace(self, **changes)
        if base_changes:
            params = replace(params, base=params.base.with_(**base_changes))
        return params

    @property
    def f_tilde(self):
        return self.base.z * self.base.F / (HBAR * self.base.omega)

    def omega_final(self):
        return omega_schedule(self.Omega0, self.kappa, self.t_final)


@dataclass(frozen=True)
class TwoStateModel:
    """
    ground doublet of the Omega = 0 Hamiltonian; delta_c is evaluated at Omega0, energies in joules.
    r_exact is the diagonalizing squeeze of squeeze_exact, not 1/4 ln(1 - (2 xi/omega)^2)
    """
    delta_c: float
    f_up: float
    f_down: float
    alpha_up: float
    alpha_down: float
    r_exact: float
    overlap: float

    def delta_c_at(self, Omega):
        return HBAR * Omega / 2.0 * self.overlap


def omega_schedule(Omega0, kappa, t):
    """
    Omega0 exp(-kappa t), rad/s
    """
    return Omega0 * np.exp(-kappa * t)


def gap(p):
    """
    hbar omega sqrt(1 - (2 xi/omega)^2), joules
    """
    ratio = 2 * p.xi / p.base.omega
    if ratio >= 1:
        raise SpectrumCollapseError(p.xi, p.base.omega)
    return HBAR * p.base.omega * math.sqrt(1.0 - ratio ** 2)


def adiabaticity_phase(p):
    """
    Delta E t_f / hbar
    """
    return gap(p) * p.t_final / HBAR


def validity_warnings(p, min_phase=None, endpoint_ratio=None):
    """
    :return: list of messages for a sweep outside the adiabatic two-state regime
    """
    config = current_app.config
    min_phase = min_phase or config.get('FORCESRV_ADIABATIC_MIN_PHASE', 50.0)
    endpoint_ratio = endpoint_ratio or config.get('FORCESRV_FERRO_ENDPOINT_RATIO', 0.1)
    warnings = []
    phase = adiabaticity_phase(p)
    if phase < min_phase:
        warnings.append('Delta E t_f / hbar = %.3g is below %.3g, the sweep is not adiabatic' % (phase, min_phase))
    if p.omega_final() > endpoint_ratio * p.base.omega:
        warnings.append('Omega(t_f) = %.3g omega does not reach the ferromagnetic endpoint'
                        % (p.omega_final() / p.base.omega))
    for warning in warnings:
        current_app.logger.warning(warning)
    return warnings


def squeeze_exact(p):
    """
    r with S(r) diagonalizing hbar omega a_dag a - hbar xi (a_dag^2 + a^2), r < 0 stretches x.

    tanh(2|r|) = 2 xi/omega, i.e. r = 1/4 ln((omega - 2 xi)/(omega + 2 xi)); the shorter
    1/4 ln(1 - (2 xi/omega)^2) sometimes quoted for it does not diagonalize the oscillator
    """
    return 0.25 * math.log((p.base.omega - 2 * p.xi) / (p.base.omega + 2 * p.xi))


def exact_spectrum_no_field(p, spec):
    """
    numerical spectrum of the force-free squeezed Rabi Hamiltonian at Omega = 0 and the
    two-state model built from the displaced squeezed ground states

    :param p: SqueezeProtocolParams
    :param spec: HilbertSpec with spin
    :return: eigenvalues (joules, ascending), TwoStateModel
    """
    omega, g = p.base.omega, p.base.g
    if 2 * p.xi >= omega:
        raise SpectrumCollapseError(p.xi, omega)
    H = hilbert.squeezed_rabi_hamiltonian(p.base.with_(Omega=0.0, F=0.0), p.xi, p.phi, spec)
    eigenvalues = eigvalsh(H)

    r = squeeze_exact(p)
    alpha_up, alpha_down = -g / (omega - 2 * p.xi), g / (omega - 2 * p.xi)
    S = hilbert.squeeze(r, spec)
    vacuum = hilbert.fock_ket(0, spec)
    psi_up = hilbert.product_ket('up', hilbert.displacement(alpha_up, spec) @ S @ vacuum)
    psi_down = hilbert.product_ket('down', hilbert.displacement(alpha_down, spec) @ S @ vacuum)

    sx, _, _ = hilbert.pauli()
    overlap = np.vdot(psi_down, hilbert.spin_op(sx, spec) @ psi_up).real
    H_F = hilbert.force_term(p.base, spec)
    model = TwoStateModel(delta_c=HBAR * p.Omega0 / 2.0 * overlap,
                          f_up=np.vdot(psi_up, H_F @ psi_up).real,
                          f_down=np.vdot(psi_down, H_F @ psi_down).real,
                          alpha_up=alpha_up, alpha_down=alpha_down, r_exact=r, overlap=overlap)
    return eigenvalues, model


def demkov_sigma_z(p):
    """
    <sigma_z(t_f)> of the two-state reduction
    """
    return math.tanh(math.pi * p.base.g * p.f_tilde / (p.kappa * (1.0 - 2 * p.xi / p.base.omega)))


def spin_snr(sigma_z):
    """
    |<sigma_z>| / sqrt(1 - <sigma_z>^2)
    """
    variance = 1.0 - sigma_z ** 2
    if variance <= 0:
        return np.inf
    return abs(sigma_z) / math.sqrt(variance)


def demkov_snr(p):
    return spin_snr(demkov_sigma_z(p))


def signal_parity(p, sigma_z=demkov_sigma_z):
    """
    signal(F) + signal(-F), zero for a signal odd in the force
    """
    return sigma_z(p) + sigma_z(p.with_(F=-p.base.F))


def min_force_demkov(p):
    """
    force with demkov_snr = 1: u* kappa (1 - 2 xi/omega) hbar omega / (pi g z)

    :return: newtons
    """
    if p.base.g == 0:
        raise NoSensitivityError('the spin does not couple to the oscillator, g = 0')
    return U_SNR_ONE * p.kappa * (1.0 - 2 * p.xi / p.base.omega) * HBAR * p.base.omega / (math.pi * p.base.g * p.base.z)


def sweep_schedule(p, spec, steps_per_period=None):
    """
    H(t) = H_sq(Omega = 0) + Omega(t) hbar/2 sx, with steps bounded by a fraction of 2 pi/Omega(t)
    """
    steps_per_period = steps_per_period or current_app.config.get('FORCESRV_STEPS_PER_PERIOD', 20)
    sx, _, _ = hilbert.pauli()
    static = hilbert.squeezed_rabi_hamiltonian(p.base.with_(Omega=0.0), p.xi, p.phi, spec)
    field = 0.5 * HBAR * hilbert.spin_op(sx, spec)
    coefficient = lambda t: omega_schedule(p.Omega0, p.kappa, t)
    max_step_at = lambda t: 2 * math.pi / omega_schedule(p.Omega0, p.kappa, t) / steps_per_period
    return HamiltonianSchedule(static=static, terms=((field, coefficient),), max_step_at=max_step_at)


def default_sweep_spec(p):
    config = current_app.config
    if p.base.gamma > 0:
        return HilbertSpec(config.get('FORCESRV_FOCK_DIM_DISSIPATIVE', 16))
    return HilbertSpec(config.get('FORCESRV_FOCK_DIM_SWEEP', 60))


def simulate_sweep(p, spec=None, cfg=None):
    """
    evolves |->|0> through the sweep; state vector when gamma = 0, master equation otherwise

    :param p: SqueezeProtocolParams
    :param spec: HilbertSpec with spin
    :param cfg: EvolveConfig, t_final is taken from p
    :return: SweepResult with sigma_z, delta_sigma_z and n series
    """
    start_time = time.time()
    spec = spec or default_sweep_spec(p)
    if cfg is None:
        cfg = EvolveConfig.from_config(p.t_final, current_app.config.get('FORCESRV_PROTOCOL_RECORD_EVERY', 1e-3))
    elif cfg.t_final != p.t_final:
        cfg = cfg.with_(t_final=p.t_final, record_every=min(cfg.record_every, p.t_final))
    warnings = validity_warnings(p)

    _, _, sz = hilbert.pauli()
    _, _, n = hilbert.fock_ops(spec)
    observables = {'sigma_z': hilbert.spin_op(sz, spec), 'n': hilbert.embed(n, spec)}
    schedule = sweep_schedule(p, spec)
    psi0 = hilbert.product_ket('-', hilbert.fock_ket(0, spec))
    if p.base.gamma == 0:
        result = schrodinger_evolve(psi0, schedule, spec, cfg, observables)
    else:
        result = evolve(DensityMatrix.from_ket(psi0, spec), schedule, p.base.gamma, cfg, observables)

    sigma_z = result.observables['sigma_z']
    result.observables['delta_sigma_z'] = np.sqrt(np.clip(1.0 - sigma_z ** 2, 0.0, None))
    result.metadata['warnings'] = warnings
    current_app.logger.info('Sweep xi/2pi=%.4g Hz, F=%.4g N done: <sigma_z(t_f)>=%.6f in %s ms'
                            % (p.xi / (2 * math.pi), p.base.F, sigma_z[-1], (time.time() - start_time) * 1000))
    return result


def numeric_sigma_z(p, spec=None, cfg=None):
    return simulate_sweep(p, spec, cfg).final('sigma_z')


def min_force_numeric(p, spec=None, cfg=None, rel_tol=None, bracket=(0.25, 4.0), expansions=4):
    """
    force at which the simulated spin SNR crosses one, by bisection

    :param p: SqueezeProtocolParams, base.F ignored
    :param spec:
    :param cfg:
    :param rel_tol: defaults to FORCESRV_PROTOCOL_REL_TOL
    :param bracket: in units of min_force_demkov
    :param expansions: times the upper end may be doubled while the SNR stays below one
    :return: newtons
    """
    start_time = time.time()
    rel_tol = rel_tol or current_app.config.get('FORCESRV_PROTOCOL_REL_TOL', 1e-2)
    unit = min_force_demkov(p)
    evaluated = {}

    def f(scaled):
        # bisect evaluates the bracket ends again
        if scaled not in evaluated:
            evaluated[scaled] = spin_snr(numeric_sigma_z(p.with_(F=scaled * unit), spec, cfg)) - 1.0
        return evaluated[scaled]

    lo, hi = bracket
    f_lo, f_hi = f(lo), f(hi)
    for _ in range(expansions):
        if f_hi > 0:
            break
        lo, f_lo = hi, f_hi
        hi *= 2.0
        f_hi = f(hi)
    if not (f_lo < 0 < f_hi):
        raise BracketError('spin SNR does not cross 1 on [%.3g, %.3g] x F_min(Demkov)' % (lo, hi))

    root = bisect(f, lo, hi, xtol=1e-12, rtol=rel_tol)
    current_app.logger.info('numeric F_min = %.4g N (%.3g x Demkov) in %s ms'
                            % (root * unit, root, (time.time() - start_time) * 1000))
    return root * unit
