"""
Lindblad master equation on the truncated spin (x) boson space.

    drho/dt = -(i/hbar)[H, rho] + gamma (2 J rho J^dag - {J^dag J, rho})

with J = I_spin (x) a for the full model and J = a for the bosonic effective model.
Integration is adaptive (scipy solve_ivp) and proceeds segment by segment between
record ticks. Segments are cut to at most hermitize_every, and to 1/(gamma n) for
n = FORCESRV_HERMITIZE_PER_DECAY_TIME; the state is hermitized and renormalized after each.
"""

import time

from dataclasses import dataclass, field, replace

import numpy as np

from flask import current_app
from scipy.integrate import solve_ivp
from scipy.linalg import svd, eigh, eigvalsh

from forcesrv.model.common import HBAR, HilbertSpec, DimensionError, InvalidSpecError, IntegrationError, \
    NullSpaceError, NumericalError
from forcesrv.model import hilbert


class DensityMatrix(object):
    """
    Hermitian, unit trace, positive matrix on the space described by `spec`.
    Instances are immutable.
    """

    def __init__(self, data, spec):
        """

        :param data: dim x dim complex array
        :param spec: HilbertSpec
        """
        data = np.array(data, dtype=complex)
        if data.shape != (spec.dim, spec.dim):
            raise DimensionError('density matrix of shape %s does not match dimension %d' % (data.shape, spec.dim))
        data.setflags(write=False)
        self.data = data
        self.spec = spec

    @classmethod
    def from_ket(cls, ket, spec):
        ket = np.asarray(ket, dtype=complex)
        ket = ket / np.linalg.norm(ket)
        return cls(np.outer(ket, ket.conj()), spec)

    @classmethod
    def ground(cls, spec, spin='-'):
        """
        vacuum of the oscillator, with the spin in `spin` for the full model

        :param spec:
        :param spin: up, down, + or -
        :return:
        """
        vacuum = hilbert.fock_ket(0, spec)
        if spec.include_spin:
            return cls.from_ket(hilbert.product_ket(spin, vacuum), spec)
        return cls.from_ket(vacuum, spec)

    @property
    def dim(self):
        return self.spec.dim

    def __repr__(self):
        return 'DensityMatrix(dim=%d, fock_dim=%d, spin=%s)' % (self.dim, self.spec.fock_dim, self.spec.include_spin)

    def trace(self):
        return np.trace(self.data).real

    def hermitized(self):
        """
        :return: (rho + rho^dag)/2 renormalized to unit trace
        """
        herm = 0.5 * (self.data + self.data.conj().T)
        return DensityMatrix(herm / np.trace(herm).real, self.spec)

    def expect(self, op):
        """
        real part of Tr(op rho); use expect_complex for non-Hermitian operators
        """
        return float(self.expect_complex(op).real)

    def expect_complex(self, op):
        if op.shape != self.data.shape:
            raise DimensionError('operator of shape %s applied to a state of dimension %d' % (op.shape, self.dim))
        # Tr(op rho) without forming the product
        return complex(np.einsum('ij,ji->', op, self.data))

    def eigenvalues(self):
        return eigvalsh(0.5 * (self.data + self.data.conj().T))

    def purity(self):
        return float(np.einsum('ij,ji->', self.data, self.data).real)

    def trace_distance(self, other):
        """
        (1/2) Tr|rho - sigma|
        """
        diff = self.data - other.data
        return 0.5 * float(np.abs(eigvalsh(0.5 * (diff + diff.conj().T))).sum())

    def sqrtm(self):
        """
        square root through the Hermitian eigendecomposition, negative noise clamped to zero
        """
        w, v = eigh(0.5 * (self.data + self.data.conj().T))
        w = np.clip(w, 0.0, None)
        return (v * np.sqrt(w)) @ v.conj().T

    def fidelity(self, other):
        """
        Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2; not clipped at 1

        :param other: DensityMatrix
        :return:
        """
        root = self.sqrtm()
        inner = root @ other.data @ root
        w = eigvalsh(0.5 * (inner + inner.conj().T))
        return float(np.sqrt(np.clip(w, 0.0, None)).sum() ** 2)

    def reduced_boson(self):
        """
        partial trace over the spin; returns self for bosonic-only states
        """
        if not self.spec.include_spin:
            return self
        n = self.spec.fock_dim
        reduced = np.einsum('snsm->nm', self.data.reshape(2, n, 2, n))
        return DensityMatrix(reduced, self.spec.bosonic())

    def fock_populations(self):
        """
        diagonal in the Fock basis, summed over the spin
        """
        diag = np.diag(self.data).real
        if self.spec.include_spin:
            return diag.reshape(2, self.spec.fock_dim).sum(axis=0)
        return diag

    def validate(self, hermitian_tol=1e-10, trace_tol=1e-8, positivity_tol=1e-8):
        """
        raises NumericalError when the state is not a density matrix within the tolerances

        :return: self
        """
        norm = max(np.linalg.norm(self.data), 1.0)
        if np.linalg.norm(self.data - self.data.conj().T) / norm > hermitian_tol:
            raise NumericalError('state is not Hermitian')
        if abs(self.trace() - 1.0) > trace_tol:
            raise NumericalError('state trace %.12g differs from 1' % self.trace())
        lowest = self.eigenvalues()[0]
        if lowest < -positivity_tol:
            raise NumericalError('state has negative eigenvalue %.3e' % lowest)
        return self


def fock_tail(state, spec, levels=3):
    """
    population of the top `levels` Fock levels

    :param state: DensityMatrix or a ket on `spec`
    :param spec:
    :param levels:
    :return:
    """
    if isinstance(state, DensityMatrix):
        populations = state.fock_populations()
    else:
        populations = np.abs(np.asarray(state)) ** 2
        if spec.include_spin:
            populations = populations.reshape(2, spec.fock_dim).sum(axis=0)
    return float(populations[-levels:].sum())


def default_jump(spec):
    a, _, _ = hilbert.fock_ops(spec)
    return hilbert.embed(a, spec)


@dataclass(frozen=True)
class EvolveConfig:
    """
    integration controls; times in seconds
    """
    t_final: float
    record_every: float
    rel_tol: float = 1e-8
    abs_tol: float = 1e-10
    max_step: float = np.inf
    tail_threshold: float = 1e-6
    tail_levels: int = 3
    method: str = 'DOP853'
    hermitize_every: float = np.inf

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise InvalidSpecError('integrator tolerances must be positive')
        if not self.hermitize_every > 0:
            raise InvalidSpecError('hermitize_every must be positive, got %r' % (self.hermitize_every,))
        if not self.t_final > 0:
            raise InvalidSpecError('t_final must be positive, got %r' % (self.t_final,))
        if not 0 < self.record_every <= self.t_final:
            raise InvalidSpecError('record_every must lie in (0, t_final], got %r' % (self.record_every,))

    @classmethod
    def from_config(cls, t_final, record_every=None, **overrides):
        """
        fills the integrator controls from the application config

        :param t_final: seconds
        :param record_every: seconds, defaults to t_final
        :param overrides: any other field
        :return:
        """
        config = current_app.config
        values = {
            'rel_tol': config.get('FORCESRV_EVOLVE_REL_TOL', 1e-8),
            'abs_tol': config.get('FORCESRV_EVOLVE_ABS_TOL', 1e-10),
            'tail_threshold': config.get('FORCESRV_TAIL_THRESHOLD', 1e-6),
            'tail_levels': config.get('FORCESRV_TAIL_LEVELS', 3),
            'method': config.get('FORCESRV_EVOLVE_METHOD', 'DOP853'),
        }
        values.update(overrides)
        return cls(t_final=t_final, record_every=record_every or t_final, **values)

    def with_(self, **changes):
        return replace(self, **changes)

    def record_times(self):
        """
        :return: 0, record_every, 2 record_every, ..., t_final
        """
        count = int(np.floor(self.t_final / self.record_every * (1 + 1e-12)))
        times = self.record_every * np.arange(count + 1)
        if self.t_final - times[-1] > 1e-9 * self.t_final:
            times = np.append(times, self.t_final)
        else:
            times[-1] = self.t_final
        return times


@dataclass(eq=False)
class HamiltonianSchedule:
    """
    H(t) = static + sum_k coefficient_k(t) term_k, joules

    max_step_at(t) optionally bounds the integrator step on the segment that starts at t.
    """
    static: np.ndarray
    terms: tuple = ()
    max_step_at: object = None

    @classmethod
    def fixed(cls, H):
        return cls(static=np.asarray(H, dtype=complex))

    def at(self, t):
        H = np.array(self.static, dtype=complex)
        for term, coefficient in self.terms:
            H = H + coefficient(t) * term
        return H

    @property
    def dim(self):
        return self.static.shape[0]


def as_schedule(H_of_t):
    if isinstance(H_of_t, HamiltonianSchedule):
        return H_of_t
    return HamiltonianSchedule.fixed(H_of_t)


@dataclass
class SweepResult:
    """
    time series recorded at the ticks of an EvolveConfig
    """
    times: np.ndarray
    observables: dict
    final_state: DensityMatrix
    truncation_safe: bool = True
    max_tail: float = 0.0
    min_eigenvalue: float = 0.0
    max_norm_drift: float = 0.0
    final_ket: np.ndarray = None
    metadata: dict = field(default_factory=dict)

    def series(self, label):
        return self.observables[label]

    def final(self, label):
        return float(self.observables[label][-1])

    def columns(self):
        return ['t_s'] + list(self.observables)

    def rows(self):
        for index, t in enumerate(self.times):
            yield [t] + [self.observables[label][index] for label in self.observables]


@dataclass
class SteadyStateResult:
    """
    state reached by integration and whether ||drho/dt||_F dropped below epsilon gamma
    """
    state: DensityMatrix
    converged: bool
    residual: float
    time: float


def _check_dims(rho, H, jump):
    if H.shape != rho.shape or jump.shape != rho.shape:
        raise DimensionError('dimension mismatch: rho %s, H %s, jump %s' % (rho.shape, H.shape, jump.shape))


def lindblad_rhs(rho, H, gamma, jump):
    """
    -(i/hbar)[H, rho] + gamma (2 J rho J^dag - {J^dag J, rho})

    :param rho: DensityMatrix or square array
    :param H: Hamiltonian, joules
    :param gamma: decay rate, rad/s
    :param jump: jump operator J
    :return: drho/dt as an array
    """
    rho = rho.data if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)
    _check_dims(rho, H, jump)
    jump_dag = jump.conj().T
    K = jump_dag @ jump
    return -1j / HBAR * (H @ rho - rho @ H) + gamma * (2 * jump @ rho @ jump_dag - K @ rho - rho @ K)


class MasterEquation(object):
    """
    the right-hand side handed to solve_ivp, written as drho/dt = G rho + rho G^dag + 2 gamma J rho J^dag
    with G = -iH/hbar - gamma J^dag J
    """

    def __init__(self, schedule, gamma, jump):
        self.dim = schedule.dim
        if jump.shape != (self.dim, self.dim):
            raise DimensionError('jump operator of shape %s for Hamiltonian of dimension %d' % (jump.shape, self.dim))
        self.gamma = gamma
        self.jump = np.asarray(jump)
        self.jump_dag = self.jump.conj().T
        self.static = -1j * np.asarray(schedule.static) / HBAR - gamma * (self.jump_dag @ self.jump)
        self.modulated = [(-1j * np.asarray(term) / HBAR, coefficient) for term, coefficient in schedule.terms]

    def generator(self, t):
        G = self.static
        for term, coefficient in self.modulated:
            G = G + coefficient(t) * term
        return G

    def derivative(self, t, rho):
        G = self.generator(t)
        drho = G @ rho + rho @ G.conj().T
        if self.gamma:
            drho = drho + 2 * self.gamma * (self.jump @ rho @ self.jump_dag)
        return drho

    def __call__(self, t, y):
        return self.derivative(t, y.reshape(self.dim, self.dim)).reshape(-1)


class SchrodingerEquation(object):

    def __init__(self, schedule):
        self.dim = schedule.dim
        self.static = -1j * np.asarray(schedule.static) / HBAR
        self.modulated = [(-1j * np.asarray(term) / HBAR, coefficient) for term, coefficient in schedule.terms]

    def __call__(self, t, psi):
        G = self.static
        for term, coefficient in self.modulated:
            G = G + coefficient(t) * term
        return G @ psi


def _segment(rhs, y, t_start, t_end, cfg, schedule):
    max_step = cfg.max_step
    if schedule.max_step_at is not None:
        max_step = min(max_step, schedule.max_step_at(t_start))
    solution = solve_ivp(rhs, (t_start, t_end), y, method=cfg.method, t_eval=[t_end],
                         rtol=cfg.rel_tol, atol=cfg.abs_tol, max_step=max_step)
    if solution.status != 0 or solution.y.shape[1] == 0:
        raise IntegrationError('integration failed between t=%.6g s and t=%.6g s: %s' % (t_start, t_end, solution.message))
    return solution.y[:, -1]


def _pieces(t_start, t_end, longest):
    """
    splits [t_start, t_end] into equal pieces no longer than longest
    """
    count = 1
    if np.isfinite(longest):
        count = max(1, int(np.ceil((t_end - t_start) / longest * (1 - 1e-12))))
    edges = np.linspace(t_start, t_end, count + 1)
    return zip(edges[:-1], edges[1:])


def _hermitize_cap(gamma, cfg):
    cap = cfg.hermitize_every
    if gamma > 0:
        cap = min(cap, 1.0 / (gamma * current_app.config.get('FORCESRV_HERMITIZE_PER_DECAY_TIME', 20)))
    return cap


def _advance(equation, state, t_start, t_end, cfg, schedule, longest):
    spec = state.spec
    for piece_start, piece_end in _pieces(t_start, t_end, longest):
        y = _segment(equation, state.data.reshape(-1), piece_start, piece_end, cfg, schedule)
        state = DensityMatrix(y.reshape(spec.dim, spec.dim), spec).hermitized()
    return state


def _observable_map(observables):
    if observables is None:
        return {}
    if isinstance(observables, dict):
        return dict(observables)
    return dict(('o%d' % index, op) for index, op in enumerate(observables))


def evolve(rho0, H_of_t, gamma, cfg, observables=None, jump=None):
    """
    integrates the master equation from rho0 to cfg.t_final

    :param rho0: DensityMatrix
    :param H_of_t: fixed Hamiltonian or HamiltonianSchedule
    :param gamma: decay rate, rad/s
    :param cfg: EvolveConfig
    :param observables: label -> operator map (or a list, labelled o0, o1, ...); recorded as Tr(A rho(t))
    :param jump: jump operator, defaults to I_spin (x) a or a
    :return: SweepResult
    """
    start_time = time.time()
    spec = rho0.spec
    schedule = as_schedule(H_of_t)
    if jump is None:
        jump = default_jump(spec)
    _check_dims(rho0.data, schedule.static, jump)
    equation = MasterEquation(schedule, gamma, jump)
    observables = _observable_map(observables)

    times = cfg.record_times()
    records = dict((label, np.zeros(len(times))) for label in observables)
    longest = _hermitize_cap(gamma, cfg)
    state = rho0.hermitized()
    max_tail, min_eigenvalue = 0.0, np.inf
    for index, t in enumerate(times):
        if index > 0:
            state = _advance(equation, state, times[index - 1], t, cfg, schedule, longest)
        for label, op in observables.items():
            records[label][index] = state.expect(op)
        max_tail = max(max_tail, fock_tail(state, spec, cfg.tail_levels))
        min_eigenvalue = min(min_eigenvalue, state.eigenvalues()[0])

    truncation_safe = max_tail <= cfg.tail_threshold
    if not truncation_safe:
        current_app.logger.warning('Fock tail population %.3e exceeds %.1e at fock_dim=%d, result is truncation-unsafe'
                                   % (max_tail, cfg.tail_threshold, spec.fock_dim))
    current_app.logger.debug('Master equation integrated to t=%.6g s over %d records in %s ms'
                             % (cfg.t_final, len(times), (time.time() - start_time) * 1000))
    return SweepResult(times=times, observables=records, final_state=state, truncation_safe=truncation_safe,
                       max_tail=max_tail, min_eigenvalue=float(min_eigenvalue))


def schrodinger_evolve(psi0, H_of_t, spec, cfg, observables=None):
    """
    state vector evolution for gamma = 0

    :param psi0: ket
    :param H_of_t: fixed Hamiltonian or HamiltonianSchedule
    :param spec: HilbertSpec of psi0
    :param cfg: EvolveConfig
    :param observables: label -> operator map; recorded as <psi|A|psi>
    :return: SweepResult, final_state is the projector on the final ket
    """
    start_time = time.time()
    schedule = as_schedule(H_of_t)
    psi = np.asarray(psi0, dtype=complex)
    if psi.shape != (spec.dim,) or schedule.dim != spec.dim:
        raise DimensionError('ket of shape %s for Hamiltonian of dimension %d' % (psi.shape, schedule.dim))
    psi = psi / np.linalg.norm(psi)
    equation = SchrodingerEquation(schedule)
    observables = _observable_map(observables)

    times = cfg.record_times()
    records = dict((label, np.zeros(len(times))) for label in observables)
    max_tail, max_drift = 0.0, 0.0
    for index, t in enumerate(times):
        if index > 0:
            psi = _segment(equation, psi, times[index - 1], t, cfg, schedule)
            norm = np.linalg.norm(psi)
            max_drift = max(max_drift, abs(norm - 1.0))
            psi = psi / norm
        for label, op in observables.items():
            records[label][index] = np.vdot(psi, op @ psi).real
        max_tail = max(max_tail, fock_tail(psi, spec, cfg.tail_levels))

    truncation_safe = max_tail <= cfg.tail_threshold
    if not truncation_safe:
        current_app.logger.warning('Fock tail population %.3e exceeds %.1e at fock_dim=%d, result is truncation-unsafe'
                                   % (max_tail, cfg.tail_threshold, spec.fock_dim))
    current_app.logger.debug('Schrodinger equation integrated to t=%.6g s over %d records in %s ms'
                             % (cfg.t_final, len(times), (time.time() - start_time) * 1000))
    return SweepResult(times=times, observables=records, final_state=DensityMatrix.from_ket(psi, spec),
                       truncation_safe=truncation_safe, max_tail=max_tail, max_norm_drift=max_drift, final_ket=psi)


def steady_state_evolve(rho0, H, gamma, cfg=None, epsilon=None, max_decay_times=None, jump=None):
    """
    integrates until ||drho/dt||_F < epsilon gamma or until max_decay_times/gamma

    :param rho0: DensityMatrix
    :param H: Hamiltonian, joules
    :param gamma: decay rate, rad/s, must be positive
    :param cfg: EvolveConfig supplying tolerances; t_final and record_every are ignored
    :param epsilon: residual threshold in units of gamma
    :param max_decay_times:
    :param jump:
    :return: SteadyStateResult
    """
    if not gamma > 0:
        raise InvalidSpecError('steady state detection needs gamma > 0')
    start_time = time.time()
    config = current_app.config
    epsilon = epsilon or config.get('FORCESRV_STEADY_EPSILON', 1e-6)
    max_decay_times = max_decay_times or config.get('FORCESRV_STEADY_MAX_DECAY_TIMES', 200)
    chunk = 1.0 / (gamma * config.get('FORCESRV_RECORDS_PER_DECAY_TIME', 4))
    t_max = max_decay_times / gamma
    if cfg is None:
        cfg = EvolveConfig.from_config(t_max)

    spec = rho0.spec
    schedule = as_schedule(H)
    if jump is None:
        jump = default_jump(spec)
    _check_dims(rho0.data, schedule.static, jump)
    equation = MasterEquation(schedule, gamma, jump)

    longest = _hermitize_cap(gamma, cfg)
    state = rho0.hermitized()
    t = 0.0
    residual = np.linalg.norm(equation.derivative(0.0, state.data)) / gamma
    while residual >= epsilon and t < t_max:
        state = _advance(equation, state, t, t + chunk, cfg, schedule, longest)
        t += chunk
        residual = np.linalg.norm(equation.derivative(t, state.data)) / gamma

    converged = residual < epsilon
    if converged:
        current_app.logger.debug('Steady state reached at t=%.3g/gamma, residual %.2e, in %s ms'
                                 % (t * gamma, residual, (time.time() - start_time) * 1000))
    else:
        current_app.logger.warning('Steady state not reached by t=%.3g/gamma, residual %.2e (threshold %.1e)'
                                   % (t * gamma, residual, epsilon))
    return SteadyStateResult(state=state, converged=converged, residual=float(residual), time=t)


def settle(rho0, H, gamma, decay_times=None, cfg=None, observables=None, jump=None):
    """
    evolves for a fixed number of decay times; the quasi-steady state of the full Rabi
    model, where branch mixing is far slower than the relaxation of the oscillator

    :param rho0:
    :param H:
    :param gamma: rad/s, positive
    :param decay_times: defaults to FORCESRV_SETTLE_DECAY_TIMES
    :param cfg: EvolveConfig for tolerances, t_final and record_every are replaced
    :param observables:
    :param jump:
    :return: SweepResult
    """
    if not gamma > 0:
        raise InvalidSpecError('settling needs gamma > 0')
    config = current_app.config
    decay_times = decay_times or config.get('FORCESRV_SETTLE_DECAY_TIMES', 10)
    t_final = decay_times / gamma
    record_every = 1.0 / (gamma * config.get('FORCESRV_RECORDS_PER_DECAY_TIME', 4))
    if cfg is None:
        cfg = EvolveConfig.from_config(t_final, record_every)
    else:
        cfg = cfg.with_(t_final=t_final, record_every=min(record_every, t_final))
    return evolve(rho0, H, gamma, cfg, observables, jump)


def liouvillian_superoperator(H, gamma, jump):
    """
    matrix of the master equation acting on row-major vec(rho): vec(A rho B) = (A kron B^T) vec(rho)

    :return: dim^2 x dim^2 array
    """
    dim = H.shape[0]
    identity = np.eye(dim)
    K = jump.conj().T @ jump
    return -1j / HBAR * (np.kron(H, identity) - np.kron(identity, H.T)) \
        + gamma * (2 * np.kron(jump, jump.conj()) - np.kron(K, identity) - np.kron(identity, K.T))


def steady_state_direct(H, gamma, spec, jump=None, max_dim=None, null_tol=None, residual_tol=None):
    """
    null vector of the vectorized Liouvillian by dense SVD

    :param H: Hamiltonian, joules
    :param gamma: rad/s
    :param spec: HilbertSpec
    :param jump: defaults to I_spin (x) a or a
    :param max_dim: largest total dimension accepted
    :param null_tol: singular values below null_tol times the largest count as null
    :param residual_tol: bound on ||L v|| / ||v|| with L scaled to unit spectral norm
    :return: DensityMatrix
    """
    start_time = time.time()
    config = current_app.config
    max_dim = max_dim or config.get('FORCESRV_STEADY_MAX_DIM', 64)
    null_tol = null_tol or config.get('FORCESRV_NULL_SPACE_TOL', 1e-9)
    residual_tol = residual_tol or config.get('FORCESRV_NULL_SPACE_RESIDUAL', 1e-10)
    if spec.dim > max_dim:
        raise DimensionError('dimension %d exceeds %d, the superoperator would have %d entries'
                             % (spec.dim, max_dim, spec.dim ** 4))
    if H.shape != (spec.dim, spec.dim):
        raise DimensionError('Hamiltonian of shape %s for dimension %d' % (H.shape, spec.dim))
    if jump is None:
        jump = default_jump(spec)

    L = liouvillian_superoperator(np.asarray(H), gamma, np.asarray(jump))
    _, singular, vh = svd(L, overwrite_a=False, check_finite=False)
    scale = singular[0]
    if scale == 0:
        raise NullSpaceError('the Liouvillian vanishes', spec.dim ** 2)
    multiplicity = int(np.sum(singular / scale < null_tol))
    if multiplicity != 1:
        raise NullSpaceError('steady state is not unique' if multiplicity else 'no steady state within tolerance',
                             multiplicity)
    vector = vh[-1].conj()
    unscaled = np.linalg.norm(L @ vector) / np.linalg.norm(vector)
    residual = unscaled / scale
    if residual > residual_tol:
        raise NumericalError('null vector residual %.2e (unscaled ||Lv||/||v|| = %.2e) exceeds %.1e'
                             % (residual, unscaled, residual_tol))

    rho = vector.reshape(spec.dim, spec.dim)
    rho = rho / np.trace(rho)
    current_app.logger.debug('Liouvillian null space of dimension %d solved, residual %.2e (unscaled %.2e), in %s ms'
                             % (spec.dim ** 2, residual, unscaled, (time.time() - start_time) * 1000))
    return DensityMatrix(rho, spec).hermitized()
