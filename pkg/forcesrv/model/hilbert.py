"""
Operators and states on the truncated spin (x) boson Hilbert space.

Ordering is spin first: full-space operators are kron(spin_op, boson_op). The spin
basis is (|up>, |down>) with sz|up> = +|up>. All constructors are pure and return
read-only arrays.
"""

import numpy as np

from scipy.linalg import expm
from scipy.special import gammaln
from scipy.stats import poisson

from forcesrv.model.common import HBAR, HilbertSpec, InvalidSpecError, TruncationError, DimensionError

# population allowed beyond fock_dim - TAIL_MARGIN for states built by displacement/squeeze
TAIL_MARGIN = 5
TAIL_LIMIT = 1e-8


def _frozen(matrix):
    matrix.setflags(write=False)
    return matrix


def _as_spec(spec):
    if isinstance(spec, HilbertSpec):
        return spec
    return HilbertSpec(int(spec), include_spin=False)


def fock_ops(spec):
    """
    ladder operators on the truncated Fock space (bosonic factor only)

    :param spec: HilbertSpec or Fock dimension
    :return: a, a_dag, n
    """
    spec = _as_spec(spec)
    a = np.diag(np.sqrt(np.arange(1, spec.fock_dim, dtype=float)), k=1).astype(complex)
    a_dag = a.conj().T.copy()
    n = a_dag @ a
    return _frozen(a), _frozen(a_dag), _frozen(n)


def pauli():
    """
    :return: sx, sy, sz in the (up, down) basis
    """
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]], dtype=complex)
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return _frozen(sx), _frozen(sy), _frozen(sz)


def tensor(A, B):
    return _frozen(np.kron(A, B))


def embed(op, spec):
    """
    lifts a bosonic operator to the full space when the spec carries the spin

    :param op: fock_dim x fock_dim matrix
    :param spec:
    :return:
    """
    spec = _as_spec(spec)
    if op.shape != (spec.fock_dim, spec.fock_dim):
        raise DimensionError('operator of shape %s does not act on a Fock space of dimension %d' % (op.shape, spec.fock_dim))
    if spec.include_spin:
        return tensor(np.eye(2), op)
    return _frozen(np.array(op, dtype=complex))


def spin_op(op, spec):
    """
    lifts a 2x2 spin operator to the full space
    """
    spec = _as_spec(spec)
    if not spec.include_spin:
        raise InvalidSpecError('spin operator requested on a bosonic-only space')
    return tensor(op, np.eye(spec.fock_dim))


def quadratures(spec):
    """
    x = a_dag + a and p = i(a_dag - a), bosonic factor only

    :param spec:
    :return: x, p
    """
    a, a_dag, _ = fock_ops(spec)
    return _frozen(a_dag + a), _frozen(1j * (a_dag - a))


def fock_ket(n, spec):
    spec = _as_spec(spec)
    if not 0 <= n < spec.fock_dim:
        raise DimensionError('Fock level %d outside the truncated space of dimension %d' % (n, spec.fock_dim))
    ket = np.zeros(spec.fock_dim, dtype=complex)
    ket[n] = 1.0
    return _frozen(ket)


SPIN_KETS = {
    'up': np.array([1, 0], dtype=complex),
    'down': np.array([0, 1], dtype=complex),
    '+': np.array([1, 1], dtype=complex) / np.sqrt(2),
    '-': np.array([1, -1], dtype=complex) / np.sqrt(2),
}


def spin_ket(label):
    """
    :param label: one of up, down, +, -
    :return:
    """
    try:
        return _frozen(SPIN_KETS[label].copy())
    except KeyError:
        raise InvalidSpecError('unknown spin state `%s`, expected one of %s' % (label, ', '.join(SPIN_KETS)))


def product_ket(spin_label, fock_state):
    """
    spin (x) boson ket; fock_state is a bosonic ket
    """
    return tensor(spin_ket(spin_label), fock_state)


def hermiticity_residual(H):
    """
    :return: ||H - H^dag||_F / ||H||_F, 0 for the zero matrix
    """
    norm = np.linalg.norm(H)
    if norm == 0:
        return 0.0
    return np.linalg.norm(H - H.conj().T) / norm


def _require_spin(spec):
    spec = _as_spec(spec)
    if not spec.include_spin:
        raise InvalidSpecError('the Rabi Hamiltonian needs the spin; got a bosonic-only space')
    return spec


def force_term(p, spec):
    """
    (zF/2)(a_dag + a), lifted to the full space when the spec carries the spin
    """
    x, _ = quadratures(spec)
    return embed(0.5 * p.z * p.F * x, spec)


def rabi_hamiltonian(p, spec):
    """
    H = hbar omega a_dag a + (hbar Omega/2) sx + hbar g (a_dag + a) sz + (zF/2)(a_dag + a), joules

    :param p: SystemParams
    :param spec: HilbertSpec with include_spin
    :return:
    """
    spec = _require_spin(spec)
    _, _, n = fock_ops(spec)
    x, _ = quadratures(spec)
    sx, _, sz = pauli()
    H = HBAR * p.omega * embed(n, spec) \
        + 0.5 * HBAR * p.Omega * spin_op(sx, spec) \
        + HBAR * p.g * np.kron(sz, x) \
        + force_term(p, spec)
    return _frozen(0.5 * (H + H.conj().T))


def squeezing_term(xi, phi, spec):
    """
    hbar xi (a_dag^2 e^{i phi} + a^2 e^{-i phi}), lifted to the full space when the spec carries the spin
    """
    a, a_dag, _ = fock_ops(spec)
    term = HBAR * xi * (np.exp(1j * phi) * (a_dag @ a_dag) + np.exp(-1j * phi) * (a @ a))
    return embed(term, spec)


def squeezed_rabi_hamiltonian(p, xi, phi, spec):
    """
    the Rabi Hamiltonian plus the parametric squeezing term

    :param p: SystemParams
    :param xi: squeezing rate, rad/s
    :param phi: phase, phi = pi gives -hbar xi (a_dag^2 + a^2)
    :param spec:
    :return:
    """
    spec = _require_spin(spec)
    H = rabi_hamiltonian(p, spec) + squeezing_term(xi, phi, spec)
    return _frozen(0.5 * (H + H.conj().T))


def coherent_tail(alpha, fock_dim, margin=TAIL_MARGIN):
    """
    population of D(alpha)|0> on levels >= fock_dim - margin, from the Poisson law
    """
    cutoff = fock_dim - margin
    if cutoff <= 0:
        return 1.0
    return float(poisson.sf(cutoff - 1, abs(alpha) ** 2))


def squeezed_vacuum_tail(r, fock_dim, margin=TAIL_MARGIN):
    """
    population of S(r)|0> on levels >= fock_dim - margin; only even levels are populated
    """
    cutoff = fock_dim - margin
    if cutoff <= 0:
        return 1.0
    r = abs(r)
    if r == 0:
        return 0.0
    m = np.arange(0, 4 * fock_dim + 200)
    log_p = 2 * m * np.log(np.tanh(r)) + gammaln(2 * m + 1) - 2 * m * np.log(2) - 2 * gammaln(m + 1) - np.log(np.cosh(r))
    populations = np.exp(log_p)
    return float(min(1.0, max(0.0, populations[2 * m >= cutoff].sum())))


def _suggest_fock_dim(tail_of, start):
    fock_dim = start
    while tail_of(fock_dim) >= TAIL_LIMIT:
        fock_dim = int(np.ceil(fock_dim * 1.25)) + 1
    return fock_dim


def displacement(alpha, spec, check=True):
    """
    D(alpha) = exp(alpha a_dag - alpha* a) on the Fock factor

    :param alpha: complex amplitude
    :param spec:
    :param check: raise TruncationError when D(alpha)|0> leaks past the truncation margin
    :return:
    """
    spec = _as_spec(spec)
    if check:
        tail = coherent_tail(alpha, spec.fock_dim)
        if tail >= TAIL_LIMIT:
            raise TruncationError('displacement by |alpha|=%.4g does not fit the Fock space' % abs(alpha), tail,
                                  _suggest_fock_dim(lambda d: coherent_tail(alpha, d), spec.fock_dim))
    a, a_dag, _ = fock_ops(spec)
    return _frozen(expm(alpha * a_dag - np.conj(alpha) * a))


def squeeze(zeta, spec, check=True):
    """
    S(zeta) = exp((zeta* a^2 - zeta a_dag^2)/2) on the Fock factor; real r > 0 squeezes x

    :param zeta: complex squeezing parameter r e^{i theta}
    :param spec:
    :param check: raise TruncationError when S(zeta)|0> leaks past the truncation margin
    :return:
    """
    spec = _as_spec(spec)
    if check:
        tail = squeezed_vacuum_tail(abs(zeta), spec.fock_dim)
        if tail >= TAIL_LIMIT:
            raise TruncationError('squeezing by |zeta|=%.4g does not fit the Fock space' % abs(zeta), tail,
                                  _suggest_fock_dim(lambda d: squeezed_vacuum_tail(abs(zeta), d), spec.fock_dim))
    a, a_dag, _ = fock_ops(spec)
    return _frozen(expm(0.5 * (np.conj(zeta) * (a @ a) - zeta * (a_dag @ a_dag))))


def rotation(delta, spec):
    """
    R(delta) = exp(i delta a_dag a); R^dag a R = a e^{i delta}
    """
    spec = _as_spec(spec)
    return _frozen(np.diag(np.exp(1j * delta * np.arange(spec.fock_dim))).astype(complex))


def parity_operator(spec):
    """
    sx (x) exp(i pi a_dag a), the Z2 symmetry of the force-free Rabi model
    """
    spec = _require_spin(spec)
    sx, _, _ = pauli()
    return tensor(sx, rotation(np.pi, spec).real.astype(complex))
