"""
Shared value types, unit conversions and the exception hierarchy.

All internal quantities are SI: angular frequencies in rad/s, energies in joules,
forces in newtons and lengths in meters. Frequencies quoted as f/2pi (kHz, Hz) are
converted exactly once, when a config value or a request parameter is parsed.
"""

import math
import re

from dataclasses import dataclass, replace

HBAR = 1.054571817e-34

TWO_PI = 2.0 * math.pi

# multiplier to SI for every unit suffix we accept
FREQUENCY_UNITS = {
    'Hz': TWO_PI,
    'kHz': TWO_PI * 1e3,
    'MHz': TWO_PI * 1e6,
    'rad/s': 1.0,
}
LENGTH_UNITS = {
    'm': 1.0,
    'um': 1e-6,
    'nm': 1e-9,
    'pm': 1e-12,
}
FORCE_UNITS = {
    'N': 1.0,
    'zN': 1e-21,
    'yN': 1e-24,
    'xN': 1e-27,
}
TIME_UNITS = {
    's': 1.0,
    'ms': 1e-3,
    'us': 1e-6,
}
RATE_UNITS = {
    '1/s': 1.0,
    'Hz': TWO_PI,
    'kHz': TWO_PI * 1e3,
}
ANGLE_UNITS = {
    'rad': 1.0,
    'deg': math.pi / 180.0,
    'pi': math.pi,
}
DIMENSIONLESS_UNITS = {
    '': 1.0,
}

QUANTITY_RE = re.compile(r'^\s*(?P<value>[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?)\s*(?P<unit>\S*)\s*$')


class Error(Exception):
    """
    the base class for all exceptions.
    """
    pass


class PhysicsError(Error):
    """
    is raised when the requested parameters leave the domain where the model has a
    meaningful answer (unstable steady state, collapsed spectrum, no signal).
    """
    pass


class NumericalError(Error):
    """
    is raised when a numerical procedure fails to deliver the accuracy it promises.
    """
    pass


class InvalidSpecError(Error):
    pass


class DimensionError(NumericalError):
    pass


class TruncationError(NumericalError):
    """
    is raised when a state built on the truncated Fock space leaks population into the
    top levels; carries a Fock dimension that is expected to be safe.
    """
    def __init__(self, reason, tail, suggested_fock_dim):
        NumericalError.__init__(self, reason)
        self.reason = reason
        self.tail = tail
        self.suggested_fock_dim = suggested_fock_dim

    def __str__(self):
        return '%s (tail population %.3e, try fock_dim >= %d)' % (self.reason, self.tail, self.suggested_fock_dim)


class InstabilityError(PhysicsError):
    """
    is raised when lambda >= lambda_c, where the steady state moments diverge.
    """
    def __init__(self, lam, lam_c):
        PhysicsError.__init__(self, 'no stable steady state: lambda=%.6g >= lambda_c=%.6g' % (lam, lam_c))
        self.lam = lam
        self.lam_c = lam_c


class SpectrumCollapseError(PhysicsError):
    """
    is raised when 2 xi >= omega, the energy gap of the squeezed oscillator closes.
    """
    def __init__(self, xi, omega):
        PhysicsError.__init__(self, 'spectrum collapse: 2*xi=%.6g rad/s >= omega=%.6g rad/s' % (2 * xi, omega))
        self.xi = xi
        self.omega = omega


class NoSensitivityError(PhysicsError):
    pass


class IntegrationError(NumericalError):
    pass


class NullSpaceError(NumericalError):
    """
    is raised when the Liouvillian null space is not one dimensional.
    """
    def __init__(self, reason, multiplicity):
        NumericalError.__init__(self, reason)
        self.reason = reason
        self.multiplicity = multiplicity

    def __str__(self):
        return '%s (null space multiplicity %d)' % (self.reason, self.multiplicity)


class FidelityError(NumericalError):
    pass


class BracketError(NumericalError):
    pass


class ConfigError(Error):
    """
    is raised for malformed experiment configs; knows where the problem is.
    """
    def __init__(self, reason, line=None, field=None):
        Error.__init__(self, reason)
        self.reason = reason
        self.line = line
        self.field = field

    def __str__(self):
        where = []
        if self.line is not None:
            where.append('line %d' % self.line)
        if self.field is not None:
            where.append('field `%s`' % self.field)
        if where:
            return '%s: %s' % (', '.join(where), self.reason)
        return self.reason


class NoSignal(object):
    """
    a sentinel for sensitivities that do not exist, e.g. the momentum quadrature
    carries no force signal without dissipation.
    """
    def __init__(self, observable, reason):
        self.observable = observable
        self.reason = reason

    def __str__(self):
        return 'NO SIGNAL (%s): %s' % (self.observable, self.reason)

    def __repr__(self):
        return 'NoSignal(%r)' % self.observable

    def __bool__(self):
        return False


def parse_quantity(text, units, field=None):
    """
    returns the SI value of a string like `0.30 kHz` or `5 yN`.

    :param text:
    :param units: one of the *_UNITS tables
    :param field: name reported in the error
    :return:
    """
    match = QUANTITY_RE.match(str(text))
    if not match:
        raise ConfigError('cannot read `%s` as a number with unit' % text, field=field)
    unit = match.group('unit')
    if unit not in units:
        expected = ', '.join(u for u in units if u) or 'no unit'
        raise ConfigError('unit `%s` not accepted, expected one of: %s' % (unit, expected), field=field)
    return float(match.group('value')) * units[unit]


@dataclass(frozen=True)
class HilbertSpec:
    """
    truncation of the spin (x) boson space; spin factor first.
    """
    fock_dim: int
    include_spin: bool = True

    def __post_init__(self):
        if int(self.fock_dim) != self.fock_dim or self.fock_dim < 2:
            raise InvalidSpecError('fock_dim must be an integer >= 2, got %r' % (self.fock_dim,))

    @property
    def dim(self):
        return 2 * self.fock_dim if self.include_spin else self.fock_dim

    def bosonic(self):
        return HilbertSpec(self.fock_dim, include_spin=False)


@dataclass(frozen=True)
class SystemParams:
    """
    physical parameters of the driven dissipative Rabi sensor, SI units.

    omega: oscillator angular frequency (rad/s)
    Omega: transverse field angular frequency (rad/s)
    g: spin-boson coupling (rad/s)
    gamma: bosonic decay rate (rad/s)
    z: zero-point spread (m)
    F: force (N)
    """
    omega: float
    Omega: float
    g: float
    gamma: float = 0.0
    z: float = 14e-9
    F: float = 0.0

    def __post_init__(self):
        for name in ('omega', 'Omega', 'g', 'gamma'):
            value = getattr(self, name)
            if not value >= 0:
                raise InvalidSpecError('%s must be >= 0, got %r' % (name, value))
        if not self.z > 0:
            raise InvalidSpecError('z must be > 0, got %r' % (self.z,))

    @classmethod
    def from_khz(cls, omega_khz, Omega_khz, g_khz, gamma_khz=0.0, z_nm=14.0, F_yN=0.0):
        """
        builds parameters from the laboratory units used throughout the figures:
        f/2pi in kHz, z in nm and F in yN.

        :return:
        """
        k = FREQUENCY_UNITS['kHz']
        return cls(omega=omega_khz * k, Omega=Omega_khz * k, g=g_khz * k, gamma=gamma_khz * k,
                   z=z_nm * LENGTH_UNITS['nm'], F=F_yN * FORCE_UNITS['yN'])

    def with_(self, **changes):
        return replace(self, **changes)

    def as_dict(self):
        return {'omega': self.omega, 'Omega': self.Omega, 'g': self.g, 'gamma': self.gamma, 'z': self.z, 'F': self.F}
