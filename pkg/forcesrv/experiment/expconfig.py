"""
Experiment files: `[section]` headers and `key = value` lines, every physical value with a
unit suffix, e.g.

    [model]
    type = rabi
    [params]
    omega = 0.30 kHz
    Omega = 320 kHz
    g = 4.0 kHz
    gamma = 0.08 kHz
    z = 14 nm
    F = 5 yN

Frequencies given in Hz/kHz/MHz are f/2pi and become rad/s here, once.
"""

import re

from dataclasses import dataclass, field

import numpy as np

from flask import current_app

from forcesrv.model.common import SystemParams, HilbertSpec, ConfigError, InvalidSpecError, parse_quantity, \
    FREQUENCY_UNITS, LENGTH_UNITS, FORCE_UNITS, TIME_UNITS, RATE_UNITS, ANGLE_UNITS, DIMENSIONLESS_UNITS

RE_SECTION = re.compile(r'^\[\s*(?P<name>[A-Za-z_]+)\s*\]$')
RE_ENTRY = re.compile(r'^(?P<key>[A-Za-z_][A-Za-z0-9_]*)\s*=\s*(?P<value>.*)$')

MODELS = ('rabi', 'effective', 'squeezed')

# section -> key -> unit table; None marks plain text, int marks integers
FIELDS = {
    'model': {'type': None},
    'params': {'omega': FREQUENCY_UNITS, 'Omega': FREQUENCY_UNITS, 'g': FREQUENCY_UNITS,
               'gamma': FREQUENCY_UNITS, 'z': LENGTH_UNITS, 'F': FORCE_UNITS},
    'protocol': {'xi': FREQUENCY_UNITS, 'phi': ANGLE_UNITS, 'Omega0': FREQUENCY_UNITS, 'kappa': RATE_UNITS,
                 't_final': TIME_UNITS},
    'hilbert': {'fock_dim': int},
    'evolve': {'t_final': TIME_UNITS, 'record_every': TIME_UNITS, 'max_step': TIME_UNITS,
               'rel_tol': DIMENSIONLESS_UNITS, 'abs_tol': DIMENSIONLESS_UNITS,
               'tail_threshold': DIMENSIONLESS_UNITS},
    'sweep': {'variable': None, 'start': 'variable', 'stop': 'variable', 'points': int, 'scale': None},
    'outputs': {'directory': None},
}

# SI suffix written to manifests for every unit table
SI_SUFFIX = [(FREQUENCY_UNITS, 'rad/s'), (LENGTH_UNITS, 'm'), (FORCE_UNITS, 'N'), (TIME_UNITS, 's'),
             (RATE_UNITS, '1/s'), (ANGLE_UNITS, 'rad'), (DIMENSIONLESS_UNITS, '')]

SWEEPABLE = dict([(key, ('params', units)) for key, units in FIELDS['params'].items()] +
                 [(key, ('protocol', units)) for key, units in FIELDS['protocol'].items() if key != 't_final'])


def si_suffix(units):
    for table, suffix in SI_SUFFIX:
        if table is units:
            return suffix
    return ''


@dataclass(frozen=True)
class SweepAxis:
    variable: str
    start: float
    stop: float
    points: int
    scale: str = 'linear'

    def __post_init__(self):
        if self.variable not in SWEEPABLE:
            raise ConfigError('cannot sweep `%s`, expected one of: %s' % (self.variable, ', '.join(SWEEPABLE)),
                              field='sweep.variable')
        if self.points < 2:
            raise ConfigError('a sweep needs at least 2 points', field='sweep.points')
        if self.scale not in ('linear', 'log'):
            raise ConfigError('scale must be linear or log', field='sweep.scale')
        if self.scale == 'log' and not (self.start > 0 and self.stop > 0):
            raise ConfigError('a log sweep needs positive end points', field='sweep.start')

    def values(self):
        if self.scale == 'log':
            return np.geomspace(self.start, self.stop, self.points)
        return np.linspace(self.start, self.stop, self.points)


@dataclass
class ExperimentConfig:
    """
    a parsed experiment file; `entries` keeps every raw value for overrides and the manifest
    """
    model: str
    params: SystemParams
    hilbert: HilbertSpec
    protocol: dict = field(default_factory=dict)
    evolve: dict = field(default_factory=dict)
    sweep: SweepAxis = None
    outputs: str = None
    entries: dict = field(default_factory=dict)

    def protocol_params(self, params=None):
        """
        :return: SqueezeProtocolParams for the squeezed model
        """
        from forcesrv.sensing.protocol import SqueezeProtocolParams
        missing = [key for key in ('xi', 'Omega0', 'kappa', 't_final') if key not in self.protocol]
        if missing:
            raise ConfigError('missing protocol values: %s' % ', '.join(missing), field='protocol.%s' % missing[0])
        values = dict(self.protocol)
        values.setdefault('phi', np.pi)
        return SqueezeProtocolParams(base=params or self.params, **values)

    def with_point(self, variable, value):
        """
        copy of the parameters with one swept value in place

        :return: SystemParams or SqueezeProtocolParams
        """
        section, _ = SWEEPABLE[variable]
        if section == 'params':
            params = self.params.with_(**{variable: value})
            return self.protocol_params(params) if self.model == 'squeezed' else params
        protocol = self.protocol_params()
        return protocol.with_(**{variable: value})

    def point(self):
        return self.protocol_params() if self.model == 'squeezed' else self.params

    def resolved(self):
        """
        every value in SI with its suffix, section by section, for the manifest

        :return: list of (section, [(key, text)])
        """
        sections = [('model', [('type', self.model)])]
        sections.append(('params', [(key, '%.17g %s' % (getattr(self.params, key), si_suffix(units)))
                                    for key, units in FIELDS['params'].items()]))
        if self.protocol:
            sections.append(('protocol', [(key, '%.17g %s' % (self.protocol[key], si_suffix(FIELDS['protocol'][key])))
                                          for key in FIELDS['protocol'] if key in self.protocol]))
        sections.append(('hilbert', [('fock_dim', '%d' % self.hilbert.fock_dim)]))
        if self.evolve:
            sections.append(('evolve', [(key, ('%.17g %s' % (self.evolve[key], si_suffix(FIELDS['evolve'][key]))).strip())
                                        for key in FIELDS['evolve'] if key in self.evolve]))
        if self.sweep:
            units = SWEEPABLE[self.sweep.variable][1]
            sections.append(('sweep', [('variable', self.sweep.variable),
                                       ('start', ('%.17g %s' % (self.sweep.start, si_suffix(units))).strip()),
                                       ('stop', ('%.17g %s' % (self.sweep.stop, si_suffix(units))).strip()),
                                       ('points', '%d' % self.sweep.points),
                                       ('scale', self.sweep.scale)]))
        if self.outputs:
            sections.append(('outputs', [('directory', self.outputs)]))
        return sections


def read_entries(text):
    """
    :param text: experiment file contents
    :return: dict (section, key) -> (value text, line number)
    """
    entries = {}
    section = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].split(';', 1)[0].strip()
        if not line:
            continue
        match = RE_SECTION.match(line)
        if match:
            section = match.group('name')
            if section not in FIELDS:
                raise ConfigError('unknown section `[%s]`, expected one of: %s' % (section, ', '.join(FIELDS)),
                                  line=number)
            continue
        match = RE_ENTRY.match(line)
        if not match:
            raise ConfigError('expected `key = value`, got `%s`' % line, line=number)
        if section is None:
            raise ConfigError('`%s` appears before any [section]' % match.group('key'), line=number)
        key = match.group('key')
        if key not in FIELDS[section]:
            raise ConfigError('unknown key, expected one of: %s' % ', '.join(FIELDS[section]),
                              line=number, field='%s.%s' % (section, key))
        entries[(section, key)] = (match.group('value').strip(), number)
    return entries


def apply_overrides(entries, overrides):
    """
    :param entries: as returned by read_entries
    :param overrides: list of `section.key=value` or `key=value` strings
    :return: entries with the overrides in place, line number None
    """
    entries = dict(entries)
    for override in overrides or []:
        if '=' not in override:
            raise ConfigError('override `%s` is not of the form key=value' % override)
        name, value = [part.strip() for part in override.split('=', 1)]
        if '.' in name:
            section, key = name.split('.', 1)
            if section not in FIELDS or key not in FIELDS[section]:
                raise ConfigError('unknown override target', field=name)
        else:
            sections = [section for section in FIELDS if name in FIELDS[section]]
            if len(sections) != 1:
                raise ConfigError('override target is %s, write section.key' % ('ambiguous' if sections else 'unknown'),
                                  field=name)
            section, key = sections[0], name
        entries[(section, key)] = (value, None)
    return entries


def _convert(entries, section, key, units):
    value, line = entries[(section, key)]
    name = '%s.%s' % (section, key)
    if units is None:
        return value
    if units is int:
        try:
            return int(value)
        except ValueError:
            raise ConfigError('expected an integer, got `%s`' % value, line=line, field=name)
    try:
        return parse_quantity(value, units, field=name)
    except ConfigError as e:
        raise ConfigError(e.reason, line=line, field=name)


def build_config(entries):
    """
    :param entries: (section, key) -> (value text, line number)
    :return: ExperimentConfig
    """
    def has(section, key):
        return (section, key) in entries

    def get(section, key, default=None):
        if not has(section, key):
            return default
        return _convert(entries, section, key, FIELDS[section][key])

    model = get('model', 'type', 'rabi')
    if model not in MODELS:
        raise ConfigError('unknown model `%s`, expected one of: %s' % (model, ', '.join(MODELS)),
                          line=entries[('model', 'type')][1], field='model.type')

    protocol = dict((key, get('protocol', key)) for key in FIELDS['protocol'] if has('protocol', key))
    required = ['omega', 'g'] + ([] if model == 'squeezed' else ['Omega'])
    for key in required:
        if not has('params', key):
            raise ConfigError('missing value', field='params.%s' % key)
    z_default = current_app.config.get('FORCESRV_DEFAULT_Z_NM', 14.0) * LENGTH_UNITS['nm']
    Omega = get('params', 'Omega', protocol.get('Omega0', 0.0))
    try:
        params = SystemParams(omega=get('params', 'omega'), Omega=Omega, g=get('params', 'g'),
                              gamma=get('params', 'gamma', 0.0), z=get('params', 'z', z_default),
                              F=get('params', 'F', 0.0))
    except InvalidSpecError as e:
        raise ConfigError(str(e), field='params')

    config = current_app.config
    default_dim = config.get('FORCESRV_FOCK_DIM_SWEEP', 60) if model == 'squeezed' \
        else config.get('FORCESRV_FOCK_DIM_STEADY', 40)
    try:
        hilbert = HilbertSpec(get('hilbert', 'fock_dim', default_dim), include_spin=(model != 'effective'))
    except InvalidSpecError as e:
        raise ConfigError(str(e), field='hilbert.fock_dim')

    evolve = dict((key, get('evolve', key)) for key in FIELDS['evolve'] if has('evolve', key))

    sweep = None
    if any(section == 'sweep' for section, _ in entries):
        variable = get('sweep', 'variable')
        if variable not in SWEEPABLE:
            raise ConfigError('cannot sweep `%s`' % variable, field='sweep.variable')
        units = SWEEPABLE[variable][1]
        for key in ('start', 'stop', 'points'):
            if not has('sweep', key):
                raise ConfigError('missing value', field='sweep.%s' % key)
        sweep = SweepAxis(variable=variable, start=_convert(entries, 'sweep', 'start', units),
                          stop=_convert(entries, 'sweep', 'stop', units), points=get('sweep', 'points'),
                          scale=get('sweep', 'scale', 'linear'))

    experiment = ExperimentConfig(model=model, params=params, hilbert=hilbert, protocol=protocol, evolve=evolve,
                                  sweep=sweep, outputs=get('outputs', 'directory'), entries=entries)
    if model == 'squeezed':
        try:
            experiment.protocol_params()
        except InvalidSpecError as e:
            raise ConfigError(str(e), field='protocol')
    return experiment


def parse_config(text, overrides=None):
    """
    :param text: experiment file contents
    :param overrides: `key=value` strings applied on top
    :return: ExperimentConfig
    """
    return build_config(apply_overrides(read_entries(text), overrides))


def load_config(path, overrides=None):
    try:
        with open(path) as f:
            text = f.read()
    except IOError as e:
        raise ConfigError('cannot read %s: %s' % (path, e.strerror))
    return parse_config(text, overrides)
