"""
Command-line front end.

    run.py steady --config fig1.cfg --set F=6yN
    run.py sensitivity --config fig4.cfg
    run.py reproduce fig5 --jobs 4
    run.py validate --slow

Exit codes: 0 ok, 1 usage or configuration error, 2 physics-domain error, 3 numerical
failure (including a failed validation).
"""

import argparse
import math
import sys
import time

from flask import current_app

from forcesrv.model.common import Error, ConfigError, PhysicsError, NumericalError, InvalidSpecError, NoSignal, \
    FREQUENCY_UNITS, FORCE_UNITS, LENGTH_UNITS, TIME_UNITS, RATE_UNITS, ANGLE_UNITS, TWO_PI
from forcesrv.model import hilbert
from forcesrv.model.dynamics import DensityMatrix, EvolveConfig, evolve, schrodinger_evolve, settle, \
    steady_state_direct, steady_state_evolve
from forcesrv.model.workers import run_jobs
from forcesrv.sensing import analytics, metrology, protocol
from forcesrv.experiment.expconfig import load_config, SWEEPABLE
from forcesrv.experiment.output import RunOutput
from forcesrv.experiment import reproduce, validate

EXIT_OK, EXIT_USAGE, EXIT_PHYSICS, EXIT_NUMERICAL = 0, 1, 2, 3

# column suffix and divisor for the swept variable
AXIS_COLUMNS = [(FREQUENCY_UNITS, 'Hz', TWO_PI), (FORCE_UNITS, 'N', 1.0), (LENGTH_UNITS, 'm', 1.0),
                (TIME_UNITS, 's', 1.0), (RATE_UNITS, 'per_s', 1.0), (ANGLE_UNITS, 'rad', 1.0)]

STEADY_HEADER = ['F_N', 'lambda', 'x_numeric', 'x_ss', 'var_x_numeric', 'var_x', 'p_numeric', 'p_ss',
                 'var_p_numeric', 'var_p', 'n_numeric', 'n_ss', 'var_n_numeric', 'var_n', 'purity_numeric', 'purity']
SWEEP_HEADER = ['lambda', 'x_ss', 'var_x', 'p_ss', 'var_p', 'n_ss', 'var_n', 'sigma12', 'purity']
SQUEEZED_SWEEP_HEADER = ['sigma_z_analytic', 'snr', 'Fmin_N', 'gap_J', 'adiabaticity_phase']
SENSITIVITY_HEADER = ['lambda', 'dFx_N', 'dFp_N', 'dFn_N', 'dFQ_N']
QFI_HEADER = ['lambda', 'qfi_closed_form', 'qfi_covariance', 'qfi_fidelity', 'dFQ_N']
SQUEEZE_HEADER = ['xi_Hz', 'sigma_z_analytic', 'sigma_z_numeric', 'var_sigma_z', 'Fmin_N', 'Fmin_numeric_N']


class ArgumentParser(argparse.ArgumentParser):
    """
    usage errors exit with 1; 2 is reserved for physics-domain errors
    """

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


def build_parser():
    parser = ArgumentParser(prog='run.py', description='steady-state weak force sensing with a dissipative Rabi sensor')
    subparsers = parser.add_subparsers(dest='subcommand', metavar='subcommand')
    subparsers.required = True

    def common(sub, needs_config=True):
        sub.add_argument('--config', required=needs_config, help='experiment file with unit-suffixed values')
        sub.add_argument('--set', dest='overrides', action='append', default=[], metavar='KEY=VALUE',
                         help='override one experiment value, e.g. --set F=6yN (repeatable)')
        sub.add_argument('--jobs', type=int, default=None, help='worker pool size for sweep points')
        sub.add_argument('--out', default=None, help='output directory')
        return sub

    common(subparsers.add_parser('steady', help='numerical steady state against the closed forms'))
    common(subparsers.add_parser('evolve', help='time evolution of <x>, <p>, <n> (and the spin)'))
    common(subparsers.add_parser('sweep', help='closed-form moments along the [sweep] axis'))
    sensitivity = common(subparsers.add_parser('sensitivity', help='minimal detectable forces'))
    sensitivity.add_argument('--nu', type=float, default=1.0, help='number of repetitions')
    qfi = common(subparsers.add_parser('qfi', help='quantum Fisher information'))
    qfi.add_argument('--fidelity', action='store_true', help='also compute the fidelity based estimate')
    squeeze = common(subparsers.add_parser('squeeze', help='squeezing enhanced adiabatic protocol'))
    squeeze.add_argument('--analytic', action='store_true', help='skip the numerical sweep')
    squeeze.add_argument('--min-force', action='store_true', help='bisect the simulated minimal force')
    figure = common(subparsers.add_parser('reproduce', help='canned reproduction of a figure or table'), False)
    figure.add_argument('figure', choices=sorted(reproduce.FIGURES), help='figure id')
    figure.add_argument('--fock-dim', type=int, default=None, help='Fock truncation for the numerical runs')
    figure.add_argument('--dissipative', action='store_true',
                        help='tab-sensitivities: include the dissipative protocol point (slow)')
    checks = common(subparsers.add_parser('validate', help='oracle-equivalence suite'), False)
    checks.add_argument('--slow', action='store_true', help='include the full-model reproductions')
    return parser


def format_force(value, digits=3):
    """
    `4.43 yN`: the largest unit giving a value of at least one
    """
    if isinstance(value, NoSignal):
        return 'no signal (%s)' % value.reason
    for unit, scale in sorted(FORCE_UNITS.items(), key=lambda item: -item[1]):
        if abs(value) >= scale:
            return '%.*g %s' % (digits, value / scale, unit)
    return '%.*g N' % (digits, value)


def axis_column(variable):
    """
    header name and divisor of a swept variable, frequencies as f/2pi in Hz
    """
    units = SWEEPABLE[variable][1]
    for table, suffix, divisor in AXIS_COLUMNS:
        if table is units:
            return '%s_%s' % (variable, suffix), divisor
    return variable, 1.0


def sweep_points(experiment):
    """
    :return: list of (axis value or None, SystemParams or SqueezeProtocolParams)
    """
    if experiment.sweep is None:
        return [(None, experiment.point())]
    return [(value, experiment.with_point(experiment.sweep.variable, value)) for value in experiment.sweep.values()]


def with_axis(experiment, header, rows, skip=None):
    """
    prefixes header and rows with the swept variable

    :param skip: variable already present as a column
    """
    if experiment.sweep is None or experiment.sweep.variable == skip:
        return header, [row for _, row in rows]
    name, divisor = axis_column(experiment.sweep.variable)
    return [name] + header, [[value / divisor] + row for value, row in rows]


def require_model(experiment, models):
    if experiment.model not in models:
        raise InvalidSpecError('this command needs model type %s, got `%s`' % (' or '.join(models), experiment.model))


def spin_observables(spec):
    x, p = hilbert.quadratures(spec)
    _, _, n = hilbert.fock_ops(spec)
    observables = {'x': hilbert.embed(x, spec), 'p': hilbert.embed(p, spec), 'n': hilbert.embed(n, spec)}
    if spec.include_spin:
        sx, _, sz = hilbert.pauli()
        observables['sigma_x'] = hilbert.spin_op(sx, spec)
        observables['sigma_z'] = hilbert.spin_op(sz, spec)
    return observables


def model_hamiltonian(experiment, p):
    if experiment.model == 'effective':
        return analytics.effective_hamiltonian(p, experiment.hilbert)
    return hilbert.rabi_hamiltonian(p, experiment.hilbert)


def numerical_steady_state(experiment, p):
    """
    null space for small effective models, detection by evolution for larger ones, and the
    settled |-> branch for the full model
    """
    spec = experiment.hilbert
    H = model_hamiltonian(experiment, p)
    if experiment.model == 'effective':
        if spec.dim <= current_app.config.get('FORCESRV_STEADY_MAX_DIM', 64):
            return steady_state_direct(H, p.gamma, spec)
        return steady_state_evolve(DensityMatrix.ground(spec), H, p.gamma).state
    return settle(DensityMatrix.ground(spec, '-'), H, p.gamma).final_state


def steady_row(experiment, p):
    state = numerical_steady_state(experiment, p)
    moments = analytics.moments_of_state(state)
    d = analytics.derived(p)
    gss = analytics.gaussian_decomposition(d)
    return [p.F, d.lam, moments.mean_x, analytics.x_ss(d), moments.delta_x, analytics.var_x_ss(d),
            moments.mean_p, analytics.p_ss(d), moments.delta_p, analytics.var_p_ss(d),
            moments.n, analytics.n_ss(d), moments.var_n, analytics.var_n_ss(d),
            state.reduced_boson().purity(), gss.purity]


def cmd_steady(args, experiment, output):
    require_model(experiment, ('rabi', 'effective'))
    points = sweep_points(experiment)
    rows = run_jobs(lambda point: (point[0], steady_row(experiment, point[1])), points, args.jobs)
    header, rows = with_axis(experiment, STEADY_HEADER, rows)
    output.write_csv(header, rows)
    if experiment.sweep is None:
        row = rows[0]
        print('<x> = %.6g (closed form %.6g), Delta x = %.6g (%.6g), <n> = %.6g (%.6g)'
              % (row[2], row[3], row[4], row[5], row[10], row[11]))


def cmd_evolve(args, experiment, output):
    spec = experiment.hilbert
    values = dict(experiment.evolve)
    if experiment.model == 'squeezed':
        p = experiment.protocol_params()
        record_every = values.pop('record_every', current_app.config.get('FORCESRV_PROTOCOL_RECORD_EVERY', 1e-3))
        cfg = EvolveConfig.from_config(p.t_final, min(record_every, p.t_final),
                                       **dict((key, value) for key, value in values.items() if key != 't_final'))
        result = protocol.simulate_sweep(p, spec, cfg)
        for warning in result.metadata.get('warnings', []):
            print('warning: %s' % warning)
    else:
        p = experiment.params
        if 't_final' not in values:
            if p.gamma == 0:
                raise ConfigError('missing value, needed when gamma = 0', field='evolve.t_final')
            values['t_final'] = current_app.config.get('FORCESRV_SETTLE_DECAY_TIMES', 10) / p.gamma
        cfg = EvolveConfig.from_config(values.pop('t_final'), values.pop('record_every', None), **values)
        H = model_hamiltonian(experiment, p)
        observables = spin_observables(spec)
        if p.gamma == 0:
            ket = hilbert.product_ket('-', hilbert.fock_ket(0, spec)) if spec.include_spin else hilbert.fock_ket(0, spec)
            result = schrodinger_evolve(ket, H, spec, cfg, observables)
        else:
            result = evolve(DensityMatrix.ground(spec), H, p.gamma, cfg, observables)

    csv_path = output.write_csv(result.columns(), result.rows())
    output.write_plot('expectation values versus time', 't_s', 't (s)', 'expectation value',
                      [(label, label, 'line') for label in result.observables], csv_path=csv_path)
    print('final: %s' % ', '.join('%s = %.6g' % (label, result.final(label)) for label in result.observables))
    if not result.truncation_safe:
        print('warning: Fock tail %.2e, raise hilbert.fock_dim' % result.max_tail)


def cmd_sweep(args, experiment, output):
    if experiment.sweep is None:
        raise ConfigError('the sweep command needs a [sweep] section', field='sweep.variable')
    rows = []
    for value, p in sweep_points(experiment):
        if experiment.model == 'squeezed':
            rows.append((value, [protocol.demkov_sigma_z(p), protocol.demkov_snr(p), protocol.min_force_demkov(p),
                                 protocol.gap(p), protocol.adiabaticity_phase(p)]))
            continue
        d = analytics.derived(p)
        gss = analytics.gaussian_decomposition(d)
        rows.append((value, [d.lam, analytics.x_ss(d), analytics.var_x_ss(d), analytics.p_ss(d),
                             analytics.var_p_ss(d), analytics.n_ss(d), analytics.var_n_ss(d),
                             analytics.sigma12_ss(d), gss.purity]))
    header, rows = with_axis(experiment, SQUEEZED_SWEEP_HEADER if experiment.model == 'squeezed' else SWEEP_HEADER,
                             rows)
    csv_path = output.write_csv(header, rows)
    if experiment.model != 'squeezed':
        output.write_plot('steady state moments', header[0], header[0], 'moment',
                          [('<x>', 'x_ss', 'line'), ('Delta x', 'var_x', 'line'), ('<n>', 'n_ss', 'line')],
                          csv_path=csv_path)
    print('%d points written to %s' % (len(rows), csv_path))


def sensitivity_values(p, nu):
    budget = metrology.RepetitionBudget.repetitions(nu)
    values = []
    for observable in ('x', 'p', 'n'):
        report = metrology.sensitivity_report(observable, p)
        values.append(report if isinstance(report, NoSignal) else budget.apply(report).delta_F)
    values.append(metrology.delta_f_q(p, nu))
    return values


def cmd_sensitivity(args, experiment, output):
    if experiment.model == 'squeezed':
        rows = [(value, [protocol.demkov_sigma_z(p), protocol.min_force_demkov(p) / math.sqrt(args.nu)])
                for value, p in sweep_points(experiment)]
        header, rows = with_axis(experiment, ['sigma_z_analytic', 'Fmin_N'], rows)
        output.write_csv(header, rows)
        if experiment.sweep is None:
            print('Fmin = %s' % format_force(rows[0][1]))
        return

    rows = [(value, [analytics.derived(p).lam] + sensitivity_values(p, args.nu))
            for value, p in sweep_points(experiment)]
    header, rows = with_axis(experiment, SENSITIVITY_HEADER, rows)
    output.write_csv(header, rows)
    if experiment.sweep is None:
        row = rows[0]
        for name, value in zip(('dFx', 'dFp', 'dFn', 'dFQ'), row[1:]):
            print('%s = %s' % (name, format_force(value)))


def cmd_qfi(args, experiment, output):
    require_model(experiment, ('rabi', 'effective'))

    def row(point):
        value, p = point
        d = analytics.derived(p)
        fidelity = None
        if args.fidelity:
            fidelity = metrology.qfi_fidelity_oracle(p, experiment.hilbert, jobs=1)
        return value, [d.lam, metrology.qfi_closed_form(p),
                       metrology.qfi_covariance(metrology.mean_derivative(p), analytics.covariance_ss(d)),
                       fidelity, metrology.delta_f_q(p)]

    header, rows = with_axis(experiment, QFI_HEADER, run_jobs(row, sweep_points(experiment), args.jobs))
    output.write_csv(header, rows)
    if experiment.sweep is None:
        values = rows[0]
        print('I_Q = %.6g /N^2 (covariance form %.6g%s), dFQ = %s'
              % (values[1], values[2], ', fidelity %.6g' % values[3] if values[3] is not None else '',
                 format_force(values[4])))


def cmd_squeeze(args, experiment, output):
    require_model(experiment, ('squeezed',))
    spec = experiment.hilbert

    def row(point):
        value, p = point
        sigma_z, delta, result = None, None, None
        if not args.analytic:
            result = protocol.simulate_sweep(p, spec)
            sigma_z, delta = result.final('sigma_z'), result.final('delta_sigma_z')
        numeric_min = protocol.min_force_numeric(p, spec) if args.min_force else None
        return (value, [p.xi / TWO_PI, protocol.demkov_sigma_z(p), sigma_z, delta, protocol.min_force_demkov(p),
                        numeric_min]), result

    computed = run_jobs(row, sweep_points(experiment), args.jobs)
    header, rows = with_axis(experiment, SQUEEZE_HEADER, [entry for entry, _ in computed], skip='xi')
    output.write_csv(header, rows)
    for warning in protocol.validity_warnings(experiment.protocol_params()):
        print('warning: %s' % warning)
    if experiment.sweep is None:
        values = rows[0]
        result = computed[0][1]
        if result is not None:
            csv_path = output.write_csv(result.columns(), result.rows(), part='trace')
            output.write_plot('spin and phonon number during the sweep', 't_s', 't (s)', 'expectation value',
                              [('<sigma_z>', 'sigma_z', 'line'), ('<n>', 'n', 'line')], part='trace',
                              csv_path=csv_path)
            print('<sigma_z(t_f)> = %.6f (two-state %.6f)' % (values[2], values[1]))
        else:
            print('<sigma_z(t_f)> = %.6f (two-state)' % values[1])
        print('Fmin = %s%s' % (format_force(values[4]),
                               ', simulated %s' % format_force(values[5]) if values[5] is not None else ''))


def cmd_reproduce(args, output):
    result = reproduce.reproduce(args.figure, output, fock_dim=args.fock_dim, jobs=args.jobs) \
        if not (args.figure == 'tab-sensitivities' and args.dissipative) \
        else reproduce.tab_sensitivities(output, include_dissipative=True, fock_dim=args.fock_dim)
    for check in result.checks:
        print(check)
    output.write_manifest(None, extra=[('figure', args.figure)] + [('check', str(check)) for check in result.checks])
    return EXIT_OK if result.passed else EXIT_NUMERICAL


def cmd_validate(args, output):
    passed = True
    for name, checks in validate.run_suites(output=output, slow=args.slow, jobs=args.jobs):
        print('[%s]' % name)
        for check in checks:
            print('  %s' % check)
            passed &= check.passed
    print('all suites passed' if passed else 'some checks failed')
    return EXIT_OK if passed else EXIT_NUMERICAL


COMMANDS = {
    'steady': cmd_steady,
    'evolve': cmd_evolve,
    'sweep': cmd_sweep,
    'sensitivity': cmd_sensitivity,
    'qfi': cmd_qfi,
    'squeeze': cmd_squeeze,
}


def run(args):
    """
    runs one parsed command inside an application context

    :return: exit status
    """
    start_time = time.time()
    if args.subcommand in ('reproduce', 'validate'):
        output = RunOutput(args.out or 'output', args.figure if args.subcommand == 'reproduce' else 'validate')
        status = cmd_reproduce(args, output) if args.subcommand == 'reproduce' else cmd_validate(args, output)
    else:
        experiment = load_config(args.config, args.overrides)
        output = RunOutput(args.out or experiment.outputs or 'output', args.subcommand)
        COMMANDS[args.subcommand](args, experiment, output)
        output.write_manifest(experiment, extra=[('config', args.config)] +
                              [('override', override) for override in args.overrides])
        status = EXIT_OK
    current_app.logger.info('%s finished with status %d in %s ms'
                            % (args.subcommand, status, (time.time() - start_time) * 1000))
    return status


def exit_status(e):
    if isinstance(e, PhysicsError):
        return EXIT_PHYSICS
    if isinstance(e, NumericalError):
        return EXIT_NUMERICAL
    return EXIT_USAGE


def main(argv=None, app=None):
    """
    :param argv: arguments without the program name, defaults to sys.argv[1:]
    :param app: application providing the configuration, defaults to create_app()
    :return: exit status
    """
    args = build_parser().parse_args(argv)
    if app is None:
        from forcesrv.app import create_app
        app = create_app()
    with app.app_context():
        try:
            return run(args)
        except Error as e:
            current_app.logger.error('%s failed: %s: %s' % (args.subcommand, e.__class__.__name__, e))
            sys.stderr.write('error: %s\n' % e)
            return exit_status(e)
