# -*- coding: utf-8 -*-

from flask import current_app, request, Blueprint, Response
from flask_discoverer import advertise

import json
import math
import time

from forcesrv.model.common import SystemParams, ConfigError, NoSignal, parse_quantity, LENGTH_UNITS, \
    DIMENSIONLESS_UNITS
from forcesrv.experiment.expconfig import FIELDS
from forcesrv.sensing import analytics, metrology, protocol


bp = Blueprint('force_service', __name__)

REQUIRED_PARAMS = ('omega', 'Omega', 'g')


def return_response(results, status, content_type='application/json'):
    """

    :param results: results in a dict
    :param status: status code
    :return:
    """

    if 'application/json' in content_type:
        response = json.dumps(results)
    else:
        response = results

    if status != 200:
        current_app.logger.error('sending response status={status}'.format(status=status))
        current_app.logger.error('sending response text={response}'.format(response=results))
    else:
        current_app.logger.info('sending response status={status}'.format(status=status))
    r = Response(response=response, status=status)
    r.headers['content-type'] = content_type
    return r


def json_value(value):
    """
    NoSignal and non-finite floats become null
    """
    if isinstance(value, NoSignal):
        return None
    value = float(value)
    return value if math.isfinite(value) else None


def quantity_arg(name, units, default=None):
    """
    a unit-suffixed query parameter such as `omega=0.3 kHz`, in SI

    :return:
    """
    text = request.args.get(name)
    if text is None:
        if default is None:
            raise ConfigError('missing parameter', field=name)
        return default
    return parse_quantity(text, units, field=name)


def system_params():
    """
    SystemParams from the query string; gamma and F default to zero, z to FORCESRV_DEFAULT_Z_NM
    """
    units = FIELDS['params']
    values = dict((name, quantity_arg(name, units[name])) for name in REQUIRED_PARAMS)
    values['gamma'] = quantity_arg('gamma', units['gamma'], 0.0)
    values['F'] = quantity_arg('F', units['F'], 0.0)
    values['z'] = quantity_arg('z', units['z'], current_app.config.get('FORCESRV_DEFAULT_Z_NM', 14.0) * LENGTH_UNITS['nm'])
    return SystemParams(**values)


def protocol_params():
    """
    SqueezeProtocolParams from the query string; Omega defaults to Omega0
    """
    units = FIELDS['protocol']
    Omega0 = quantity_arg('Omega0', units['Omega0'])
    params = FIELDS['params']
    base = SystemParams(omega=quantity_arg('omega', params['omega']), Omega=Omega0, g=quantity_arg('g', params['g']),
                        gamma=quantity_arg('gamma', params['gamma'], 0.0), F=quantity_arg('F', params['F'], 0.0),
                        z=quantity_arg('z', params['z'],
                                       current_app.config.get('FORCESRV_DEFAULT_Z_NM', 14.0) * LENGTH_UNITS['nm']))
    return protocol.SqueezeProtocolParams(base=base, xi=quantity_arg('xi', units['xi'], 0.0), Omega0=Omega0,
                                          kappa=quantity_arg('kappa', units['kappa']),
                                          t_final=quantity_arg('t_final', units['t_final']),
                                          phi=quantity_arg('phi', units['phi'], math.pi))


@advertise(scopes=[], rate_limit=[1000, 3600 * 24])
@bp.route('/sensitivity', methods=['GET'])
def sensitivity_get():
    """
    minimal detectable forces of x, p and n with the Cramer-Rao bound, for nu repetitions

    :return:
    """
    start_time = time.time()
    p = system_params()
    nu = quantity_arg('nu', DIMENSIONLESS_UNITS, 1.0)
    current_app.logger.info('received GET request for sensitivities with {params}'.format(params=p.as_dict()))

    d = analytics.derived(p)
    budget = metrology.RepetitionBudget.repetitions(nu)
    results = {'lambda': d.lam, 'lambda_c': d.lam_c, 'nu': nu}
    for observable in ('x', 'p', 'n'):
        report = metrology.sensitivity_report(observable, p)
        results['dF%s_N' % observable] = None if isinstance(report, NoSignal) else budget.apply(report).delta_F
    results['dFQ_N'] = metrology.delta_f_q(p, nu)
    current_app.logger.debug('sensitivities computed in %s ms' % ((time.time() - start_time) * 1000))
    return return_response(results, 200, 'application/json; charset=UTF8')


@advertise(scopes=[], rate_limit=[1000, 3600 * 24])
@bp.route('/steady', methods=['GET'])
def steady_get():
    """
    closed-form steady state moments and the Gaussian decomposition at force F

    :return:
    """
    p = system_params()
    current_app.logger.info('received GET request for the steady state with {params}'.format(params=p.as_dict()))

    d = analytics.derived(p)
    gss = analytics.gaussian_decomposition(d)
    results = {
        'lambda': d.lam, 'lambda_c': d.lam_c, 'f_tilde': d.f_tilde,
        'x_ss': analytics.x_ss(d), 'var_x': analytics.var_x_ss(d),
        'p_ss': analytics.p_ss(d), 'var_p': analytics.var_p_ss(d),
        'sigma12': analytics.sigma12_ss(d),
        'n_ss': analytics.n_ss(d), 'var_n': analytics.var_n_ss(d),
        'purity': gss.purity, 'thermal_n': gss.thermal_n,
        'alpha': gss.disp_alpha.real, 'r': gss.squeeze_r, 'chi': gss.squeeze_chi, 'delta': gss.rot_delta,
    }
    return return_response(dict((key, json_value(value)) for key, value in results.items()), 200,
                           'application/json; charset=UTF8')


@advertise(scopes=[], rate_limit=[1000, 3600 * 24])
@bp.route('/qfi', methods=['GET'])
def qfi_get():
    """
    quantum Fisher information in closed and covariance form, and the SLD parameters

    :return:
    """
    p = system_params()
    current_app.logger.info('received GET request for the QFI with {params}'.format(params=p.as_dict()))

    d = analytics.derived(p)
    beta, prefactor = metrology.sld_parameters(analytics.gaussian_decomposition(d), metrology.alpha_derivative(p))
    results = {
        'qfi_closed_form': metrology.qfi_closed_form(p),
        'qfi_covariance': metrology.qfi_covariance(metrology.mean_derivative(p), analytics.covariance_ss(d)),
        'dFQ_N': metrology.delta_f_q(p),
        'sld_beta': [beta.real, beta.imag],
        'sld_prefactor': prefactor,
    }
    return return_response(results, 200, 'application/json; charset=UTF8')


@advertise(scopes=[], rate_limit=[1000, 3600 * 24])
@bp.route('/squeeze', methods=['GET'])
def squeeze_get():
    """
    two-state predictions of the squeezing enhanced adiabatic protocol

    :return:
    """
    p = protocol_params()
    current_app.logger.info('received GET request for the squeezing protocol with xi={xi}, Omega0={Omega0}'.
                            format(xi=p.xi, Omega0=p.Omega0))

    results = {
        'sigma_z': protocol.demkov_sigma_z(p),
        'snr': json_value(protocol.demkov_snr(p)),
        'Fmin_N': protocol.min_force_demkov(p),
        'gap_J': protocol.gap(p),
        'adiabaticity_phase': protocol.adiabaticity_phase(p),
        'Omega_final': p.omega_final(),
        'warnings': protocol.validity_warnings(p),
    }
    return return_response(results, 200, 'application/json; charset=UTF8')
