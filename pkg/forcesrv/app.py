from werkzeug.serving import run_simple

from flask_discoverer import Discoverer

from adsmutils import ADSFlask

from forcesrv.model.common import Error, ConfigError, InvalidSpecError, PhysicsError
from forcesrv.views import bp, return_response

# physics and parameter errors are the caller's to fix
CLIENT_ERRORS = (ConfigError, InvalidSpecError, PhysicsError)


def handle_error(e):
    """
    every forcesrv.Error raised inside a request becomes a JSON error body

    :param e: forcesrv.model.common.Error
    :return:
    """
    status = 400 if isinstance(e, CLIENT_ERRORS) else 500
    return return_response({'error': str(e), 'type': e.__class__.__name__}, status)


def create_app(**config):
    """
    Create the application and return it to the user. Numerical defaults are read from its
    config (config.py, local_config.py, environment), so library calls run inside
    `app.app_context()`.

    :param config: overrides of config.py
    :return: flask.Flask application
    """
    if config:
        app = ADSFlask(__name__, static_folder=None, local_config=config)
    else:
        app = ADSFlask(__name__, static_folder=None)

    app.url_map.strict_slashes = False

    Discoverer(app)

    app.register_blueprint(bp)
    app.register_error_handler(Error, handle_error)
    return app


if __name__ == '__main__':
    run_simple('0.0.0.0', 5000, create_app(), use_reloader=False, use_debugger=False)
