"""Handlers related with running check suites"""

from flask import Blueprint, request, make_response, jsonify
from flask.views import MethodView
from schema import Schema, And, Or, Optional, SchemaError

from app import application
from src.exceptions import MalformedInputException
from src.services.reports import SUITES, run_suite

CHECKS_BLUEPRINT = Blueprint('checks', __name__)

NUMBER = Or(int, float)
REQUEST_SCHEMA = Schema({
    Optional('algebra'): Or(str, dict),
    Optional('order'): And(int, lambda n: n >= 1),
    Optional('seed'): int,
    Optional('tol'): And(NUMBER, lambda t: t > 0),
    Optional('samples'): And(int, lambda n: n >= 1),
    Optional('a'): Or(str, [Or(int, str)]),
    Optional('n_max'): And(int, lambda n: n >= 1),
    Optional('timings'): bool,
    Optional('reduced'): bool,
})


class ChecksAPI(MethodView):
    """Handler for check suites"""

    @staticmethod
    def post(suite):
        """Runs the named suite with the parameters in the body"""

        try:
            if suite not in SUITES:
                response = {
                    'status': 'fail',
                    'message': 'suite_not_found'
                }
                return make_response(jsonify(response)), 404
            data = request.get_json(silent=True)
            if data is None:
                data = {}
            params = REQUEST_SCHEMA.validate(data)
            application.logger.info("Running {} with {}".format(suite, params))
            report = run_suite(suite, params)
            if report['ok']:
                response = {
                    'status': 'success',
                    'message': 'checks_passed',
                    'report': report
                }
                return make_response(jsonify(response)), 200
            response = {
                'status': 'fail',
                'message': 'checks_failed',
                'report': report
            }
            return make_response(jsonify(response)), 422
        except SchemaError as exc:
            response = {
                'status': 'fail',
                'message': 'malformed_input',
                'detail': str(exc)
            }
            return make_response(jsonify(response)), 400
        except MalformedInputException as exc:
            response = {
                'status': 'fail',
                'message': 'malformed_input',
                'detail': exc.message
            }
            return make_response(jsonify(response)), 400
        except Exception as exc:  # pragma: no cover
            application.logger.error("Error ocurred. Message: {}".format(exc))
            response = {
                'status': 'fail',
                'message': 'internal_error'
            }
            return make_response(jsonify(response)), 500


CHECKS_VIEW = ChecksAPI.as_view('checks_api')
CHECKS_BLUEPRINT.add_url_rule(
    '/checks/<suite>',
    view_func=CHECKS_VIEW,
    methods=['POST']
)
