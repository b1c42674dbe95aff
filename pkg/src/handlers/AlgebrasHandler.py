"""Handlers related with built-in algebras"""

from flask import Blueprint, make_response, jsonify
from flask.views import MethodView

from app import application
from src.exceptions import UnknownAlgebraException, MalformedInputException
from src.mixins.CohomologyMixin import CohomologyMixin
from src.mixins.LeibnizMixin import LeibnizMixin
from src.services.serialization import algebra_to_json, jsonable

ALGEBRAS_BLUEPRINT = Blueprint('algebras', __name__)


class AlgebrasAPI(MethodView):
    """Handler for algebra lookup"""

    @staticmethod
    def get(name):
        """Structure constants of a built-in algebra with its center, derived and cohomology dims"""

        try:
            application.logger.info("Algebra requested: {}".format(name))
            alg = LeibnizMixin.builtin(name)
            h0, h1 = CohomologyMixin.cohomology_dims(alg)
            response = {
                'status': 'success',
                'message': 'algebra_found',
                'algebra': algebra_to_json(alg),
                'structure': {
                    'center_dim': LeibnizMixin.center(alg).dim,
                    'derived_dim': LeibnizMixin.derived(alg).dim,
                    'h0': h0,
                    'h1': h1,
                    'leibniz': jsonable(LeibnizMixin.check_left_leibniz(alg)),
                }
            }
            return make_response(jsonify(response)), 200
        except UnknownAlgebraException:
            response = {
                'status': 'fail',
                'message': 'algebra_not_found'
            }
            return make_response(jsonify(response)), 404
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


ALGEBRAS_VIEW = AlgebrasAPI.as_view('algebras_api')
ALGEBRAS_BLUEPRINT.add_url_rule(
    '/algebras/<name>',
    view_func=ALGEBRAS_VIEW,
    methods=['GET']
)
