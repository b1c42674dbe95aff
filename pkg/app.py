from flask import Flask, jsonify

from src.config import LOG_LEVEL, get_log_level, handler
from src.mixins.LeibnizMixin import BUILTIN_NAMES
from src.services.reports import SUITES

application = Flask(__name__)


@application.route("/")
def index():
    return jsonify({'algebras': list(BUILTIN_NAMES), 'suites': list(SUITES)})


application.logger.addHandler(handler)
application.logger.setLevel(get_log_level(LOG_LEVEL))

from src.handlers.AlgebrasHandler import ALGEBRAS_BLUEPRINT
from src.handlers.ChecksHandler import CHECKS_BLUEPRINT
from src.handlers.CommandsHandler import register_commands
application.register_blueprint(ALGEBRAS_BLUEPRINT)
application.register_blueprint(CHECKS_BLUEPRINT)
register_commands(application.cli)

if __name__ == "__main__":

    application.run(debug=True, host='0.0.0.0')
