"""gunicorn entry point"""
from app import application
from src.config import LOGGER, RACK_ORDER, RACK_SAMPLES, RACK_SEED, RACK_TOL

LOGGER.info("Serving suites with seed {}, {} samples, tol {}, order {}".format(
    RACK_SEED, RACK_SAMPLES, RACK_TOL, RACK_ORDER))

if __name__ == "__main__":
    application.run()
