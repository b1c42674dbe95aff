"""Runtime configuration and logging setup"""
import os
import sys
import logging
from logging import StreamHandler

LOG_LEVEL = os.environ.get("LOG_LEVEL", "INFO")
RACK_SEED = int(os.environ.get("RACK_SEED", "42"))
RACK_SAMPLES = int(os.environ.get("RACK_SAMPLES", "100"))
RACK_TOL = float(os.environ.get("RACK_TOL", "1e-9"))
# No default truncation order: commands that need one fail without it.
RACK_ORDER = os.environ.get("RACK_ORDER")


def get_log_level(log_level):
    if log_level == "INFO":
        return logging.INFO
    elif log_level == "DEBUG":
        return logging.DEBUG
    elif log_level == "WARN":
        return logging.WARN
    elif log_level == "ERROR":
        return logging.ERROR
    return logging.INFO


def get_order(order=None):
    """Truncation order from the explicit value or RACK_ORDER, None if neither is set"""
    if order is not None:
        return int(order)
    if RACK_ORDER:
        return int(RACK_ORDER)
    return None


formatter = logging.Formatter(
    "[%(asctime)s] {%(pathname)s:%(lineno)d} %(levelname)s - %(message)s")
# stdout carries the JSON reports
handler = StreamHandler(sys.stderr)
handler.setLevel(get_log_level(LOG_LEVEL))
handler.setFormatter(formatter)

LOGGER = logging.getLogger("leibniz_racks")
LOGGER.addHandler(handler)
LOGGER.setLevel(get_log_level(LOG_LEVEL))
LOGGER.propagate = False
