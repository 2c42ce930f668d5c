"""Resolution of the calibration document.

An explicit path wins, then ``$RLV_CALIBRATION``, then the copy bundled with
the package. Every document is validated in full; unknown keys are errors.
"""

import importlib.resources
import logging
import os

from rlvopt.assembly.config import Calibration
from rlvopt.config import load_config, parse_config

CALIBRATION_ENV_VAR = "RLV_CALIBRATION"
DEFAULT_CALIBRATION_NAME = "default_calibration.yaml"


def _bundled():
    return importlib.resources.files("rlvopt") / "data" / DEFAULT_CALIBRATION_NAME


def resolve_calibration_path(path: str | None = None) -> str | None:
    """The file to load, or None for the bundled calibration."""
    return path or os.environ.get(CALIBRATION_ENV_VAR) or None


def load_calibration(path: str | None = None) -> Calibration:
    resolved = resolve_calibration_path(path)
    if resolved is None:
        calibration = parse_config(_bundled().read_text(), Calibration, DEFAULT_CALIBRATION_NAME)
        logging.info(f"Using bundled calibration {calibration.version}")
        return calibration
    return load_config(resolved, Calibration)


__all__ = [
    "CALIBRATION_ENV_VAR",
    "Calibration",
    "load_calibration",
    "resolve_calibration_path",
]
