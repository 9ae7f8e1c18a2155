"""Global variables for LIEWB"""

import os
import json
import logging

from ._exceptions import DomainError

# Directory paths
PARENT_DIRECTORY = os.path.join(os.path.dirname(__file__), "..", "..")
RESOURCES_DIRECTORY = os.path.join(PARENT_DIRECTORY, "resources")
LOGS_DIRECTORY = os.path.join(PARENT_DIRECTORY, "logs")

# Set the log formatter
LOG_FORMATTER = logging.Formatter("%(asctime)s:%(levelname)s:%(message)s:%(lineno)d")

DEFAULT_BUDGET = 3**9
DEFAULT_MAX_DEGREE = 16


def env_int(name, default):
    """Read a positive integer from the environment, `default` when unset."""
    text = os.environ.get(name)
    if text is None or not text.strip():
        return default
    try:
        value = int(text)
    except ValueError:
        raise DomainError("{} must be a positive integer, got {!r}".format(name, text)) from None
    if value < 1:
        raise DomainError("{} must be a positive integer, got {!r}".format(name, text))
    return value


def load_environment():
    """Set BUDGET and MAX_DEGREE from LIEWB_BUDGET and LIEWB_MAX_DEGREE."""
    global BUDGET, MAX_DEGREE
    BUDGET = env_int("LIEWB_BUDGET", DEFAULT_BUDGET)
    MAX_DEGREE = env_int("LIEWB_MAX_DEGREE", DEFAULT_MAX_DEGREE)


# Largest tensor space T^d(V) the modular lab will build (dim V ** d)
BUDGET = DEFAULT_BUDGET

# Largest total degree of a formal character in the character backend
MAX_DEGREE = DEFAULT_MAX_DEGREE

# A malformed value is reported when the command line starts
try:
    load_environment()
except DomainError:
    pass

DEFAULT_SEED = 0

# Get the default verification grid if present
try:
    with open(os.path.join(RESOURCES_DIRECTORY, "verify_grid.json"), "r") as grid:
        VERIFY_GRID = json.load(grid)
except FileNotFoundError:
    VERIFY_GRID = {
        "char": [{"p": 2, "k": 3, "m": 1, "r": 2, "s": 3, "n": 2}],
        "green": [{"p": 2, "a": 2, "k": 3, "m": 1, "D": 8}],
    }
