"""Exact computations with Lie powers, Adams operations and Lie resolvents."""
from ._version import __version__

VERSION = __version__
