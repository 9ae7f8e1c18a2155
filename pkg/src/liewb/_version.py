"""Version information for LIEWB"""

__version__ = "0.3.0"
