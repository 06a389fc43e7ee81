"""
@file
@brief Shortcuts to *cli*.
"""

from .run_config import RunConfig
from .main import main, run, parse_args, run_selftest
