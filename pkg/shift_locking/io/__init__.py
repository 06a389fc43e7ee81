"""
@file
@brief Shortcuts to *io*.
"""

from .json_io import SCHEMA_VERSION, dumps_artifact, load_json_file, to_builtin, with_header
