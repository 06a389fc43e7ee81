"""
@file
@brief Shortcuts to *exc*.
"""

from .exc_locking import (
    LockingError, UsageError, ModelError, ResourceError,
    NoCycleError, DegenerateInputError)
