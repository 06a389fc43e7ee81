# -*- coding: utf-8 -*-
"""
@file
@brief Exceptions raised by the library.
"""


class LockingError(Exception):
    """
    Base class for every error raised by this module.
    """
    pass


class UsageError(LockingError, ValueError):
    """
    Raised when a function receives arguments which
    do not follow its contract: words of different lengths,
    incomplete tables, malformed cycles or graphs...
    """
    pass


class ModelError(UsageError):
    """
    Raised when a decay model or a gauge is invalid.
    """
    pass


class ResourceError(LockingError):
    """
    Raised when a computation would exceed one of the resource guards.
    """

    def __init__(self, what, value, limit):
        """
        @param      what    name of the guarded quantity
        @param      value   requested value
        @param      limit   maximum allowed value
        """
        LockingError.__init__(
            self, "{0}={1} exceeds the resource guard {2}.".format(what, value, limit))
        self.what = what
        self.value = value
        self.limit = limit


class NoCycleError(LockingError):
    """
    The graph has no directed cycle.
    """
    pass


class DegenerateInputError(LockingError):
    """
    The graph has fewer than two distinct directed cycles.
    """
    pass
