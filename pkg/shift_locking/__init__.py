# -*- coding: utf-8 -*-
"""
@file
@brief Module *shift_locking*.
Certifies that a Lipschitz potential on the binary full shift
has a unique periodic maximizing measure which persists
under small perturbations (locking property), with the gap
between the two heaviest cycles of de Bruijn–Good digraphs,
and checks the probabilistic bounds on that gap
for random potentials drawn from Hilbert bricks.
"""

__version__ = "0.1.0"
__author__ = "Xavier Dupré"
__github__ = "https://github.com/sdpython/shift_locking"
__url__ = "http://www.xavierdupre.fr/app/shift_locking/helpsphinx/index.html"
__license__ = "MIT License"


def check(log=False):
    """
    Checks the library is working.
    It raises an exception if it does not.

    @param      log     if True, display information, otherwise
    @return             0 or exception
    """
    from .symbolic import DecayModel
    from .data import indicator_of_zero
    from .certify import certify_at_level
    cert = certify_at_level(indicator_of_zero(), DecayModel.theta(1., 0.2), 1)
    if not cert.certified or cert.orbit.to_json() != "0":
        raise AssertionError(  # pragma: no cover
            "Unexpected certificate {0!r}.".format(cert))
    if log:
        print("[check] {0!r}".format(cert))
    return True


def _setup_hook(use_print=False):
    """
    if this function is added to the module,
    the help automation and unit tests call it first before
    anything goes on as an initialization step.
    """
    if use_print:
        print("Success: _setup_hook")
