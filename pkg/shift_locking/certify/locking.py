# -*- coding: utf-8 -*-
"""
@file
@brief Gap criterion: if ``Gap_n(f) > Σ_{k >= n} (k - n + 1) max_{|w| = k} |c_w(f)|``
then *f* has a unique periodic maximizing measure which persists
under small perturbations (locking property).
"""
import math
import pandas
from ..exc import UsageError, ModelError, ResourceError
from ..graph import build_graph, assign_weights, gap, cycle_to_periodic_point


def tail_majorant(f, model, n):
    """
    Certified upper bound of ``Σ_{k >= n} (k - n + 1) max_{|w| = k} |c_w(f)|``.
    It is exact for step functions, ``LIP T(n)`` for evaluators and
    mixes both for a potential plus a brick sample.

    @param      f       @see cl Potential
    @param      model   @see cl DecayModel
    @param      n       level, ``n >= 1``
    @return             float
    """
    if n < 1:
        raise UsageError("n must be >= 1 not {0}.".format(n))
    return f.weighted_tail(n, model=model)


class LockingCertificate:
    """
    Certificate issued when the gap criterion holds at level *n*:
    the uniform measure on the orbit of *orbit* is the unique
    maximizing measure of *f* and it is locked.
    """

    certified = True

    def __init__(self, level, gap_value, tail_bound, orbit, provenance,
                 gap_result=None, trace=None):
        """
        @param      level       level *n*
        @param      gap_value   ``Gap_n(f)`` (computed on ``A_n f``)
        @param      tail_bound  certified bound compared to the gap
                                (quadrature error included, before slack)
        @param      orbit       @see cl PeriodicPoint
        @param      provenance  dictionary (potential, decay model, slack)
        @param      gap_result  @see cl GapResult
        @param      trace       per-level rows of the level search
        """
        self.level = level
        self.gap_value = gap_value
        self.tail_bound = tail_bound
        self.margin = gap_value - tail_bound
        self.orbit = orbit
        self.provenance = provenance
        self.gap_result = gap_result
        self.trace = trace or []

    @property
    def measure_description(self):
        "Describes the uniform measure on the periodic orbit."
        bits = self.orbit.repeating_word.bits
        p = len(bits)
        return dict(kind="periodic", period=p, weight=1. / p,
                    support=[bits[i:] + bits[:i] for i in range(p)])

    def trace_dataframe(self):
        "Returns the trace as a :epkg:`pandas:DataFrame`."
        return pandas.DataFrame(self.trace)

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(status="certified", level=self.level, gap=self.gap_value,
                    tail_bound=self.tail_bound, margin=self.margin,
                    orbit=self.orbit.to_json(), measure=self.measure_description,
                    provenance=self.provenance, trace=self.trace)

    def __repr__(self):
        return "LockingCertificate(level={0}, orbit={1!r}, margin={2!r})".format(
            self.level, self.orbit.to_json(), self.margin)


class CriterionFailure:
    """
    Report of a level where the gap criterion does not hold.
    """

    certified = False

    def __init__(self, level, gap_value, tail_bound, tie, gap_result=None):
        self.level = level
        self.gap_value = gap_value
        self.tail_bound = tail_bound
        self.deficit = tail_bound - gap_value
        self.tie = tie
        self.gap_result = gap_result

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(status="criterion-failed", level=self.level, gap=self.gap_value,
                    tail_bound=self.tail_bound, deficit=self.deficit, tie=self.tie)

    def __repr__(self):
        return "CriterionFailure(level={0}, gap={1!r}, tail_bound={2!r}, tie={3})".format(
            self.level, self.gap_value, self.tail_bound, self.tie)


class LockingNotFound:
    """
    Result of @see fn find_locking_level when no level up to *n_max*
    satisfies the criterion.
    """

    certified = False

    def __init__(self, n_max, trace):
        self.n_max = n_max
        self.trace = trace

    def trace_dataframe(self):
        "Returns the trace as a :epkg:`pandas:DataFrame`."
        return pandas.DataFrame(self.trace)

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(status="not-found", n_max=self.n_max, trace=self.trace)

    def __repr__(self):
        return "LockingNotFound(n_max={0})".format(self.n_max)


def certify_at_level(f, model, n, slack=1e-9, threads=None, max_level=24, fLOG=None):
    """
    Checks the gap criterion at level *n*. The gap is computed on
    ``BG_n`` with the weights of ``A_n f``, it is compared to
    @see fn tail_majorant plus twice the quadrature error
    (each of the two heaviest means may move by that error),
    inflated by ``1 + slack``.

    @param      f           @see cl Potential
    @param      model       @see cl DecayModel
    @param      n           level
    @param      slack       relative slack applied to the certified bound
    @param      threads     threads for the arc-deletion sweep
    @param      max_level   resource guard on *n*
    @param      fLOG        logging function
    @return                 @see cl LockingCertificate or @see cl CriterionFailure

    .. exref::
        :title: certify the indicator of a cylinder
        :tag: certify

        ::

            from shift_locking.symbolic import DecayModel
            from shift_locking.data import indicator_of_zero
            from shift_locking.certify import certify_at_level
            cert = certify_at_level(indicator_of_zero(), DecayModel.theta(1., 0.2), 1)
            print(cert.orbit, cert.gap_value, cert.tail_bound)
    """
    if n < 1:
        raise UsageError("n must be >= 1 not {0}.".format(n))
    if not math.isfinite(model.summability()):
        raise ModelError("The decay model is not summable, Σ n a_n = {0}.".format(
            model.summability()))
    available = f.max_level_available()
    if available is not None and n > available:
        raise UsageError(
            "Level {0} is above the quadrature depth {1}.".format(n, available))
    graph = assign_weights(build_graph(n, max_level=max_level), f)
    res = gap(graph, threads=threads)
    tail = tail_majorant(f, model, n) + 2 * f.approximation_error(n)
    bound = (1 + slack) * tail
    if fLOG:
        fLOG("[certify_at_level] n={0} gap={1} tail={2} margin={3}".format(
            n, res.gap, tail, res.gap - bound))
    if res.gap > bound and res.gap > 0:
        orbit = cycle_to_periodic_point(res.best.witness_cycle)
        provenance = dict(potential=f.describe(),
                          model=model.to_json() if model is not None else None,
                          theta_regime=model.theta_regime() if model is not None else None,
                          slack=slack, lip=f.lip,
                          approximation_error=f.approximation_error(n))
        return LockingCertificate(n, res.gap, tail, orbit, provenance, gap_result=res)
    return CriterionFailure(n, res.gap, tail, res.is_tie, gap_result=res)


def find_locking_level(f, model, n_max, slack=1e-9, threads=None, max_level=24, fLOG=None):
    """
    Scans levels ``1, ..., n_max`` and returns the certificate
    of the first level where the gap criterion holds.

    @param      f           @see cl Potential
    @param      model       @see cl DecayModel
    @param      n_max       highest level
    @param      slack       relative slack
    @param      threads     threads for the arc-deletion sweep
    @param      max_level   resource guard
    @param      fLOG        logging function
    @return                 @see cl LockingCertificate (with the trace)
                            or @see cl LockingNotFound
    """
    if n_max > max_level:
        raise ResourceError("n_max", n_max, max_level)
    if n_max < 1:
        raise UsageError("n_max must be >= 1 not {0}.".format(n_max))
    trace = []
    for n in range(1, n_max + 1):
        res = certify_at_level(f, model, n, slack=slack, threads=threads,
                               max_level=max_level)
        row = dict(level=n, gap=res.gap_value, tail_bound=res.tail_bound,
                   certified=res.certified)
        trace.append(row)
        if fLOG:
            fLOG("[find_locking_level] n={0} gap={1} tail={2} certified={3}".format(
                n, res.gap_value, res.tail_bound, res.certified))
        if res.certified:
            res.trace = trace
            return res
    return LockingNotFound(n_max, trace)
