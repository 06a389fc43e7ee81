# -*- coding: utf-8 -*-
"""
@file
@brief Potentials on the full shift: exact step functions
and black-box evaluators with a Lipschitz certificate.
"""
import math
import numpy
from ..exc import UsageError, ResourceError
from ..symbolic import Word, PeriodicPoint, DecayModel
from ..symbolic.variation import step_values_to_array
from .haar_table import HaarTable, coefficients_from_cylinder_values, reconstruct, level_averages


class Potential:
    """
    Base class of every potential. A potential gives access
    to its level-*n* approximation ``A_n f`` (average of *f*
    on cylinders of level *n*), to its Haar coefficients
    and to certified bounds on what the finite data misses.
    """

    representation = None
    lip = None
    is_exact = False

    def max_level_available(self):
        "Highest level *n* for which @see me cylinder_values is available, None if unbounded."
        return None

    def constant_term(self):
        "Returns ``∫ f dβ``."
        raise NotImplementedError()  # pragma: no cover

    def cylinder_values(self, n):
        "Returns ``A_n f`` as @see cl CylinderValues."
        raise NotImplementedError()  # pragma: no cover

    def coefficients(self, k):
        "Coefficients of the Haar functions of level *k* (array of size ``2^k``)."
        raise NotImplementedError()  # pragma: no cover

    def coefficient_sup_bound(self, k):
        "Certified upper bound of ``max_{|w| = k} |c_w(f)|``."
        raise NotImplementedError()  # pragma: no cover

    def approximation_error(self, n):
        """
        Certified bound on the distance between the values returned
        by @see me cylinder_values and the true averages.
        """
        return 0.

    def sup_error(self, m):
        "Certified upper bound of ``‖f - A_m f‖∞``."
        raise NotImplementedError()  # pragma: no cover

    def weighted_tail(self, n, model=None, start=None):
        """
        Certified upper bound of
        ``Σ_{k >= start} (k - n + 1) max_{|w| = k} |c_w(f)|``.
        """
        raise NotImplementedError()  # pragma: no cover

    def shift(self, c):
        "Returns ``f + c``."
        raise NotImplementedError()  # pragma: no cover

    def scale(self, lam):
        "Returns ``λ f`` for ``λ > 0``."
        raise NotImplementedError()  # pragma: no cover

    def describe(self):
        "Dictionary describing the potential (recorded in certificates)."
        return dict(representation=self.representation)


class _ExactPotential(Potential):
    """
    Step function of finite level known through both its
    values and its Haar table.
    """

    is_exact = True

    def __init__(self, table, values):
        self.table = table
        self.values = values
        self.values.flags.writeable = False

    @property
    def level(self):
        "Level of the step function."
        return int(round(math.log2(self.values.shape[0])))

    def constant_term(self):
        return self.table.constant_term

    def cylinder_values(self, n):
        if n < 0:
            raise UsageError("Level must be non negative not {0}.".format(n))
        L = self.level
        if n <= L:
            return CylinderValues(n, level_averages(self.values, n))
        return CylinderValues(n, numpy.repeat(self.values, 1 << (n - L)))

    def coefficients(self, k):
        return self.table.level(k)

    def coefficient_sup_bound(self, k):
        return self.table.level_max(k)

    def sup_error(self, m):
        return 0.5 * math.fsum(self.table.level_max(k)
                               for k in range(m, self.table.max_level))

    def weighted_tail(self, n, model=None, start=None):
        start = n if start is None else start
        return math.fsum((k - n + 1) * self.table.level_max(k)
                         for k in range(start, self.table.max_level))

    def shift(self, c):
        return CylinderValues(self.level, self.values + c)

    def scale(self, lam):
        if not lam > 0:
            raise UsageError("lam must be positive not {0}.".format(lam))
        return CylinderValues(self.level, self.values * lam)

    def describe(self):
        return dict(representation=self.representation, level=self.level)


class StepTable(_ExactPotential):
    """
    Step function given by its Haar table.
    """

    representation = "step-table"

    def __init__(self, table):
        """
        @param      table       @see cl HaarTable
        """
        if not isinstance(table, HaarTable):
            raise UsageError("table must be a HaarTable not {0}.".format(type(table)))
        _ExactPotential.__init__(self, table, reconstruct(table))

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        res = self.table.to_json()
        res['kind'] = self.representation
        return res

    def __repr__(self):
        return "StepTable({0!r})".format(self.table)


class CylinderValues(_ExactPotential):
    """
    Step function of level *m* given by its ``2^m`` values
    in lexicographic order of the words.
    """

    representation = "cylinder-values"

    def __init__(self, level, values):
        """
        @param      level       *m*
        @param      values      ``2^m`` values or dictionary ``{word: value}``
        """
        arr, m = step_values_to_array(values)
        if m != level:
            raise UsageError(
                "{0} values do not describe a step function of level {1}.".format(
                    arr.shape[0], level))
        _ExactPotential.__init__(
            self, coefficients_from_cylinder_values(level, arr), arr.copy())

    def value(self, word):
        "Value on the cylinder ``[word]``."
        return float(self.values[Word(word).to_int()])

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(kind=self.representation, level=self.level,
                    values=[float(v) for v in self.values])

    def __repr__(self):
        return "CylinderValues({0}, {1!r})".format(self.level, self.values.tolist())


class EvaluatorPotential(Potential):
    """
    Black-box potential ``x -> f(x)`` with a Lipschitz constant
    *LIP* w.r.t. the metric ``d_a``, meaning ``var_n(f) <= LIP a_n``
    for every *n*. The constant is trusted, it is recorded
    in every certificate.

    Averages on cylinders are computed by quadrature: every word *w*
    of length *depth* is replaced by its periodic completion
    ``www...``, *func* receives the first *horizon* symbols
    of that point as a @see cl Word.
    """

    representation = "evaluator"

    def __init__(self, func, lip, model, depth, horizon=64, name=None, max_depth=22):
        """
        @param      func        function taking a @see cl Word and returning a float
        @param      lip         Lipschitz constant (trusted)
        @param      model       @see cl DecayModel defining ``d_a``
        @param      depth       quadrature depth *q*
        @param      horizon     length of the prefixes given to *func*
        @param      name        name recorded in certificates
        @param      max_depth   resource guard on *depth*
        """
        if not callable(func):
            raise UsageError("func must be callable.")
        if lip is None or lip < 0:
            raise UsageError("lip must be non negative not {0}.".format(lip))
        if not isinstance(model, DecayModel):
            raise UsageError("model must be a DecayModel not {0}.".format(type(model)))
        if depth < 1:
            raise UsageError("depth must be >= 1 not {0}.".format(depth))
        if depth > max_depth:
            raise ResourceError("depth", depth, max_depth)
        self.func = func
        self.lip = float(lip)
        self.model = model
        self.depth = depth
        self.horizon = max(horizon, depth)
        self.name = name or getattr(func, '__name__', 'evaluator')
        self._values = None

    def max_level_available(self):
        return self.depth

    def quadrature_values(self):
        """
        Values of *func* at the periodic completions of every
        word of length *depth*, cached.
        """
        if self._values is None:
            values = numpy.empty(1 << self.depth)
            for i in range(values.shape[0]):
                point = PeriodicPoint(Word.from_int(i, self.depth), canonical=False)
                values[i] = self.func(point.prefix(self.horizon))
            values.flags.writeable = False
            self._values = values
        return self._values

    def constant_term(self):
        return float(self.quadrature_values().mean())

    def cylinder_values(self, n):
        if not 0 <= n <= self.depth:
            raise UsageError(
                "Level {0} is above the quadrature depth {1}.".format(n, self.depth))
        return CylinderValues(n, level_averages(self.quadrature_values(), n))

    def coefficients(self, k):
        if not 0 <= k < self.depth:
            raise UsageError(
                "Level {0} requires a quadrature depth > {0} not {1}.".format(k, self.depth))
        avg = level_averages(self.quadrature_values(), k + 1)
        return avg[0::2] - avg[1::2]

    def coefficient_sup_bound(self, k):
        return self.lip * self.model.a(k)

    def approximation_error(self, n):
        if n > self.depth:
            raise UsageError(
                "Level {0} is above the quadrature depth {1}.".format(n, self.depth))
        return self.lip * (self.model.a(self.depth) + self.model.a(self.horizon))

    def sup_error(self, m):
        return self.lip * self.model.a(m)

    def weighted_tail(self, n, model=None, start=None):
        if model is not None and model != self.model:
            raise UsageError(
                "The Lipschitz constant was given for {0!r} not for {1!r}.".format(
                    self.model, model))
        return self.lip * self.model.tail_sum_bound(n, start=start)

    def shift(self, c):
        func = self.func
        return EvaluatorPotential(lambda p: func(p) + c, self.lip, self.model,
                                  self.depth, horizon=self.horizon, name=self.name)

    def scale(self, lam):
        if not lam > 0:
            raise UsageError("lam must be positive not {0}.".format(lam))
        func = self.func
        return EvaluatorPotential(lambda p: func(p) * lam, self.lip * lam, self.model,
                                  self.depth, horizon=self.horizon, name=self.name)

    def describe(self):
        return dict(representation=self.representation, name=self.name, lip=self.lip,
                    model=self.model.to_json(), depth=self.depth, horizon=self.horizon)

    def __repr__(self):
        return "EvaluatorPotential({0!r}, lip={1!r}, depth={2})".format(
            self.name, self.lip, self.depth)


def approximation_An(f, n):
    """
    Level-*n* approximation ``A_n f``, average of *f*
    on every cylinder of level *n*.

    @param      f       @see cl Potential
    @param      n       level
    @return             @see cl CylinderValues
    """
    return f.cylinder_values(n)


def coefficient_sup_bound(f, k):
    """
    Certified upper bound of ``max_{|w| = k} |c_w(f)|``:
    exact for step functions, ``LIP a_k`` for evaluators.
    """
    if k < 0:
        raise UsageError("k must be non negative not {0}.".format(k))
    return f.coefficient_sup_bound(k)


def potential_from_json(data):
    """
    Restores a step potential serialized with ``to_json``.
    Evaluators cannot be serialized, see
    :mod:`shift_locking.data.potentials` for named ones.
    """
    if not isinstance(data, dict):
        raise UsageError("Unable to read a potential from {0!r}.".format(data))
    kind = data.get('kind', None)
    if kind == StepTable.representation:
        return StepTable(HaarTable.from_json(data))
    if kind == CylinderValues.representation:
        if 'level' not in data or 'values' not in data:
            raise UsageError("cylinder-values needs 'level' and 'values'.")
        return CylinderValues(data['level'], data['values'])
    raise UsageError("Unknown potential kind {0!r}.".format(kind))
