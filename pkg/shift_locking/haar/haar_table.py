# -*- coding: utf-8 -*-
"""
@file
@brief Haar functions ``h_w = (1_[w0] - 1_[w1]) / 2`` on the full shift
and finite tables of Haar coefficients.
"""
import numpy
from ..exc import UsageError
from ..symbolic import Word
from ..symbolic.variation import step_values_to_array


class HaarIndex:
    """
    Index *w* of the Haar function ``h_w``.
    The empty word indexes ``h_∅`` which is supported
    on the whole space.
    """

    def __init__(self, word=""):
        self.word = Word(word)

    def evaluate(self, x_prefix):
        "See @see fn haar_evaluate."
        return haar_evaluate(self, x_prefix)

    def __repr__(self):
        return "HaarIndex({0!r})".format(str(self.word))


def haar_evaluate(index, x_prefix):
    """
    Evaluates ``h_w(x)``.

    @param      index       @see cl HaarIndex or @see cl Word
    @param      x_prefix    prefix of *x*, it must be longer than *w*
    @return                 ``0.5`` if ``x ∈ [w0]``, ``-0.5`` if ``x ∈ [w1]``,
                            ``0`` outside ``[w]``
    """
    w = index.word if isinstance(index, HaarIndex) else Word(index)
    x = Word(x_prefix)
    if len(x) <= len(w):
        raise UsageError(
            "A prefix of length {0} cannot decide h_{1}.".format(len(x), w))
    if not x.starts_with(w):
        return 0.
    return 0.5 if x[len(w)] == 0 else -0.5


class HaarTable:
    """
    Finite Haar expansion ``f = c_∅ + Σ_{|w| < L} c_w h_w``
    of a step function of level *L*.
    Coefficients are stored level by level:
    ``levels[k][i]`` is the coefficient of ``h_w`` where *w*
    is the word of length *k* with lexicographic index *i*.
    The coefficient of the empty word (``levels[0][0]``)
    is ``4 ∫ f h_∅ dβ`` and is distinct from the constant term
    ``∫ f dβ``.
    """

    def __init__(self, constant_term, levels):
        """
        @param      constant_term   ``∫ f dβ``
        @param      levels          list of *L* arrays, the k-th one has ``2^k`` values
        """
        self.constant_term = float(constant_term)
        checked = []
        for k, lev in enumerate(levels):
            arr = numpy.asarray(lev, dtype=numpy.float64).ravel()
            if arr.shape[0] != (1 << k):
                raise UsageError(
                    "Level {0} must have {1} coefficients not {2}.".format(
                        k, 1 << k, arr.shape[0]))
            arr.flags.writeable = False
            checked.append(arr)
        self.levels = tuple(checked)

    @property
    def max_level(self):
        "Coefficients vanish for words of length >= max_level."
        return len(self.levels)

    @staticmethod
    def from_dict(constant_term, coeffs, max_level=None):
        """
        Builds a table from a dictionary ``{word: coefficient}``.

        @param      constant_term   constant term
        @param      coeffs          dictionary, keys are @see cl Word or strings
        @param      max_level       level of the step function, inferred if None
        @return                     @see cl HaarTable
        """
        words = {Word(k): float(v) for k, v in coeffs.items()}
        needed = max([len(w) + 1 for w in words] + [0])
        if max_level is None:
            max_level = needed
        elif max_level < needed:
            raise UsageError(
                "max_level={0} but a coefficient needs level {1}.".format(max_level, needed))
        levels = [numpy.zeros(1 << k) for k in range(max_level)]
        for w, c in words.items():
            levels[len(w)][w.to_int()] = c
        return HaarTable(constant_term, levels)

    def level(self, k):
        "Coefficients of level *k* (zeros above max_level)."
        if k < self.max_level:
            return self.levels[k]
        return numpy.zeros(1 << k)

    def level_max(self, k):
        "Returns ``max_{|w| = k} |c_w|``."
        if k >= self.max_level:
            return 0.
        return float(numpy.abs(self.levels[k]).max())

    def coefficient(self, word):
        "Returns ``c_w``."
        w = Word(word)
        if len(w) >= self.max_level:
            return 0.
        return float(self.levels[len(w)][w.to_int()])

    @property
    def coefficients(self):
        "Dictionary ``{Word: coefficient}`` of the non null coefficients."
        res = {}
        for k, lev in enumerate(self.levels):
            for i in numpy.nonzero(lev)[0]:
                res[Word.from_int(int(i), k)] = float(lev[i])
        return res

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(constant=self.constant_term,
                    coeffs=[dict(w=str(w), c=c)
                            for w, c in sorted(self.coefficients.items())],
                    max_level=self.max_level)

    @staticmethod
    def from_json(data):
        "Restores a table serialized by @see me to_json."
        try:
            coeffs = {d['w']: d['c'] for d in data.get('coeffs', [])}
            return HaarTable.from_dict(data['constant'], coeffs, data.get('max_level'))
        except (KeyError, TypeError, AttributeError) as e:
            raise UsageError("Unable to read a Haar table: {0}".format(e)) from e

    def __repr__(self):
        return "HaarTable({0!r}, max_level={1})".format(self.constant_term, self.max_level)


def level_averages(values, k):
    """
    Averages of a step function on the ``2^k`` cylinders of level *k*.
    """
    return values.reshape((1 << k, -1)).mean(axis=1)


def coefficients_from_cylinder_values(level, values):
    """
    Computes the Haar expansion of a step function.

    @param      level       *m*
    @param      values      ``2^m`` values (lexicographic order) or a
                            dictionary ``{word: value}``
    @return                 @see cl HaarTable with ``max_level == m``

    The coefficient of ``h_w`` is the average of *f* over ``[w0]``
    minus its average over ``[w1]``.
    """
    arr, m = step_values_to_array(values)
    if m != level:
        raise UsageError(
            "{0} values do not describe a step function of level {1}.".format(
                arr.shape[0], level))
    levels = []
    for k in range(m):
        avg = level_averages(arr, k + 1)
        levels.append(avg[0::2] - avg[1::2])
    return HaarTable(arr.mean(), levels)


def reconstruct(table, level=None):
    """
    Values of the step function described by a Haar table.

    @param      table       @see cl HaarTable
    @param      level       level of the output, at least ``table.max_level``
    @return                 array of ``2^level`` values
    """
    L = table.max_level if level is None else level
    if L < table.max_level:
        raise UsageError(
            "Level {0} is below the table level {1}.".format(L, table.max_level))
    values = numpy.full(1 << L, table.constant_term)
    for k, lev in enumerate(table.levels):
        sign = numpy.repeat([0.5, -0.5], 1 << (L - k - 1))
        values += (lev[:, numpy.newaxis] * sign[numpy.newaxis, :]).ravel()
    return values
