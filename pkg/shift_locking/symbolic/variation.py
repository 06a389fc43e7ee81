# -*- coding: utf-8 -*-
"""
@file
@brief Variation of a step function.
"""
import math
import numpy
from ..exc import UsageError
from .words import Word


def step_values_to_array(values):
    """
    Converts a table of values of a step function into
    an array indexed by the lexicographic order of the words.

    @param      values      :epkg:`numpy` array of size ``2^m`` or
                            dictionary ``{word: value}`` covering
                            every word of length *m*
    @return                 array, level *m*
    """
    if isinstance(values, dict):
        if len(values) == 0:
            raise UsageError("The table of values is empty.")
        words = [Word(k) for k in values]
        m = len(words[0])
        if any(len(w) != m for w in words):
            raise UsageError("All words must have the same length.")
        arr = numpy.full(1 << m, numpy.nan)
        for w, v in zip(words, values.values()):
            arr[w.to_int()] = v
        if numpy.isnan(arr).any():
            raise UsageError(
                "Incomplete table: {0} words of length {1} instead of {2}.".format(
                    len(values), m, 1 << m))
        return arr, m
    arr = numpy.asarray(values, dtype=numpy.float64).ravel()
    m = int(round(math.log2(arr.shape[0]))) if arr.shape[0] > 0 else -1
    if m < 0 or (1 << m) != arr.shape[0]:
        raise UsageError(
            "Incomplete table: {0} is not a power of two.".format(arr.shape[0]))
    return arr, m


def variation_of_step_table(values_at_level_m, n):
    """
    Computes ``var_n(f) = sup_{x † y > n} |f(x) - f(y)|``
    for a step function of level *m*, the maximum difference
    between values of words sharing their first *n* symbols.

    @param      values_at_level_m   see @see fn step_values_to_array
    @param      n                   integer in ``[0, m]``
    @return                         float, ``var_0`` is the oscillation
    """
    arr, m = step_values_to_array(values_at_level_m)
    if not 0 <= n <= m:
        raise UsageError("n={0} must be in [0, {1}].".format(n, m))
    blocks = arr.reshape((1 << n, -1))
    return float((blocks.max(axis=1) - blocks.min(axis=1)).max())
