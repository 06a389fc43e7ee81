# -*- coding: utf-8 -*-
"""
@file
@brief Exact binomial (Clopper–Pearson) confidence bounds.
"""
from scipy.stats import beta
from ..exc import UsageError


def clopper_pearson_upper(k, T, confidence=0.99):
    """
    One-sided upper confidence bound on a probability
    estimated with *k* successes among *T* trials.

    @param      k           number of events
    @param      T           number of trials
    @param      confidence  confidence level
    @return                 float in ``[0, 1]``, 1 if ``k == T``
    """
    if T < 0 or not 0 <= k <= T:
        raise UsageError("Unexpected counts k={0} T={1}.".format(k, T))
    if k == T:
        return 1.
    return float(beta.ppf(confidence, k + 1, T - k))


def clopper_pearson_lower(k, T, confidence=0.99):
    """
    One-sided lower confidence bound, 0 if ``k == 0``.
    """
    if T < 0 or not 0 <= k <= T:
        raise UsageError("Unexpected counts k={0} T={1}.".format(k, T))
    if k == 0:
        return 0.
    return float(beta.ppf(1 - confidence, k, T - k + 1))
