# -*- coding: utf-8 -*-
"""
@file
@brief Standard potentials, mostly for unit test purposes.
"""
import numpy
from ..exc import UsageError
from ..symbolic import DecayModel
from ..haar import HaarTable, StepTable, CylinderValues, EvaluatorPotential


def indicator_of_zero():
    """
    Returns ``f = 1_[0]``, its unique maximizing measure
    is the Dirac mass at ``000...``.
    """
    return CylinderValues(1, [1., 0.])


def constant_potential(c=0., level=1):
    """
    Returns a constant potential, every cycle has the same mean-weight.
    """
    return CylinderValues(level, numpy.full(1 << level, float(c)))


def haar_tie():
    """
    Returns ``h_0 - h_1``: the fixed points ``000...`` and ``111...``
    both maximize it.
    """
    return StepTable(HaarTable.from_dict(0., {"0": 1., "1": -1.}))


def unit_step_table(level=2):
    """
    Returns the step function of level *level* whose Haar coefficients
    are all equal to 1 and whose constant term is null.
    """
    return StepTable(HaarTable(0., [numpy.ones(1 << k) for k in range(level)]))


def random_step_table(level, seed=0, scale=1.):
    """
    Returns a step function of level *level* with values drawn
    uniformly in ``[-scale, scale]``.

    @param      level       level
    @param      seed        seed
    @param      scale       amplitude
    @return                 @see cl CylinderValues
    """
    rnd = numpy.random.RandomState(seed)  # pylint: disable=E1101
    return CylinderValues(level, rnd.uniform(-scale, scale, 1 << level))


def binary_expansion(model=None, depth=10, horizon=64):
    """
    Returns the evaluator ``f(x) = Σ_{i >= 1} 2^{-i} x_i``.
    With ``a_n = 2^{-n}``, ``var_n(f) = a_n`` and the Lipschitz
    constant is 1.

    @param      model       decay model, ``a_n = 2^{-n}`` if None
    @param      depth       quadrature depth
    @param      horizon     number of symbols given to the function
    @return                 @see cl EvaluatorPotential
    """
    if model is None:
        model = DecayModel.geometric(0.5)
    elif model != DecayModel.geometric(0.5):
        raise UsageError(
            "The Lipschitz constant of binary_expansion is only known for a_n = 2^-n.")

    def binary_expansion_value(prefix):
        return sum(x * 0.5 ** (i + 1) for i, x in enumerate(prefix))

    return EvaluatorPotential(binary_expansion_value, 1., model, depth,
                              horizon=horizon, name="binary_expansion")


def signed_symbols(model, depth=10, amplitude=1., max_n=20):
    """
    Returns the evaluator ``f(x) = A Σ_{i >= 1} a_i (1 - 2 x_i)``.
    Its variation satisfies ``var_n(f) <= 2 A Σ_{i > n} a_i``, the Lipschitz
    constant given to the evaluator is the maximum of
    ``2 A Σ_{i > n} a_i / a_n`` over ``n < max_n``, this ratio is
    nonincreasing for theta and geometric models.
    """
    lip = 2 * amplitude * max(model.plain_tail_bound(n + 1) / model.a(n)
                              for n in range(0, max_n))

    def signed_symbols_value(prefix):
        return amplitude * sum(model.a(i + 1) * (1 - 2 * x)
                               for i, x in enumerate(prefix))

    return EvaluatorPotential(signed_symbols_value, lip, model, depth,
                              name="signed_symbols")


_NAMED = {
    'indicator_of_zero': indicator_of_zero,
    'constant': constant_potential,
    'haar_tie': haar_tie,
    'unit_step_table': unit_step_table,
    'random_step_table': random_step_table,
    'binary_expansion': binary_expansion,
    'signed_symbols': signed_symbols,
}


def named_potential(name, **kwargs):
    """
    Returns a potential of this module given its name,
    *kwargs* are given to the function building it.
    """
    if name not in _NAMED:
        raise UsageError("Unknown potential {0!r}, expecting one of {1}.".format(
            name, list(sorted(_NAMED))))
    if isinstance(kwargs.get("model", None), dict):
        kwargs["model"] = DecayModel.from_json(kwargs["model"])
    try:
        return _NAMED[name](**kwargs)
    except TypeError as e:
        raise UsageError("Unexpected arguments for {0!r}: {1}".format(name, e)) from e
