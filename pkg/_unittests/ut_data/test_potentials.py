# -*- coding: utf-8 -*-
"""
@brief      test log(time=1s)
"""
import unittest
import numpy
from pyquickhelper.pycode import ExtTestCase
from shift_locking.exc import UsageError
from shift_locking.symbolic import DecayModel, variation_of_step_table
from shift_locking.haar import CylinderValues, StepTable, EvaluatorPotential
from shift_locking.data import (
    indicator_of_zero, constant_potential, haar_tie, unit_step_table,
    random_step_table, binary_expansion, signed_symbols, named_potential)


class TestPotentials(ExtTestCase):

    def test_step_potentials(self):
        self.assertEqualArray(indicator_of_zero().values, numpy.array([1., 0.]))
        self.assertEqualArray(constant_potential(2., level=2).values, numpy.full(4, 2.))
        tie = haar_tie()
        self.assertIsInstance(tie, StepTable)
        self.assertEqualArray(tie.values, numpy.array([0.5, -0.5, -0.5, 0.5]))
        unit = unit_step_table(3)
        for k in range(3):
            self.assertEqualArray(unit.coefficients(k), numpy.ones(1 << k))
        self.assertEqual(unit.constant_term(), 0.)

    def test_random_step_table(self):
        f1 = random_step_table(4, seed=1, scale=2.)
        f2 = random_step_table(4, seed=1, scale=2.)
        self.assertIsInstance(f1, CylinderValues)
        self.assertEqualArray(f1.values, f2.values)
        self.assertLessEqual(numpy.abs(f1.values).max(), 2.)

    def test_binary_expansion(self):
        f = binary_expansion(depth=8)
        self.assertEqual(f.lip, 1.)
        self.assertEqual(f.model, DecayModel.geometric(0.5))
        self.assertRaise(lambda: binary_expansion(DecayModel.theta(1., 0.2)), UsageError)

    def test_signed_symbols_lipschitz(self):
        model = DecayModel.theta(1., 0.3)
        f = signed_symbols(model, depth=10)
        values = f.quadrature_values()
        for n in range(0, 8):
            self.assertLessEqual(variation_of_step_table(values, n),
                                 f.lip * model.a(n) + 1e-12)
        self.assertAlmostEqual(values[0], sum(model.a(i) for i in range(1, 65)),
                               delta=1e-12)

    def test_named_potential(self):
        self.assertEqualArray(named_potential("indicator_of_zero").values,
                              numpy.array([1., 0.]))
        self.assertEqualArray(named_potential("constant", c=3., level=1).values,
                              numpy.array([3., 3.]))
        f = named_potential("signed_symbols", depth=6,
                            model=dict(kind="theta-superexponential", A=1., theta=0.2))
        self.assertIsInstance(f, EvaluatorPotential)
        self.assertEqual(f.depth, 6)
        self.assertRaise(lambda: named_potential("unknown"), UsageError, "Unknown")
        self.assertRaise(lambda: named_potential("constant", level="a", d=1), UsageError)


if __name__ == "__main__":
    unittest.main()
