# -*- coding: utf-8 -*-
"""
@brief      test log(time=2s)
"""
import unittest
from pyquickhelper.pycode import ExtTestCase
from shift_locking.exc import UsageError, ModelError, ResourceError
from shift_locking.symbolic import DecayModel, PeriodicPoint
from shift_locking.haar import EvaluatorPotential
from shift_locking.data import (
    indicator_of_zero, constant_potential, haar_tie, random_step_table, signed_symbols)
from shift_locking.certify import (
    tail_majorant, certify_at_level, find_locking_level, LockingNotFound)


class TestLocking(ExtTestCase):

    def setUp(self):
        self.model = DecayModel.theta(1., 0.2)

    def test_tail_majorant(self):
        self.assertEqual(tail_majorant(indicator_of_zero(), self.model, 1), 0.)
        f = EvaluatorPotential(lambda p: 0., 2., self.model, 6)
        self.assertAlmostEqual(tail_majorant(f, self.model, 2),
                               2 * 0.2 ** 3 / 0.992 ** 2, delta=1e-15)
        self.assertAlmostEqual(tail_majorant(f, self.model, 2), 1.6259e-2, delta=1e-6)
        self.assertRaise(lambda: tail_majorant(f, self.model, 0), UsageError)
        # the table f has coefficients at levels 0 and 1
        g = haar_tie()
        self.assertEqual(tail_majorant(g, self.model, 1), 1.)
        self.assertEqual(tail_majorant(g, self.model, 2), 0.)

    def test_indicator(self):
        cert = certify_at_level(indicator_of_zero(), self.model, 1)
        self.assertTrue(cert.certified)
        self.assertEqual(cert.gap_value, 1.)
        self.assertEqual(cert.tail_bound, 0.)
        self.assertEqual(cert.margin, 1.)
        self.assertEqual(cert.orbit, PeriodicPoint("0"))
        data = cert.to_json()
        self.assertEqual(data['status'], "certified")
        self.assertEqual(data['orbit'], "0")
        self.assertEqual(data['measure'], dict(kind="periodic", period=1, weight=1.,
                                               support=["0"]))
        self.assertEqual(data['provenance']['theta_regime'], "prevalence")

        logs = []
        cert = find_locking_level(indicator_of_zero(), self.model, 4, fLOG=logs.append)
        self.assertTrue(cert.certified)
        self.assertEqual(cert.level, 1)
        self.assertEqual(cert.orbit.to_json(), "0")
        self.assertEqual(len(cert.trace), 1)
        self.assertEqual(cert.trace_dataframe().shape, (1, 4))
        self.assertEqual(len(logs), 1)

    def test_tie(self):
        res = certify_at_level(haar_tie(), self.model, 2)
        self.assertFalse(res.certified)
        self.assertTrue(res.tie)
        self.assertEqual(res.gap_value, 0.)
        self.assertEqual(res.to_json()['status'], "criterion-failed")
        res = certify_at_level(haar_tie(), self.model, 1)
        self.assertFalse(res.certified)
        self.assertEqual(res.deficit, 1.)

    def test_constant(self):
        res = certify_at_level(constant_potential(2.), self.model, 3)
        self.assertFalse(res.certified)
        self.assertEqual(res.gap_value, 0.)
        res = find_locking_level(constant_potential(2.), self.model, 4)
        self.assertIsInstance(res, LockingNotFound)
        self.assertFalse(res.certified)
        df = res.trace_dataframe()
        self.assertEqual(list(df['level']), [1, 2, 3, 4])
        self.assertEqual(list(df['gap']), [0.] * 4)
        self.assertEqual(res.to_json()['status'], "not-found")

    def test_errors(self):
        f = indicator_of_zero()
        self.assertRaise(lambda: certify_at_level(f, self.model, 0), UsageError)
        self.assertRaise(lambda: find_locking_level(f, self.model, 0), UsageError)
        self.assertRaise(lambda: find_locking_level(f, self.model, 30), ResourceError)
        e = EvaluatorPotential(lambda p: 0., 1., self.model, 4)
        self.assertRaise(lambda: certify_at_level(e, self.model, 5), UsageError, "quadrature")
        huge = DecayModel.table([1.7e308, 1.6e308], 0.9)
        self.assertRaise(lambda: certify_at_level(f, huge, 1), ModelError, "summable")
        self.assertRaise(lambda: find_locking_level(f, huge, 2), ModelError)

    def test_constant_invariance(self):
        for seed in range(20):
            f = random_step_table(3, seed=seed)
            g = f.shift(3.25)
            for n in range(1, 4):
                r1 = certify_at_level(f, self.model, n)
                r2 = certify_at_level(g, self.model, n)
                self.assertAlmostEqual(r1.gap_value, r2.gap_value, delta=1e-12)
                self.assertAlmostEqual(r1.tail_bound, r2.tail_bound, delta=1e-12)
                self.assertEqual(r1.certified, r2.certified)
                if r1.certified:
                    self.assertEqual(r1.orbit, r2.orbit)

    def test_scaling(self):
        for seed in range(20):
            f = random_step_table(3, seed=seed)
            cert = find_locking_level(f, self.model, 3)
            self.assertTrue(cert.certified)
            for lam in [0.01, 0.5, 7.]:
                res = certify_at_level(f.scale(lam), self.model, cert.level)
                self.assertTrue(res.certified)
                self.assertEqual(res.orbit, cert.orbit)

    def test_monotone_in_tail(self):
        f = random_step_table(4, seed=1)
        for n in range(1, 5):
            r1 = certify_at_level(f, self.model, n)
            r2 = certify_at_level(f, self.model, n, slack=0.5)
            if r2.certified:
                self.assertTrue(r1.certified)

    def test_evaluator(self):
        f = signed_symbols(self.model, depth=10)
        cert = find_locking_level(f, self.model, 4)
        self.assertTrue(cert.certified)
        self.assertEqual(cert.level, 1)
        self.assertEqual(cert.orbit, PeriodicPoint("0"))
        self.assertEqual(cert.provenance['lip'], f.lip)
        self.assertEqual(cert.provenance['potential']['name'], "signed_symbols")
        self.assertGreaterEqual(cert.tail_bound, tail_majorant(f, self.model, 1))


if __name__ == "__main__":
    unittest.main()
