# -*- coding: utf-8 -*-
"""
@brief      test log(time=2s)
"""
import math
import unittest
from hypothesis import given, settings, assume
from hypothesis import strategies as st
from pyquickhelper.pycode import ExtTestCase
from shift_locking.exc import ModelError, UsageError
from shift_locking.symbolic import DecayModel, metric_d_a


def weighted_partial_sum(model, n, terms):
    return math.fsum((k - n + 1) * model.a(k) for k in range(n, n + terms))


class TestDecay(ExtTestCase):

    def test_theta_values(self):
        model = DecayModel.theta(1., 0.2)
        self.assertAlmostEqual(model.a(0), 1.)
        self.assertAlmostEqual(model.a(3) / 6.4e-5, 1., places=12)
        for n in range(0, 15):
            self.assertLess(model.a(n + 1), model.a(n))
            self.assertAlmostEqual(model.a(n + 1) / model.a(n) / 0.2 ** (n + 1), 1., places=10)

    def test_invalid_models(self):
        self.assertRaise(lambda: DecayModel.theta(1., 1.5), ModelError, "theta")
        self.assertRaise(lambda: DecayModel.theta(1., 1.), ModelError)
        self.assertRaise(lambda: DecayModel.theta(0., 0.2), ModelError, "Amplitude")
        self.assertRaise(lambda: DecayModel.table([1., 1.], 0.5), ModelError, "decreasing")
        self.assertRaise(lambda: DecayModel.table([1., 0.1], 1.), ModelError)
        self.assertRaise(lambda: DecayModel("other"), ModelError, "Unknown")
        self.assertRaise(lambda: DecayModel.theta().tail_sum_bound(0), UsageError)

    def test_tail_sum_bound_theta(self):
        model = DecayModel.theta(1., 0.2)
        bound = model.tail_sum_bound(1)
        self.assertAlmostEqual(bound, 0.2 / 0.96 ** 2)
        partial = weighted_partial_sum(model, 1, 20)
        self.assertAlmostEqual(partial, 0.216192, delta=1e-6)
        self.assertGreater(bound, partial)
        bound3 = model.tail_sum_bound(3)
        self.assertGreater(bound3, 6.4e-5)
        self.assertLess(bound3, 6.4e-5 * 1.01)

    def test_tail_sum_bound_table(self):
        model = DecayModel.table([1., 0.1], 0.1)
        self.assertAlmostEqual(model.a(3), 1e-3)
        bound = model.tail_sum_bound(2)
        partial = weighted_partial_sum(model, 2, 30)
        self.assertAlmostEqual(bound, 0.01 / 0.81, delta=1e-12)
        self.assertGreaterEqual(bound * (1 + 1e-12), partial)

    def test_tail_dominance(self):
        for model in [DecayModel.theta(1., 0.2), DecayModel.theta(2., 0.45),
                      DecayModel.table([1., 0.1], 0.1), DecayModel.table([1., 0.5, 0.3, 0.01], 0.2),
                      DecayModel.geometric(0.5)]:
            for n in range(1, 21):
                bound = model.tail_sum_bound(n)
                partial = weighted_partial_sum(model, n, 50)
                self.assertGreaterEqual(bound * (1 + 1e-12), partial)
                for start in range(n, n + 4):
                    partial = math.fsum((k - n + 1) * model.a(k)
                                        for k in range(start, start + 50))
                    self.assertGreaterEqual(
                        model.tail_sum_bound(n, start=start) * (1 + 1e-12), partial)
                plain = math.fsum(model.a(k) for k in range(n, n + 50))
                self.assertGreaterEqual(model.plain_tail_bound(n) * (1 + 1e-12), plain)

    def test_ratio(self):
        model = DecayModel.theta(1., 0.2)
        self.assertAlmostEqual(model.ratio(0), 0.2)
        self.assertAlmostEqual(model.ratio(2), 0.008)
        for model in [DecayModel.theta(2., 0.45), DecayModel.table([1., 0.5, 0.3, 0.01], 0.2),
                      DecayModel.geometric(0.5)]:
            for m in range(0, 10):
                r = model.ratio(m)
                self.assertLess(r, 1)
                for k in range(m, m + 20):
                    self.assertLesser(model.a(k + 1), r * model.a(k) * (1 + 1e-12))
        table = DecayModel.table([1., 0.5, 0.3, 0.01], 0.2)
        self.assertAlmostEqual(table.ratio(0), 0.6)
        self.assertAlmostEqual(table.ratio(2), 0.2)
        self.assertAlmostEqual(table.ratio(5), 0.2)

    def test_summability(self):
        model = DecayModel.theta(1., 0.2)
        self.assertAlmostEqual(model.summability(), 0.2 / 0.96 ** 2)
        partial = math.fsum(n * model.a(n) for n in range(1, 30))
        self.assertGreaterEqual(model.summability() * (1 + 1e-12), partial)
        model = DecayModel.table([1., 0.1], 0.1)
        partial = math.fsum(n * model.a(n) for n in range(1, 60))
        self.assertGreaterEqual(model.summability() * (1 + 1e-12), partial)
        huge = DecayModel.table([1.7e308, 1.6e308], 0.9)
        self.assertTrue(math.isinf(huge.summability()))

    def test_theta_regime(self):
        self.assertEqual(DecayModel.theta(1., 0.2).theta_regime(), 'prevalence')
        self.assertEqual(DecayModel.theta(1., 0.3).theta_regime(), 'conditional-only')
        self.assertEqual(DecayModel.theta(1., 0.6).theta_regime(), 'none')
        self.assertEqual(DecayModel.geometric(0.5).theta_regime(), 'unspecified')

    def test_json(self):
        model = DecayModel.theta(1., 0.2)
        self.assertEqual(model.to_json(), {'kind': 'theta-superexponential', 'A': 1., 'theta': 0.2})
        self.assertEqual(DecayModel.from_json(model.to_json()), model)
        table = DecayModel.table([1., 0.1], 0.1)
        self.assertEqual(DecayModel.from_json(table.to_json()), table)
        self.assertRaise(lambda: DecayModel.from_json({'A': 1}), ModelError)

    def test_metric(self):
        half = DecayModel.geometric(0.5)
        d = metric_d_a(half, "0111", "0000")
        self.assertEqual(d.value, 0.25)
        self.assertFalse(d.upper_bound)
        d = metric_d_a(half, "0", "0")
        self.assertTrue(d.upper_bound)
        self.assertEqual(d.value, 0.25)
        d = metric_d_a(DecayModel.theta(1., 0.2), "001", "000")
        self.assertAlmostEqual(d.value / 6.4e-5, 1., places=12)
        self.assertRaise(lambda: metric_d_a(half, "01", "0"), UsageError)

    @given(st.integers(min_value=1, max_value=8).flatmap(
        lambda m: st.tuples(*[st.text(alphabet="01", min_size=m, max_size=m)] * 3)))
    @settings(max_examples=1000)
    def test_ultrametric(self, xyz):
        x, y, z = xyz
        assume(len({x, y, z}) == 3)
        model = DecayModel.theta(1., 0.2)
        dxy = metric_d_a(model, x, y).value
        dyz = metric_d_a(model, y, z).value
        dxz = metric_d_a(model, x, z).value
        self.assertLessEqual(dxz, max(dxy, dyz))
        self.assertEqual(dxy, metric_d_a(model, y, x).value)


if __name__ == "__main__":
    unittest.main()
