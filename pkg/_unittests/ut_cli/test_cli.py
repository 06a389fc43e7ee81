# -*- coding: utf-8 -*-
"""
@brief      test log(time=5s)
"""
import os
import unittest
from pyquickhelper.pycode import ExtTestCase, get_temp_folder
from shift_locking.exc import UsageError
from shift_locking.io import dumps_artifact, load_json_file, SCHEMA_VERSION
from shift_locking.cli import main, parse_args, RunConfig


class TestCli(ExtTestCase):

    def _write(self, temp, name, params):
        filename = os.path.join(temp, name)
        with open(filename, "w", encoding="utf-8") as f:
            f.write(params if isinstance(params, str) else dumps_artifact(params))
        return filename

    def test_certify(self):
        temp = get_temp_folder(__file__, "temp_cli_certify")
        conf = self._write(temp, "indicator.json", dict(
            potential=dict(kind="cylinder-values", level=1, values=[1, 0]),
            model=dict(kind="theta-superexponential", A=1., theta=0.2),
            max_period=6))
        out = os.path.join(temp, "cert.json")
        self.assertEqual(main(["certify", "--config", conf, "--n-max", "4", "--out", out]), 0)
        data = load_json_file(out)
        self.assertEqual(data['schema'], SCHEMA_VERSION)
        self.assertEqual(data['kind'], "certify")
        self.assertEqual(data['status'], "certified")
        self.assertEqual(data['orbit'], "0")
        self.assertEqual(data['level'], 1)
        self.assertEqual(data['gap'], 1.)
        self.assertEqual(data['tail_bound'], 0.)
        self.assertTrue(data['soundness']['passed'])
        self.assertEqual(data['config']['params']['n_max'], 4)

        out2 = os.path.join(temp, "cert2.json")
        self.assertEqual(main(["certify", "--config", conf, "--n-max", "4", "--out", out2]), 0)
        with open(out, "rb") as f:
            b1 = f.read()
        with open(out2, "rb") as f:
            b2 = f.read()
        self.assertEqual(b1, b2)

    def test_certify_not_found(self):
        temp = get_temp_folder(__file__, "temp_cli_not_found")
        conf = self._write(temp, "constant.json", dict(
            potential=dict(kind="named", name="constant", args=dict(c=1.5))))
        out = os.path.join(temp, "res.json")
        self.assertEqual(main(["certify", "--config", conf, "--n-max", "4", "--out", out]), 3)
        data = load_json_file(out)
        self.assertEqual(data['status'], "not-found")
        self.assertEqual(len(data['trace']), 4)

    def test_mmc(self):
        temp = get_temp_folder(__file__, "temp_cli_mmc")
        graph = self._write(temp, "graph.json", dict(n_vertices=2, arcs=[
            dict(tail=0, head=1, weight=3.), dict(tail=1, head=0, weight=1.)]))
        out = os.path.join(temp, "mmc.json")
        self.assertEqual(main(["mmc", "--config", graph, "--out", out]), 0)
        data = load_json_file(out)
        self.assertEqual(data['max_mean'], 2.)
        self.assertIsNone(data['gap'])

        conf = self._write(temp, "conf.json", dict(graph="graph.json"))
        self.assertEqual(main(["mmc", "--config", conf, "--out", out]), 0)

        bad = self._write(temp, "bad.json", dict(graph='{"n_vertices": 2, "arcs": [{"tail": 0'))
        self.assertEqual(main(["mmc", "--config", bad, "--out", out]), 2)
        bad = self._write(temp, "bad2.json", dict(n_vertices=2, arcs=[dict(tail=0, head=1)]))
        self.assertEqual(main(["mmc", "--config", bad, "--out", out]), 2)
        bad = self._write(temp, "bad3.json", "{not json")
        self.assertEqual(main(["mmc", "--config", bad, "--out", out]), 2)
        missing = self._write(temp, "missing.json", dict(graph="nothere.json"))
        self.assertEqual(main(["mmc", "--config", missing, "--out", out]), 2)
        acyclic = self._write(temp, "acyclic.json", dict(n_vertices=2, arcs=[
            dict(tail=0, head=1, weight=1.)]))
        self.assertEqual(main(["mmc", "--config", acyclic, "--out", out]), 3)

    def test_gap_sample(self):
        temp = get_temp_folder(__file__, "temp_cli_gap")
        conf = self._write(temp, "gap.json", dict(
            potential=dict(kind="named", name="indicator_of_zero"), n=1))
        out = os.path.join(temp, "gap.json.out")
        self.assertEqual(main(["gap", "--config", conf, "--out", out]), 0)
        data = load_json_file(out)
        self.assertEqual(data['gap'], 1.)
        self.assertEqual(data['level'], 1)

        conf = self._write(temp, "big.json", dict(
            potential=dict(kind="named", name="indicator_of_zero"), n=30))
        self.assertEqual(main(["gap", "--config", conf, "--out", out]), 4)

        conf = self._write(temp, "sample.json", dict(level=3))
        self.assertEqual(main(["sample", "--config", conf, "--seed", "7", "--out", out]), 0)
        data = load_json_file(out)
        self.assertTrue(data['in_brick'])
        self.assertEqual(len(data['draws']), 7)
        self.assertEqual(data['seed'], 7)

    def test_experiment(self):
        temp = get_temp_folder(__file__, "temp_cli_experiment")
        conf = self._write(temp, "exp.json", dict(
            kind="conditional-gap", f0=dict(kind="named", name="constant"),
            n=3, epsilon=0.05, trials=200))
        out = os.path.join(temp, "exp.json.out")
        self.assertEqual(main(["experiment", "--config", conf, "--seed", "1",
                               "--threads", "2", "--out", out]), 0)
        data = load_json_file(out)
        self.assertEqual(data['kind'], "conditional-gap")
        self.assertEqual(len(data['rows']), 200)
        self.assertExists(os.path.join(temp, "exp.json.csv"))

        conf = self._write(temp, "huge.json", dict(
            kind="conditional-gap", f0=dict(kind="named", name="constant"),
            n=3, epsilon=0.05, trials=10 ** 7))
        self.assertEqual(main(["experiment", "--config", conf, "--out", out]), 4)
        conf = self._write(temp, "unknown.json", dict(
            kind="unknown", f0=dict(kind="named", name="constant")))
        self.assertEqual(main(["experiment", "--config", conf, "--out", out]), 2)

    def test_selftest(self):
        temp = get_temp_folder(__file__, "temp_cli_selftest")
        out = os.path.join(temp, "selftest.json")
        self.assertEqual(main(["selftest", "--out", out]), 0)
        data = load_json_file(out)
        self.assertTrue(all(c['passed'] for c in data['checks']))

    def test_parse_args(self):
        config = parse_args(["gap", "--seed", "3", "--threads", "2"])
        self.assertIsInstance(config, RunConfig)
        self.assertEqual(config.params['seed'], 3)
        self.assertEqual(config.threads, 2)
        self.assertEqual(main(["unknown"]), 2)
        self.assertEqual(main(["gap", "--config", "does_not_exist.json"]), 2)
        self.assertRaise(lambda: RunConfig("gap", threads=0), UsageError)
        self.assertRaise(lambda: RunConfig("gap", dict(n="a")).get_int('n'), UsageError)


if __name__ == "__main__":
    unittest.main()
