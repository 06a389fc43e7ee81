# -*- coding: utf-8 -*-
"""
@brief      test log(time=1s)
"""
import os
import unittest
import numpy
from pyquickhelper.pycode import ExtTestCase, get_temp_folder
from shift_locking.exc import UsageError
from shift_locking.graph import (
    build_graph, graph_to_json, read_graph_json, write_graph_json, max_mean_cycle_karp)
from shift_locking.io import dumps_artifact


class TestGraphIO(ExtTestCase):

    def test_write_read(self):
        temp = get_temp_folder(__file__, "temp_graph_io")
        g = build_graph(3).with_weights(numpy.linspace(-1, 1, 8))
        name = os.path.join(temp, "bg3.json")
        write_graph_json(g, name)
        back = read_graph_json(name)
        self.assertEqual(back.n_vertices, 4)
        self.assertEqualArray(back.tails, g.tails)
        self.assertEqualArray(back.heads, g.heads)
        self.assertEqualArray(back.weights, g.weights)
        self.assertEqual(back.arc_label(2), "010")
        self.assertEqual(max_mean_cycle_karp(back).witness_cycle.to_json(),
                         max_mean_cycle_karp(g).witness_cycle.to_json())

    def test_to_json_method(self):
        g = build_graph(2).with_weights([1., 0., 0.5, -1.])
        data = g.to_json()
        self.assertEqual(data, graph_to_json(g))
        self.assertEqual(data['n_vertices'], 2)
        self.assertEqual(data['arcs'][1], dict(tail=0, head=1, weight=0., label="01"))
        self.assertNotIn('label', g.to_json(labels=False)['arcs'][0])
        back = read_graph_json(dumps_artifact(data))
        self.assertEqualArray(back.weights, g.weights)
        self.assertEqual(back.arc_label(3), "11")

    def test_read_string(self):
        text = dumps_artifact(dict(n_vertices=2, arcs=[
            dict(tail=0, head=1, weight=3), dict(tail=1, head=0, weight=1.)]))
        logs = []
        g = read_graph_json(text, fLOG=logs.append)
        self.assertEqual(g.n_arcs, 2)
        self.assertEqual(g.arc_label(1), "1")
        self.assertEqual(max_mean_cycle_karp(g).max_mean, 2.)
        self.assertIn("n_arcs=2", logs[0])
        g = read_graph_json(text.encode("utf-8"))
        self.assertEqual(graph_to_json(g, labels=False)['arcs'][0],
                         dict(tail=0, head=1, weight=3.))

    def test_malformed(self):
        self.assertRaise(lambda: read_graph_json("{"), UsageError)
        self.assertRaise(lambda: read_graph_json('{"arcs": []}'), UsageError, "n_vertices")
        self.assertRaise(lambda: read_graph_json('{"n_vertices": "2", "arcs": []}'),
                         UsageError, "n_vertices")
        self.assertRaise(lambda: read_graph_json('{"n_vertices": 2, "arcs": []}'),
                         UsageError, "no arc")
        self.assertRaise(
            lambda: read_graph_json('{"n_vertices": 2, "arcs": [{"tail": 0, "head": 1}]}'),
            UsageError, "Malformed arc")
        self.assertRaise(
            lambda: read_graph_json(
                '{"n_vertices": 2, "arcs": [{"tail": 0, "head": 5, "weight": 1}]}'),
            UsageError, "outside")
        self.assertRaise(
            lambda: read_graph_json(
                '{"n_vertices": 2, "arcs": [{"tail": 0, "head": 1, "weight": "a"}]}'),
            UsageError)
        self.assertRaise(
            lambda: read_graph_json(
                '{"n_vertices": 2, "arcs": [{"tail": 1.5, "head": 1, "weight": 1}]}'),
            UsageError, "integers")
        g = read_graph_json(
            '{"n_vertices": 2, "arcs": [{"tail": 1.0, "head": 1, "weight": 1}]}')
        self.assertEqual(g.tails.tolist(), [1])


if __name__ == "__main__":
    unittest.main()
