# -*- coding: utf-8 -*-
"""
@file
@brief Weighted digraph interchange format
``{"n_vertices": V, "arcs": [{"tail": t, "head": h, "weight": w, "label": l}]}``.
"""
import io
import ijson
from ..exc import UsageError
from ..io.json_io import dumps_artifact
from .debruijn import WeightedDigraph


def graph_to_json(graph, labels=True):
    """
    Converts a graph into the interchange format.

    @param      graph       @see cl WeightedDigraph
    @param      labels      adds arc labels
    @return                 dictionary
    """
    arcs = []
    for a in range(graph.n_arcs):
        arc = dict(tail=int(graph.tails[a]), head=int(graph.heads[a]),
                   weight=float(graph.weights[a]))
        if labels:
            arc['label'] = graph.arc_label(a)
        arcs.append(arc)
    return dict(n_vertices=graph.n_vertices, arcs=arcs)


def write_graph_json(graph, filename, labels=True):
    """
    Writes a graph into a file with the interchange format.
    """
    with open(filename, "w", encoding="utf-8") as f:
        f.write(dumps_artifact(graph_to_json(graph, labels=labels)))


def _open(source):
    if isinstance(source, str):
        if source.lstrip().startswith("{"):
            return io.BytesIO(source.encode("utf-8"))
        return open(source, "rb")
    if isinstance(source, bytes):
        return io.BytesIO(source)
    return source


def read_graph_json(source, fLOG=None):
    """
    Reads a graph stored with the interchange format.
    The file is parsed in streaming with :epkg:`ijson`,
    once for the number of vertices, once for the arcs.

    @param      source      filename, JSON string or bytes
    @param      fLOG        logging function
    @return                 @see cl WeightedDigraph
    """
    try:
        with _open(source) as f:
            found = list(ijson.items(f, 'n_vertices'))
        if len(found) != 1 or not isinstance(found[0], int):
            raise UsageError("'n_vertices' is missing or is not an integer.")
        n_vertices = found[0]
        tails, heads, weights, labels = [], [], [], []
        with _open(source) as f:
            for arc in ijson.items(f, 'arcs.item', use_float=True):
                if not isinstance(arc, dict) or any(
                        k not in arc for k in ('tail', 'head', 'weight')):
                    raise UsageError("Malformed arc {0!r}.".format(arc))
                tails.append(arc['tail'])
                heads.append(arc['head'])
                weights.append(arc['weight'])
                labels.append(arc.get('label', str(len(labels))))
    except ijson.JSONError as e:
        raise UsageError("Malformed graph JSON: {0}".format(e)) from e
    if len(tails) == 0:
        raise UsageError("The graph has no arc, 'arcs' is missing or empty.")
    if fLOG:
        fLOG("[read_graph_json] n_vertices={0} n_arcs={1}".format(
            n_vertices, len(tails)))
    try:
        return WeightedDigraph(n_vertices, tails, heads, weights, labels=labels)
    except (TypeError, ValueError) as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError("Malformed graph JSON: {0}".format(e)) from e
