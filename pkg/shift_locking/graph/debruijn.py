# -*- coding: utf-8 -*-
"""
@file
@brief De Bruijn–Good digraphs ``BG_n`` and their weights
induced by the Haar coefficients of a potential.
"""
import math
import numpy
from ..exc import UsageError, ResourceError
from ..symbolic import Word, PeriodicPoint


def _as_vertices(values, name):
    """
    Converts *values* into an array of vertex indices,
    float values must be integers.
    """
    arr = numpy.asarray(values).ravel()
    if arr.size == 0:
        return arr.astype(numpy.int64)
    if arr.dtype.kind in 'iu':
        return arr.astype(numpy.int64)
    if arr.dtype.kind != 'f' or not numpy.isfinite(arr).all() or \
            (arr != numpy.floor(arr)).any():
        raise UsageError("{0} must be integers not {1!r}.".format(
            name, arr[:5].tolist()))
    return arr.astype(numpy.int64)


class WeightedDigraph:
    """
    Directed multigraph with real weights on the arcs.
    Vertices are ``0, ..., n_vertices - 1``, arcs are
    ``0, ..., n_arcs - 1``. The graph is immutable,
    @see me with_weights returns a new graph.

    For the de Bruijn–Good digraph ``BG_n`` (*n_level* is not None),
    arc *a* is the word of length *n* with lexicographic index *a*,
    its tail drops the last symbol (``a >> 1``) and its head
    drops the first one (``a & (2^{n-1} - 1)``).
    """

    def __init__(self, n_vertices, tails, heads, weights=None, labels=None, n_level=None):
        """
        @param      n_vertices  number of vertices
        @param      tails       tail of every arc
        @param      heads       head of every arc
        @param      weights     weights (zeros if None)
        @param      labels      optional labels (strings)
        @param      n_level     *n* for ``BG_n``, None for any other graph
        """
        tails = _as_vertices(tails, "tails")
        heads = _as_vertices(heads, "heads")
        if tails.shape != heads.shape:
            raise UsageError("tails and heads have different sizes {0} != {1}".format(
                tails.shape[0], heads.shape[0]))
        if n_vertices < 1:
            raise UsageError("A graph needs at least one vertex.")
        if tails.shape[0] > 0 and (
                min(tails.min(), heads.min()) < 0 or
                max(tails.max(), heads.max()) >= n_vertices):
            raise UsageError("An arc refers to a vertex outside [0, {0}).".format(n_vertices))
        if weights is None:
            weights = numpy.zeros(tails.shape[0])
        weights = numpy.array(weights, dtype=numpy.float64).ravel()
        if weights.shape != tails.shape:
            raise UsageError("Expecting {0} weights not {1}.".format(
                tails.shape[0], weights.shape[0]))
        if not numpy.isfinite(weights).all():
            raise UsageError("Weights must be finite.")
        if labels is not None:
            labels = tuple(str(lab) for lab in labels)
            if len(labels) != tails.shape[0]:
                raise UsageError("Expecting {0} labels not {1}.".format(
                    tails.shape[0], len(labels)))
        for arr in (tails, heads, weights):
            arr.flags.writeable = False
        self.n_vertices = int(n_vertices)
        self.tails = tails
        self.heads = heads
        self.weights = weights
        self.labels_ = labels
        self.n_level = n_level

    @property
    def n_arcs(self):
        "Number of arcs."
        return self.tails.shape[0]

    def arc_label(self, a):
        "Label of arc *a*, the arc word for ``BG_n``."
        if self.n_level is not None:
            return str(Word.from_int(int(a), self.n_level))
        if self.labels_ is not None:
            return self.labels_[a]
        return str(a)

    def with_weights(self, weights):
        "Returns the same graph with other weights."
        return WeightedDigraph(self.n_vertices, self.tails, self.heads, weights,
                               labels=self.labels_, n_level=self.n_level)

    def out_degrees(self):
        "Out-degree of every vertex."
        return numpy.bincount(self.tails, minlength=self.n_vertices)

    def in_degrees(self):
        "In-degree of every vertex."
        return numpy.bincount(self.heads, minlength=self.n_vertices)

    def to_networkx(self):
        """
        Converts the graph into a :epkg:`networkx` *MultiDiGraph*,
        every edge carries attributes *arc* and *weight*.
        """
        import networkx
        g = networkx.MultiDiGraph()
        g.add_nodes_from(range(self.n_vertices))
        for a in range(self.n_arcs):
            g.add_edge(int(self.tails[a]), int(self.heads[a]), key=a,
                       arc=a, weight=float(self.weights[a]))
        return g

    def to_json(self, labels=True):
        """
        Converts the graph into the interchange format
        read by @see fn read_graph_json.

        @param      labels      adds arc labels
        @return                 dictionary
        """
        from .graph_io import graph_to_json
        return graph_to_json(self, labels=labels)

    def is_strongly_connected(self):
        "Checks the graph is strongly connected with :epkg:`networkx`."
        import networkx
        return networkx.is_strongly_connected(self.to_networkx())

    def cycle_mean(self, cycle):
        "Mean weight of a @see cl DirectedCycle."
        return math.fsum(self.weights[a] for a in cycle.arcs) / len(cycle)

    def __repr__(self):
        if self.n_level is not None:
            return "WeightedDigraph(BG_{0})".format(self.n_level)
        return "WeightedDigraph(n_vertices={0}, n_arcs={1})".format(
            self.n_vertices, self.n_arcs)


class DirectedCycle:
    """
    Simple directed cycle given by its arcs in the order they
    are traversed. Arcs are arc indices of a @see cl WeightedDigraph,
    *labels* holds their labels (arc words for ``BG_n``).
    """

    def __init__(self, arcs, labels):
        self.arcs = tuple(int(a) for a in arcs)
        self.labels = tuple(labels)
        if len(self.arcs) == 0:
            raise UsageError("A cycle has at least one arc.")

    @staticmethod
    def from_arcs(graph, arcs):
        """
        Builds a cycle from arc indices and checks it is
        a simple directed cycle of *graph*.
        """
        arcs = [int(a) for a in arcs]
        if len(arcs) == 0:
            raise UsageError("A cycle has at least one arc.")
        if any(a < 0 or a >= graph.n_arcs for a in arcs):
            raise UsageError("Unknown arc in {0}.".format(arcs))
        for i, a in enumerate(arcs):
            b = arcs[(i + 1) % len(arcs)]
            if graph.heads[a] != graph.tails[b]:
                raise UsageError(
                    "Arc {0} does not end where arc {1} starts.".format(
                        graph.arc_label(a), graph.arc_label(b)))
        vertices = [int(graph.tails[a]) for a in arcs]
        if len(set(vertices)) != len(vertices):
            raise UsageError("The cycle {0} is not simple.".format(arcs))
        return DirectedCycle(arcs, [graph.arc_label(a) for a in arcs])

    def canonical(self):
        "Rotates the cycle so that the lowest arc comes first."
        i = self.arcs.index(min(self.arcs))
        return DirectedCycle(self.arcs[i:] + self.arcs[:i],
                             self.labels[i:] + self.labels[:i])

    def __len__(self):
        return len(self.arcs)

    def __eq__(self, other):
        return isinstance(other, DirectedCycle) and \
            self.canonical().arcs == other.canonical().arcs

    def __hash__(self):
        return hash(self.canonical().arcs)

    def __repr__(self):
        return "DirectedCycle({0!r})".format(list(self.labels))

    def to_json(self):
        "Returns the labels of the arcs."
        return list(self.labels)


def build_graph(n, max_level=24):
    """
    Builds the de Bruijn–Good digraph ``BG_n``:
    ``2^{n-1}`` vertices (words of length *n-1*),
    ``2^n`` arcs (words of length *n*), every weight is null.

    @param      n           level
    @param      max_level   resource guard
    @return                 @see cl WeightedDigraph
    """
    if n < 1:
        raise UsageError("n must be >= 1 not {0}.".format(n))
    if n > max_level:
        raise ResourceError("n", n, max_level)
    arcs = numpy.arange(1 << n, dtype=numpy.int64)
    return WeightedDigraph(1 << (n - 1), arcs >> 1, arcs & ((1 << (n - 1)) - 1),
                           n_level=n)


def haar_weights(f, n):
    """
    Weights ``W_n^f(x_1...x_n) = 1/2 Σ_{i<n} (-1)^{x_{i+1}} c_{x_1...x_i}(f)``
    computed with the recursion
    ``W_{k+1}(wα) = W_k(w) + (-1)^α c_w(f) / 2``.
    The first term uses the coefficient of ``h_∅``.

    @param      f       @see cl Potential
    @param      n       level
    @return             array of ``2^n`` weights
    """
    c0 = f.coefficients(0)[0]
    weights = numpy.array([c0 / 2, -c0 / 2])
    for k in range(1, n):
        c = f.coefficients(k)
        weights = numpy.repeat(weights, 2) + \
            numpy.tile([0.5, -0.5], 1 << k) * numpy.repeat(c, 2)
    return weights


def assign_weights(graph, f):
    """
    Assigns weights ``W_n^f`` to the arcs of ``BG_n``.

    @param      graph   @see cl WeightedDigraph built by @see fn build_graph
    @param      f       @see cl Potential
    @return             new @see cl WeightedDigraph
    """
    if graph.n_level is None:
        raise UsageError("Weights from a potential need a de Bruijn–Good graph.")
    return graph.with_weights(haar_weights(f, graph.n_level))


def cycle_to_periodic_point(cycle):
    """
    Reads the last symbol of every arc of a cycle of ``BG_n``
    and returns the canonical periodic point whose orbit
    follows the cycle.

    @param      cycle   @see cl DirectedCycle
    @return             @see cl PeriodicPoint
    """
    words = [Word(lab) for lab in cycle.labels]
    n = len(words[0])
    if n == 0 or any(len(w) != n for w in words):
        raise UsageError("Malformed cycle {0!r}.".format(cycle))
    for i, w in enumerate(words):
        nxt = words[(i + 1) % len(words)]
        if w.bits[1:] != nxt.bits[:-1]:
            raise UsageError(
                "Arc {0} is not followed by arc {1} in BG_{2}.".format(w, nxt, n))
    return PeriodicPoint(Word([w[-1] for w in words]))
