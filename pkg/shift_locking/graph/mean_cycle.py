# -*- coding: utf-8 -*-
"""
@file
@brief Maximum mean cycle (Karp's algorithm), second heaviest
cycle and the gap between the two heaviest mean-weights.
"""
from concurrent.futures import ThreadPoolExecutor
import numpy
from ..exc import NoCycleError, DegenerateInputError, ResourceError
from .debruijn import DirectedCycle


class MeanCycleResult:
    """
    Maximum mean-weight and a cycle achieving it.
    """

    def __init__(self, max_mean, witness_cycle, method):
        """
        @param      max_mean        maximum mean-weight
        @param      witness_cycle   @see cl DirectedCycle
        @param      method          ``'karp'`` or ``'enumeration'``
        """
        self.max_mean = max_mean
        self.witness_cycle = witness_cycle
        self.method = method

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(max_mean=self.max_mean, cycle_labels=self.witness_cycle.to_json(),
                    method=self.method)

    def __repr__(self):
        return "MeanCycleResult({0!r}, {1!r}, {2!r})".format(
            self.max_mean, self.witness_cycle, self.method)


class GapResult:
    """
    The two heaviest cycles and ``Gap = M(C_1) - M(C_2) >= 0``.
    Two distinct cycles with the same mean-weight give a null gap.
    """

    def __init__(self, best, second_mean, second_witness):
        """
        @param      best            @see cl MeanCycleResult
        @param      second_mean     mean-weight of the second heaviest cycle
        @param      second_witness  @see cl DirectedCycle
        """
        self.best = best
        self.second_mean = second_mean
        self.second_witness = second_witness
        self.gap = max(0., best.max_mean - second_mean)

    @property
    def is_tie(self):
        "True when the gap is null."
        return self.gap == 0

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(max_mean=self.best.max_mean,
                    cycle_labels=self.best.witness_cycle.to_json(),
                    second_mean=self.second_mean,
                    second_cycle_labels=self.second_witness.to_json(),
                    gap=self.gap)

    def __repr__(self):
        return "GapResult(gap={0!r}, best={1!r}, second={2!r})".format(
            self.gap, self.best.witness_cycle, self.second_witness)


class _InArcs:
    """
    Incoming arcs of every vertex stored column by column:
    column *j* holds the *j*-th incoming arc of every vertex
    (arcs sorted by index), a missing arc has tail 0, arc -1
    and weight ``-inf``. An arc with weight ``-inf`` is never used.
    """

    def __init__(self, n_vertices, tails, heads, weights):
        E = tails.shape[0]
        if E == 0:
            raise NoCycleError("The graph has no arc.")
        order = numpy.argsort(heads, kind='stable')
        s_heads = heads[order]
        starts = numpy.searchsorted(s_heads, numpy.arange(n_vertices))
        rank = numpy.arange(E) - starts[s_heads]
        width = int(rank.max()) + 1
        self.n_vertices = n_vertices
        self.tails = numpy.zeros((width, n_vertices), dtype=numpy.int64)
        self.weights = numpy.full((width, n_vertices), -numpy.inf)
        self.arcs = numpy.full((width, n_vertices), -1, dtype=numpy.int64)
        self.tails[rank, s_heads] = tails[order]
        self.weights[rank, s_heads] = weights[order]
        self.arcs[rank, s_heads] = order
        self.column = numpy.empty(E, dtype=numpy.int64)
        self.column[order] = rank
        self.heads = heads
        self.arc_tails = tails

    def without(self, arc):
        """
        Returns a copy where arc *arc* cannot be used,
        tails and arc indices are shared.
        """
        res = _InArcs.__new__(_InArcs)
        res.__dict__.update(self.__dict__)
        res.weights = self.weights.copy()
        res.weights[self.column[arc], self.heads[arc]] = -numpy.inf
        return res

    def table(self):
        """
        Computes ``D[k, v]``, the maximum weight of a walk of *k* arcs
        ending at *v* (any start) for ``0 <= k <= V``.
        """
        V = self.n_vertices
        D = numpy.empty((V + 1, V))
        D[0] = 0.
        columns = list(zip(self.tails, self.weights))
        t0, w0 = columns[0]
        for k in range(1, V + 1):
            prev = D[k - 1]
            row = D[k]
            numpy.add(prev.take(t0), w0, out=row)
            for t, w in columns[1:]:
                numpy.maximum(row, prev.take(t) + w, out=row)
        return D

    def predecessor(self, D, k, v):
        """
        Returns the lowest arc ending at *v* on which
        ``D[k, v]`` is reached from ``D[k - 1]``.
        """
        prev = D[k - 1]
        target = D[k, v]
        for j in range(self.tails.shape[0]):
            a = self.arcs[j, v]
            if a >= 0 and prev[self.tails[j, v]] + self.weights[j, v] == target:
                return int(a)
        raise RuntimeError(  # pragma: no cover
            "No predecessor for vertex {0} at step {1}.".format(v, k))


def _max_ratio(D, block=256):
    """
    ``max_v min_k (D[V, v] - D[k, v]) / (V - k)``
    computed by blocks of rows.
    """
    V = D.shape[1]
    last = D[V]
    ratio = numpy.full(V, numpy.inf)
    with numpy.errstate(invalid='ignore'):
        for b in range(0, V, block):
            e = min(b + block, V)
            lengths = (V - numpy.arange(b, e, dtype=numpy.float64))[:, numpy.newaxis]
            ratio = numpy.fmin(ratio, numpy.fmin.reduce((last - D[b:e]) / lengths, axis=0))
    ratio[last == -numpy.inf] = -numpy.inf
    return ratio


def _karp(in_arcs, witness=True):
    """
    Karp's dynamic program on @see cl _InArcs. ``D_k(v)`` is the maximum
    weight of a walk of *k* arcs ending at *v* (any start), the maximum
    mean is ``max_v min_k (D_V(v) - D_k(v)) / (V - k)``.
    The table *D* is computed once and used for the value and the cycle.

    @return     ``(max_mean, arcs)``, *arcs* is the list of arc indices
                of an optimal cycle in traversal order (None if *witness*
                is False), raises @see cl NoCycleError if the graph is acyclic
    """
    V = in_arcs.n_vertices
    D = in_arcs.table()
    ratio = _max_ratio(D)
    max_mean = ratio.max()
    if max_mean == -numpy.inf:
        raise NoCycleError("The graph has no cycle.")
    if not witness:
        return float(max_mean), None

    v = int(numpy.nonzero(ratio == max_mean)[0][0])
    seen = {v: 0}
    arcs = []
    for s in range(V):
        a = in_arcs.predecessor(D, V - s, v)
        arcs.append(a)
        v = int(in_arcs.arc_tails[a])
        if v in seen:
            cycle = arcs[seen[v]:]
            cycle.reverse()
            return float(max_mean), cycle
        seen[v] = s + 1
    raise RuntimeError(  # pragma: no cover
        "Unable to find a cycle on the optimal walk.")


def _result(g, arcs, method):
    cycle = DirectedCycle([int(a) for a in arcs],
                          [g.arc_label(a) for a in arcs]).canonical()
    return MeanCycleResult(g.cycle_mean(cycle), cycle, method)


def max_mean_cycle_karp(g, max_vertices=2 ** 13):
    """
    Maximum mean cycle with Karp's algorithm, the cycle is recovered
    by walking back the optimal walk of ``|V|`` arcs until a vertex
    repeats. Among equivalent choices, the lowest vertex and the lowest
    arc are taken. The returned mean is the mean of the witness cycle.

    @param      g               @see cl WeightedDigraph
    @param      max_vertices    resource guard (memory grows as ``|V|^2``)
    @return                     @see cl MeanCycleResult
    """
    if g.n_vertices > max_vertices:
        raise ResourceError("n_vertices", g.n_vertices, max_vertices)
    _, arcs = _karp(_InArcs(g.n_vertices, g.tails, g.heads, g.weights))
    return _result(g, arcs, 'karp')


def enumerate_cycles(g, max_cycles=10 ** 7):
    """
    Enumerates every simple directed cycle with its mean-weight.
    Elementary circuits are found with :epkg:`networkx`
    (Johnson's algorithm) on the underlying simple digraph,
    then expanded along parallel arcs.

    @param      g           @see cl WeightedDigraph
    @param      max_cycles  resource guard
    @return                 list of ``(DirectedCycle, mean)``
    """
    import networkx
    parallel = {}
    for a in range(g.n_arcs):
        parallel.setdefault((int(g.tails[a]), int(g.heads[a])), []).append(a)
    simple = networkx.DiGraph()
    simple.add_nodes_from(range(g.n_vertices))
    simple.add_edges_from(parallel)
    res = []
    for vertices in networkx.simple_cycles(simple):
        choices = [[]]
        for i, u in enumerate(vertices):
            v = vertices[(i + 1) % len(vertices)]
            choices = [c + [a] for c in choices for a in parallel[u, v]]
        for arcs in choices:
            cycle = DirectedCycle(arcs, [g.arc_label(a) for a in arcs]).canonical()
            res.append((cycle, g.cycle_mean(cycle)))
            if len(res) > max_cycles:
                raise ResourceError("number of cycles", len(res), max_cycles)
    res.sort(key=lambda r: r[0].arcs)
    return res


def gap_by_enumeration(g, max_cycles=10 ** 7):
    """
    Gap between the two heaviest cycles computed by exhaustive
    enumeration, used to check @see fn gap on small graphs.
    """
    cycles = enumerate_cycles(g, max_cycles=max_cycles)
    if len(cycles) < 2:
        raise DegenerateInputError(
            "The graph has {0} cycle(s), a gap needs two.".format(len(cycles)))
    cycles.sort(key=lambda r: -r[1])
    best = MeanCycleResult(cycles[0][1], cycles[0][0], 'enumeration')
    return GapResult(best, cycles[1][1], cycles[1][0])


def gap(g, threads=None, max_vertices=2 ** 13, fLOG=None):
    """
    Computes the two heaviest mean-weights and their gap.
    The second heaviest cycle avoids at least one arc of the
    heaviest cycle *C_1*: the function runs Karp's algorithm
    on *g* minus every arc of *C_1* and keeps the best result
    (graphs left acyclic are skipped).

    @param      g               @see cl WeightedDigraph
    @param      threads         number of threads for the arc-deletion sweep
    @param      max_vertices    resource guard
    @param      fLOG            logging function
    @return                     @see cl GapResult

    .. exref::
        :title: gap of a potential at level n
        :tag: graph

        ::

            from shift_locking.graph import build_graph, assign_weights, gap
            from shift_locking.data import indicator_of_zero
            g = assign_weights(build_graph(3), indicator_of_zero())
            print(gap(g).gap)  # 1.
    """
    if g.n_vertices > max_vertices:
        raise ResourceError("n_vertices", g.n_vertices, max_vertices)
    in_arcs = _InArcs(g.n_vertices, g.tails, g.heads, g.weights)
    _, arcs = _karp(in_arcs)
    best = _result(g, arcs, 'karp')
    removed = sorted(best.witness_cycle.arcs)

    def without(a):
        try:
            value, _ = _karp(in_arcs.without(a), witness=False)
        except NoCycleError:
            return None
        return value

    if threads is not None and threads > 1 and len(removed) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(without, removed))
    else:
        values = [without(a) for a in removed]
    candidates = [(v, a) for v, a in zip(values, removed) if v is not None]
    if len(candidates) == 0:
        raise DegenerateInputError("The graph has only one cycle.")
    value = max(v for v, _ in candidates)
    deleted = min(a for v, a in candidates if v == value)
    _, arcs = _karp(in_arcs.without(deleted))
    second = _result(g, arcs, 'karp')
    if fLOG:
        fLOG("[gap] best={0} second={1} sweep={2}".format(
            best.max_mean, second.max_mean, len(removed)))
    return GapResult(best, second.max_mean, second.witness_cycle)
