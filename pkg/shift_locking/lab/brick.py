# -*- coding: utf-8 -*-
"""
@file
@brief Gauges, Hilbert bricks and random potentials
``g = Σ_w b_w Y_w h_w`` with ``Y_w`` uniform on ``[-1, 1]``.
"""
import math
import numpy
import pandas
from ..exc import ModelError, UsageError, ResourceError
from ..symbolic import Word, DecayModel
from ..haar import Potential, CylinderValues, HaarTable, reconstruct
from ..graph import build_graph, assign_weights, gap


class Gauge:
    """
    Family of positive bounds ``b_w``. By default ``b_w`` only
    depends on ``|w| = n``: ``b_0 = a_0`` and ``b_n = a_n / n^p``
    (``p = 1`` gives ``b_n = a_n / n``). A few words may receive
    a specific bound through *overrides*.
    """

    def __init__(self, model, power=1., overrides=None):
        """
        @param      model       @see cl DecayModel
        @param      power       exponent *p*, ``p > 0`` ensures ``b_n = o(a_n)``
        @param      overrides   dictionary ``{word: b_w}``
        """
        if not isinstance(model, DecayModel):
            raise ModelError("model must be a DecayModel not {0}.".format(type(model)))
        if not power > 0:
            raise ModelError("power must be positive not {0}.".format(power))
        self.model = model
        self.power = float(power)
        self.overrides = {}
        for k, v in (overrides or {}).items():
            if not v > 0:
                raise ModelError("Gauge values must be positive: b_{0}={1}.".format(k, v))
            self.overrides[Word(k)] = float(v)
        self._by_level = {}
        for w, v in self.overrides.items():
            self._by_level.setdefault(len(w), []).append((w, v))

    def b(self, n):
        "Returns ``b_n`` (without overrides)."
        if n == 0:
            return self.model.a(0)
        return self.model.a(n) / n ** self.power

    def b_word(self, word):
        "Returns ``b_w``."
        w = Word(word)
        if w in self.overrides:
            return self.overrides[w]
        return self.b(len(w))

    def level_values(self, k):
        "Returns ``b_w`` for every word of length *k*."
        res = numpy.full(1 << k, self.b(k))
        for w, v in self._by_level.get(k, []):
            res[w.to_int()] = v
        return res

    def level_max(self, k):
        "Returns ``b̄_k = max_{|w| = k} b_w``."
        return max([self.b(k)] + [v for _, v in self._by_level.get(k, [])])

    def _correction(self, n, start, weighted):
        total = 0.
        for k, items in self._by_level.items():
            if k >= start:
                excess = max(0., max(v for _, v in items) - self.b(k))
                total += (k - n + 1) * excess if weighted else excess
        return total

    def weighted_tail(self, n, start):
        """
        Certified upper bound of ``Σ_{k >= start} (k - n + 1) b̄_k``,
        ``1 <= n <= start``.
        """
        if start < max(n, 1):
            raise UsageError("start={0} must be >= max(n, 1) with n={1}.".format(start, n))
        bound = self.model.tail_sum_bound(n, start=start) / start ** self.power
        return bound + self._correction(n, start, True)

    def plain_tail(self, start):
        """
        Certified upper bound of ``Σ_{k >= start} b̄_k``.
        """
        if start == 0:
            return self.level_max(0) + self.plain_tail(1)
        bound = self.model.plain_tail_bound(start) / start ** self.power
        return bound + self._correction(0, start, False)

    def admissibility(self, n_max):
        """
        Returns a :epkg:`pandas:DataFrame` with ``a_n``, ``b̄_n`` and the
        ratio ``b̄_n / a_n`` which must go to 0 (weak admissibility).
        Without override, the ratio is ``1 / n^p`` even when ``a_n``
        underflows to 0, an override on a level where ``a_n`` is null
        gives an infinite ratio.
        """
        rows = []
        for n in range(n_max + 1):
            a = self.model.a(n)
            bn = self.level_max(n)
            ratio = 1. if n == 0 else 1. / n ** self.power
            extra = [v for _, v in self._by_level.get(n, [])]
            if extra:
                ratio = max(ratio, max(extra) / a) if a > 0 else numpy.inf
            rows.append(dict(n=n, a=a, b=bn, ratio=ratio))
        return pandas.DataFrame(rows)

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(model=self.model.to_json(), rule="a_over_n_power", power=self.power,
                    overrides={str(k): v for k, v in sorted(self.overrides.items())})

    @staticmethod
    def from_json(data):
        "Restores a gauge serialized by @see me to_json."
        if not isinstance(data, dict) or 'model' not in data:
            raise ModelError("Unable to read a gauge from {0!r}.".format(data))
        rule = data.get('rule', "a_over_n_power")
        if rule != "a_over_n_power":
            raise ModelError("Unknown gauge rule {0!r}.".format(rule))
        return Gauge(DecayModel.from_json(data['model']), power=data.get('power', 1.),
                     overrides=data.get('overrides', None))

    def __repr__(self):
        return "Gauge({0!r}, power={1!r})".format(self.model, self.power)


def level_threshold(gauge, n):
    """
    Threshold ``4^{-n} n^{-3} b_{n-1}`` below which ``Gap_n``
    has a probability at most ``n^{-3}``.
    """
    if n < 1:
        raise UsageError("n must be >= 1 not {0}.".format(n))
    return 4. ** (-n) * n ** (-3) * gauge.b(n - 1)


def ratio_condition_level(gauge, lip, n_max):
    """
    Returns the first level *n* such that
    ``b_{n-1} / b_n > max(LIP, 1) 4^{n+1} n^4`` holds
    for every level between *n* and *n_max*, None if there is none.
    """
    found = None
    for n in range(n_max, 0, -1):
        bn = gauge.b(n)
        if bn > 0 and gauge.b(n - 1) / bn > max(lip or 0., 1.) * 4. ** (n + 1) * n ** 4:
            found = n
        else:
            break
    return found


def _level_draws(seed, stream, k):
    ss = numpy.random.SeedSequence(seed, spawn_key=(stream, k))
    rng = numpy.random.Generator(numpy.random.Philox(ss))
    return rng.uniform(-1., 1., 1 << k)


class BrickSample:
    """
    Random element of the Hilbert brick truncated at level *L*:
    ``g = Σ_{|w| < L} b_w Y_w h_w``. Draws are stored level by level,
    ``draws[k][i]`` is ``Y_w`` for the word *w* of length *k* and
    lexicographic index *i*.
    """

    def __init__(self, gauge, truncation_level, draws, seed, streams):
        self.gauge = gauge
        self.truncation_level = truncation_level
        self.levels = tuple(numpy.asarray(d, dtype=numpy.float64) for d in draws)
        self.seed = seed
        self.streams = tuple(streams)
        if len(self.levels) != truncation_level:
            raise UsageError("Expecting {0} levels of draws not {1}.".format(
                truncation_level, len(self.levels)))
        for d in self.levels:
            d.flags.writeable = False

    @property
    def draws(self):
        "Dictionary ``{Word: Y_w}``."
        return {Word.from_int(i, k): float(v)
                for k, d in enumerate(self.levels) for i, v in enumerate(d)}

    def coefficients(self, k):
        "Coefficients ``b_w Y_w`` of level *k* (zeros above the truncation)."
        if k >= self.truncation_level:
            return numpy.zeros(1 << k)
        return self.gauge.level_values(k) * self.levels[k]

    def coefficient(self, word):
        "Returns ``b_w Y_w``."
        w = Word(word)
        return float(self.coefficients(len(w))[w.to_int()])

    def in_brick(self):
        "Checks ``|c_w| <= b_w`` for every sampled word."
        return all((numpy.abs(self.coefficients(k)) <= self.gauge.level_values(k)).all()
                   for k in range(self.truncation_level))

    def haar_table(self):
        "Returns the sampled part as a @see cl HaarTable."
        return HaarTable(0., [self.coefficients(k) for k in range(self.truncation_level)])

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        return dict(gauge=self.gauge.to_json(), truncation_level=self.truncation_level,
                    seed=self.seed, streams=list(self.streams),
                    draws=[dict(w=str(w), y=y) for w, y in sorted(self.draws.items())])

    def __repr__(self):
        return "BrickSample(L={0}, seed={1}, streams={2})".format(
            self.truncation_level, self.seed, list(self.streams))


def sample_brick(gauge, level, seed, stream=0, level_streams=None, max_draws=2 ** 24):
    """
    Samples a random potential of the Hilbert brick truncated at *level*.
    Draws of level *k* come from a counter-based generator
    (:epkg:`numpy` *Philox*) keyed by ``(seed, stream, k)``: lower levels
    do not depend on the truncation and a level can be frozen while
    the others are redrawn.

    @param      gauge           @see cl Gauge
    @param      level           truncation level *L >= 1*
    @param      seed            non negative integer
    @param      stream          stream index (trial index)
    @param      level_streams   dictionary ``{k: stream}`` overwriting
                                the stream of some levels
    @param      max_draws       resource guard on ``2^L - 1``
    @return                     @see cl BrickSample
    """
    if level < 1:
        raise UsageError("level must be >= 1 not {0}.".format(level))
    if (1 << level) - 1 > max_draws:
        raise ResourceError("number of draws", (1 << level) - 1, max_draws)
    if seed is None or seed < 0:
        raise UsageError("seed must be a non negative integer not {0}.".format(seed))
    streams = [stream if level_streams is None else level_streams.get(k, stream)
               for k in range(level)]
    draws = [_level_draws(seed, s, k) for k, s in enumerate(streams)]
    return BrickSample(gauge, level, draws, seed, streams)


class BrickSumPotential(Potential):
    """
    Potential ``f0 + g`` where *g* is a @see cl BrickSample.
    Coefficients of *g* above the truncation level are unknown,
    they are bounded by the gauge.
    """

    representation = "brick-sum"

    def __init__(self, f0, sample):
        if not isinstance(f0, Potential):
            raise UsageError("f0 must be a Potential not {0}.".format(type(f0)))
        self.f0 = f0
        self.sample = sample
        self.lip = f0.lip

    def max_level_available(self):
        return self.f0.max_level_available()

    def constant_term(self):
        return self.f0.constant_term()

    def coefficients(self, k):
        return self.f0.coefficients(k) + self.sample.coefficients(k)

    def cylinder_values(self, n):
        L = min(n, self.sample.truncation_level)
        part = HaarTable(0., [self.sample.coefficients(k) for k in range(L)])
        return CylinderValues(n, self.f0.cylinder_values(n).values + reconstruct(part, n))

    def coefficient_sup_bound(self, k):
        if k >= self.sample.truncation_level:
            return self.f0.coefficient_sup_bound(k) + self.sample.gauge.level_max(k)
        g = self.sample.coefficients(k)
        if self.f0.is_exact:
            return float(numpy.abs(self.f0.coefficients(k) + g).max())
        return self.f0.coefficient_sup_bound(k) + float(numpy.abs(g).max())

    def approximation_error(self, n):
        return self.f0.approximation_error(n)

    def sup_error(self, m):
        L = self.sample.truncation_level
        sampled = math.fsum(float(numpy.abs(self.sample.coefficients(k)).max())
                            for k in range(m, L))
        return self.f0.sup_error(m) + 0.5 * (sampled + self.sample.gauge.plain_tail(max(m, L)))

    def weighted_tail(self, n, model=None, start=None):
        s0 = n if start is None else start
        s = max(s0, self.sample.truncation_level)
        exact = math.fsum((k - n + 1) * self.coefficient_sup_bound(k) for k in range(s0, s))
        return (exact + self.f0.weighted_tail(n, model=model, start=s) +
                self.sample.gauge.weighted_tail(n, s))

    def shift(self, c):
        return BrickSumPotential(self.f0.shift(c), self.sample)

    def describe(self):
        return dict(representation=self.representation, f0=self.f0.describe(),
                    gauge=self.sample.gauge.to_json(),
                    truncation_level=self.sample.truncation_level,
                    seed=self.sample.seed, streams=list(self.sample.streams))

    def __repr__(self):
        return "BrickSumPotential({0!r}, {1!r})".format(self.f0, self.sample)


def gap_of_sum(f0, g, n, threads=None):
    """
    Computes ``Gap_n(f0 + g)``.

    @param      f0      @see cl Potential
    @param      g       @see cl BrickSample, truncated at a level >= *n*
    @param      n       level
    @param      threads threads used by the arc-deletion sweep
    @return             @see cl GapResult
    """
    if g.truncation_level < n:
        raise UsageError("The sample is truncated at level {0} < n={1}.".format(
            g.truncation_level, n))
    return gap(assign_weights(build_graph(n), BrickSumPotential(f0, g)), threads=threads)
