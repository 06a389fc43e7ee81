# -*- coding: utf-8 -*-
"""
@file
@brief Monte Carlo experiments checking the probabilistic
bounds on the gap of a random potential ``f0 + g``.
"""
import time
from concurrent.futures import ThreadPoolExecutor
import pandas
from ..exc import UsageError
from ..symbolic import DecayModel
from ..certify import find_locking_level
from .brick import Gauge, sample_brick, gap_of_sum, level_threshold, ratio_condition_level
from .brick import BrickSumPotential
from .confidence import clopper_pearson_upper


class ExperimentReport:
    """
    Results of an experiment: the configuration, one row per trial
    (or per trial and level), a summary with empirical rates and
    their exact confidence bounds.
    """

    def __init__(self, kind, config, rows, summary, details=None, wall_time=None):
        """
        @param      kind        ``'conditional-gap'``, ``'level-bound'`` or ``'prevalence'``
        @param      config      configuration echo (dictionary)
        @param      rows        list of dictionaries, one per record
        @param      summary     list of dictionaries
        @param      details     additional results
        @param      wall_time   duration in seconds (not serialized)
        """
        self.kind = kind
        self.config = config
        self.rows = rows
        self.summary = summary
        self.details = details or {}
        self.wall_time = wall_time

    @property
    def passed(self):
        "True if every summary row passes (rows without a verdict are ignored)."
        return all(s.get('passed', True) for s in self.summary)

    def to_dataframe(self):
        "Returns the per-trial records as a :epkg:`pandas:DataFrame`."
        return pandas.DataFrame(self.rows)

    def summary_dataframe(self):
        "Returns the summary as a :epkg:`pandas:DataFrame`."
        return pandas.DataFrame(self.summary)

    def to_csv(self, filename, **kwargs):
        "Writes the per-trial records into a CSV file."
        self.to_dataframe().to_csv(filename, index=False, **kwargs)

    def to_json(self):
        "Returns a dictionary ready for JSON serialization (without the wall time)."
        return dict(kind=self.kind, config=self.config, rows=self.rows,
                    summary=self.summary, details=self.details)

    @staticmethod
    def from_json(data):
        "Restores a report serialized by @see me to_json."
        return ExperimentReport(data['kind'], data['config'], data['rows'],
                                data['summary'], data.get('details', None))

    def __repr__(self):
        return "ExperimentReport({0!r}, n_rows={1}, passed={2})".format(
            self.kind, len(self.rows), self.passed)


def _run_trials(fct, indices, threads):
    if threads is not None and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fct, indices))
    return [fct(i) for i in indices]


def _default_gauge(gauge):
    if gauge is None:
        return Gauge(DecayModel.theta(1., 0.2))
    return gauge


def verify_conditional_gap_bound(f0, n, epsilon, trials, seed, gauge=None,
                                 conditioning='per-trial', block_size=100,
                                 threads=None, min_trials=100, fLOG=None):
    """
    Estimates ``P(Gap_n(f0 + g) <= 2^{-n} b_{n-1} ε)`` which is at most
    ``2^n ε`` even conditionally on the draws of levels below ``n - 1``.

    @param      f0              @see cl Potential
    @param      n               level, ``n >= 2``
    @param      epsilon         a float or a list of floats in ``(0, 1/2)``,
                                the gaps are computed once for all of them
    @param      trials          number of trials *T*
    @param      seed            seed
    @param      gauge           @see cl Gauge, ``b_n = a_n / n`` with
                                ``a_n = 0.2^{n(n+1)/2}`` if None
    @param      conditioning    ``'per-trial'``: every trial draws new values
                                for every level, ``'per-block'``: levels below
                                ``n - 1`` are shared by blocks of *block_size* trials
    @param      block_size      see *conditioning*
    @param      threads         number of threads
    @param      min_trials      minimum number of trials
    @param      fLOG            logging function
    @return                     @see cl ExperimentReport
    """
    eps_list = list(epsilon) if isinstance(epsilon, (list, tuple)) else [epsilon]
    for eps in eps_list:
        if not 0 < eps < 0.5:
            raise UsageError("epsilon must be in (0, 1/2) not {0}.".format(eps))
    if n < 2:
        raise UsageError("n must be >= 2 not {0}.".format(n))
    if trials < min_trials:
        raise UsageError("trials={0} is below {1}.".format(trials, min_trials))
    if conditioning not in ('per-trial', 'per-block'):
        raise UsageError("Unknown conditioning {0!r}.".format(conditioning))
    gauge = _default_gauge(gauge)
    begin = time.perf_counter()
    bn1 = gauge.b(n - 1)

    def trial(t):
        if conditioning == 'per-trial':
            streams = None
            block = t
        else:
            block = t // block_size
            streams = {k: trials + block for k in range(n - 1)}
        g = sample_brick(gauge, n, seed, stream=t, level_streams=streams)
        return dict(trial=t, block=block, gap=gap_of_sum(f0, g, n).gap)

    rows = _run_trials(trial, range(trials), threads)
    summary = []
    for eps in eps_list:
        threshold = 2. ** (-n) * bn1 * eps
        events = sum(1 for r in rows if r['gap'] <= threshold)
        upper = clopper_pearson_upper(events, trials)
        bound = 2. ** n * eps
        summary.append(dict(n=n, epsilon=eps, threshold=threshold, events=events,
                            rate=events / trials, upper=upper, bound=bound,
                            passed=upper <= bound))
        if fLOG:
            fLOG("[verify_conditional_gap_bound] n={0} eps={1} rate={2} upper={3} bound={4}".format(
                n, eps, events / trials, upper, bound))
    config = dict(f0=f0.describe(), gauge=gauge.to_json(), n=n, epsilon=eps_list,
                  trials=trials, seed=seed, conditioning=conditioning,
                  block_size=block_size, theta_regime=gauge.model.theta_regime())
    return ExperimentReport('conditional-gap', config, rows, summary,
                            wall_time=time.perf_counter() - begin)


def verify_level_bound(f0, gauge, n_range, trials, seed, threads=None, fLOG=None):
    """
    Estimates ``P(Gap_n(f0 + g) <= 4^{-n} n^{-3} b_{n-1})`` for every
    *n* in *n_range*, this probability is at most ``n^{-3}``.
    Every trial draws one sample truncated at ``max(n_range)``
    used for every level.

    @param      f0          @see cl Potential
    @param      gauge       @see cl Gauge (default if None)
    @param      n_range     levels
    @param      trials      number of trials
    @param      seed        seed
    @param      threads     number of threads
    @param      fLOG        logging function
    @return                 @see cl ExperimentReport, *details* holds
                            for every trial the first level from which the
                            threshold is exceeded through the end of the range
    """
    gauge = _default_gauge(gauge)
    levels = sorted(set(n_range))
    if len(levels) == 0 or levels[0] < 1:
        raise UsageError("n_range must contain levels >= 1 not {0}.".format(n_range))
    if trials < 1:
        raise UsageError("trials must be >= 1 not {0}.".format(trials))
    begin = time.perf_counter()
    thresholds = {n: level_threshold(gauge, n) for n in levels}

    def trial(t):
        g = sample_brick(gauge, levels[-1], seed, stream=t)
        return [dict(trial=t, n=n, gap=gap_of_sum(f0, g, n).gap, threshold=thresholds[n])
                for n in levels]

    rows = [r for res in _run_trials(trial, range(trials), threads) for r in res]
    for r in rows:
        r['event'] = r['gap'] <= r['threshold']

    summary = []
    for n in levels:
        events = sum(1 for r in rows if r['n'] == n and r['event'])
        upper = clopper_pearson_upper(events, trials)
        bound = n ** (-3.)
        summary.append(dict(n=n, threshold=thresholds[n], events=events,
                            rate=events / trials, upper=upper, bound=bound,
                            passed=upper <= bound))
        if fLOG:
            fLOG("[verify_level_bound] n={0} rate={1} upper={2} bound={3}".format(
                n, events / trials, upper, bound))

    first_levels = []
    for t in range(trials):
        first = None
        for r in reversed(rows[t * len(levels):(t + 1) * len(levels)]):
            if r['event']:
                break
            first = r['n']
        first_levels.append(first)
    config = dict(f0=f0.describe(), gauge=gauge.to_json(), n_range=levels,
                  trials=trials, seed=seed, theta_regime=gauge.model.theta_regime())
    return ExperimentReport('level-bound', config, rows, summary,
                            details=dict(first_levels=first_levels),
                            wall_time=time.perf_counter() - begin)


def prevalence_experiment(f0, gauge, n_max, samples, seed, model=None, force=False,
                          slack=1e-9, threads=None, fLOG=None):
    """
    Draws *samples* random potentials ``f0 + g`` and searches for the
    first level ``n <= n_max`` where the gap criterion certifies
    the locking property. Coefficients of *g* above ``n_max`` are
    not sampled, the tail majorant bounds them with the gauge.
    Lower levels do not depend on *n_max*, raising *n_max*
    never de-certifies a sample.

    @param      f0          @see cl Potential
    @param      gauge       @see cl Gauge (default if None)
    @param      n_max       highest level (and truncation level)
    @param      samples     number of samples *S*
    @param      seed        seed
    @param      model       decay model given to the certifier,
                            the gauge's model if None
    @param      force       runs even if ``θ >= 1/4``
    @param      slack       relative slack of the certifier
    @param      threads     number of threads
    @param      fLOG        logging function
    @return                 @see cl ExperimentReport
    """
    gauge = _default_gauge(gauge)
    regime = gauge.model.theta_regime()
    if regime != 'prevalence' and not force:
        raise UsageError(
            "The gauge decay must satisfy θ < 1/4 (regime is {0!r}), "
            "use force=True to run anyway.".format(regime))
    if samples < 0:
        raise UsageError("samples must be >= 0 not {0}.".format(samples))
    model = gauge.model if model is None else model
    begin = time.perf_counter()

    def trial(s):
        g = sample_brick(gauge, n_max, seed, stream=s)
        res = find_locking_level(BrickSumPotential(f0, g), model, n_max, slack=slack)
        row = dict(sample=s, certified=res.certified)
        if res.certified:
            row.update(dict(level=res.level, gap=res.gap_value, tail_bound=res.tail_bound,
                            margin=res.margin, orbit=res.orbit.to_json()))
        else:
            row.update(dict(level=None, gap=None, tail_bound=None, margin=None, orbit=None))
        return row, res.trace

    results = _run_trials(trial, range(samples), threads)
    rows = [r for r, _ in results]
    failures = {r['sample']: trace for r, trace in results if not r['certified']}
    if fLOG:
        for s, trace in failures.items():
            fLOG("[prevalence_experiment] sample={0} not certified trace={1}".format(s, trace))

    certified = sum(1 for r in rows if r['certified'])
    levels = {}
    for r in rows:
        if r['certified']:
            levels[r['level']] = levels.get(r['level'], 0) + 1
    summary = [dict(n_max=n_max, samples=samples, certified=certified,
                    fraction=certified / samples if samples > 0 else None,
                    levels={str(k): v for k, v in sorted(levels.items())},
                    ratio_condition_level=ratio_condition_level(gauge, f0.lip, n_max))]
    config = dict(f0=f0.describe(), gauge=gauge.to_json(), model=model.to_json(),
                  n_max=n_max, samples=samples, seed=seed, slack=slack,
                  theta_regime=regime, forced=force)
    return ExperimentReport('prevalence', config, rows, summary,
                            details=dict(failures={str(k): v for k, v in failures.items()}),
                            wall_time=time.perf_counter() - begin)
