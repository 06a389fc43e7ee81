# -*- coding: utf-8 -*-
"""
@file
@brief Command line: ``python -m shift_locking <subcommand> [options]``.

Exit codes: 0 success or certificate, 2 invalid input,
3 criterion not met or not found, 4 resource guard, 5 internal error.
"""
import argparse
import os
import sys
import traceback
import numpy
from ..exc import UsageError, ResourceError, NoCycleError, DegenerateInputError
from ..symbolic import DecayModel
from ..io import dumps_artifact, with_header
from ..graph import build_graph, assign_weights, gap, max_mean_cycle_karp, read_graph_json
from ..graph import enumerate_cycles, gap_by_enumeration, WeightedDigraph
from ..certify import find_locking_level, soundness_check
from ..lab import sample_brick, verify_conditional_gap_bound, verify_level_bound
from ..lab import prevalence_experiment
from ..haar import CylinderValues
from ..data import indicator_of_zero, constant_potential, haar_tie
from .run_config import RunConfig, SUBCOMMANDS

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NOT_FOUND = 3
EXIT_RESOURCE = 4
EXIT_INTERNAL = 5


def _run_certify(config, fLOG):
    f = config.get_potential()
    model = config.get_model()
    n_max = config.get_int('n_max', 6)
    res = find_locking_level(f, model, n_max, slack=config.get('slack', 1e-9),
                             threads=config.threads, fLOG=fLOG)
    payload = res.to_json()
    if res.certified:
        max_period = config.get_int('max_period', None)
        if max_period is not None:
            payload['soundness'] = soundness_check(res, f, max_period=max_period).to_json()
    return (EXIT_OK if res.certified else EXIT_NOT_FOUND), payload, None


def _run_gap(config, fLOG):
    f = config.get_potential()
    n = config.get_int('n', required=True)
    res = gap(assign_weights(build_graph(n), f), threads=config.threads, fLOG=fLOG)
    payload = res.to_json()
    payload['level'] = n
    return EXIT_OK, payload, None


def _run_mmc(config, fLOG):
    if config.get('graph') is None and 'n_vertices' in config.params:
        source = {k: v for k, v in config.params.items() if k in ('n_vertices', 'arcs')}
    else:
        source = config.get('graph', required=True)
    if isinstance(source, dict):
        source = dumps_artifact(source)
    elif isinstance(source, str) and config.config_path is not None and \
            not os.path.isabs(source) and not source.lstrip().startswith("{"):
        source = os.path.join(os.path.dirname(config.config_path), source)
    if isinstance(source, str) and not source.lstrip().startswith("{") and \
            not os.path.exists(source):
        raise UsageError("Unable to find graph {0!r}.".format(source))
    g = read_graph_json(source, fLOG=fLOG)
    best = max_mean_cycle_karp(g)
    payload = best.to_json()
    try:
        res = gap(g, threads=config.threads)
        payload.update(dict(gap=res.gap, second_mean=res.second_mean,
                            second_cycle_labels=res.second_witness.to_json()))
    except DegenerateInputError:
        payload.update(dict(gap=None, second_mean=None, second_cycle_labels=None))
    return EXIT_OK, payload, None


def _run_sample(config, fLOG):
    gauge = config.get_gauge()
    level = config.get_int('level', required=True)
    seed = config.get_int('seed', 0)
    sample = sample_brick(gauge, level, seed, stream=config.get_int('stream', 0))
    if fLOG:
        fLOG("[sample] level={0} seed={1} in_brick={2}".format(level, seed, sample.in_brick()))
    payload = sample.to_json()
    payload['in_brick'] = sample.in_brick()
    return EXIT_OK, payload, None


def _run_experiment(config, fLOG):
    kind = config.get('kind', required=True)
    f0 = config.get_potential('f0')
    gauge = config.get_gauge()
    seed = config.get_int('seed', 0)
    if kind == 'conditional-gap':
        report = verify_conditional_gap_bound(
            f0, config.get_int('n', required=True), config.get('epsilon', required=True),
            config.get_trials('trials', required=True), seed, gauge=gauge,
            conditioning=config.get('conditioning', 'per-trial'),
            block_size=config.get_int('block_size', 100),
            threads=config.threads, fLOG=fLOG)
    elif kind == 'level-bound':
        report = verify_level_bound(
            f0, gauge, config.get('n_range', required=True),
            config.get_trials('trials', required=True), seed,
            threads=config.threads, fLOG=fLOG)
    elif kind == 'prevalence':
        report = prevalence_experiment(
            f0, gauge, config.get_int('n_max', required=True),
            config.get_trials('samples', required=True), seed,
            force=bool(config.get('force', False)), threads=config.threads, fLOG=fLOG)
    else:
        raise UsageError("Unknown experiment kind {0!r}.".format(kind))
    if fLOG:
        fLOG("[experiment] kind={0} wall_time={1:.3f}s".format(kind, report.wall_time))
    return (EXIT_OK if report.passed else EXIT_NOT_FOUND), report.to_json(), report


def run_selftest(threads=None, fLOG=None):
    """
    Runs the deterministic checks: a hand-certified example,
    ties, Karp against exhaustive enumeration.

    @return     list of ``(name, passed)``
    """
    model = DecayModel.theta(1., 0.2)
    checks = []
    cert = find_locking_level(indicator_of_zero(), model, 4, threads=threads)
    checks.append(('indicator-certified', cert.certified and cert.level == 1 and
                   cert.orbit.to_json() == "0" and cert.gap_value == 1. and
                   cert.tail_bound == 0.))
    checks.append(('indicator-soundness',
                   cert.certified and soundness_check(cert, indicator_of_zero()).passed))
    checks.append(('constant-not-found',
                   not find_locking_level(constant_potential(0.), model, 4).certified))
    tie = gap(assign_weights(build_graph(2), haar_tie()))
    checks.append(('haar-tie', tie.gap == 0))
    bg3 = build_graph(3)
    checks.append(('bg3-cycles', len(enumerate_cycles(bg3)) == 6))
    rnd = numpy.random.RandomState(0)  # pylint: disable=E1101
    agree = True
    for _ in range(50):
        V = rnd.randint(1, 7)
        E = rnd.randint(V, 3 * V + 1)
        g = WeightedDigraph(V, rnd.randint(0, V, E), rnd.randint(0, V, E),
                            rnd.uniform(-1, 1, E))
        try:
            k = max_mean_cycle_karp(g).max_mean
        except NoCycleError:
            k = None
        cycles = enumerate_cycles(g)
        if k is None:
            agree = agree and len(cycles) == 0
            continue
        agree = agree and abs(k - max(m for _, m in cycles)) <= 1e-12
        if len(cycles) >= 2:
            agree = agree and abs(gap(g).gap - gap_by_enumeration(g).gap) <= 1e-12
    checks.append(('karp-vs-enumeration', agree))
    bg5 = assign_weights(build_graph(5), CylinderValues(5, rnd.uniform(-1, 1, 32)))
    checks.append(('bg5-gap', abs(gap(bg5).gap - gap_by_enumeration(bg5).gap) <= 1e-12))
    if fLOG:
        for name, ok in checks:
            fLOG("[selftest] {0}: {1}".format(name, "ok" if ok else "FAILED"))
    return checks


def _run_selftest(config, fLOG):
    checks = run_selftest(threads=config.threads, fLOG=fLOG)
    payload = dict(checks=[dict(name=n, passed=bool(p)) for n, p in checks])
    return (EXIT_OK if all(p for _, p in checks) else EXIT_INTERNAL), payload, None


_RUNNERS = {
    'certify': _run_certify,
    'gap': _run_gap,
    'mmc': _run_mmc,
    'sample': _run_sample,
    'experiment': _run_experiment,
    'selftest': _run_selftest,
}


def run(config, fLOG=None):
    """
    Runs a subcommand and writes its artifact.

    @param      config      @see cl RunConfig
    @param      fLOG        logging function
    @return                 exit code
    """
    code, payload, report = _RUNNERS[config.subcommand](config, fLOG)
    text = dumps_artifact(with_header(config.subcommand, payload, config.to_json()))
    if config.out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(config.out, "w", encoding="utf-8") as f:
            f.write(text)
        if report is not None:
            report.to_csv(os.path.splitext(config.out)[0] + ".csv")
    return code


def parse_args(argv=None):
    """
    Builds a @see cl RunConfig from the command line.
    """
    parser = argparse.ArgumentParser(
        prog="shift_locking",
        description="Certifies the locking property of potentials on the full shift "
                    "and checks probabilistic gap bounds.")
    parser.add_argument("subcommand", choices=SUBCOMMANDS)
    parser.add_argument("--config", default=None, help="JSON file with the parameters")
    parser.add_argument("--seed", type=int, default=None, help="seed")
    parser.add_argument("--out", default=None, help="output file (JSON), CSV written next to it")
    parser.add_argument("--threads", type=int, default=None, help="size of the worker pool")
    parser.add_argument("--n-max", type=int, default=None, dest="n_max", help="highest level")
    parser.add_argument("--verbose", action="store_true", help="logs on standard error")
    args = parser.parse_args(argv)
    return RunConfig.load(args.subcommand, config_path=args.config, seed=args.seed,
                          out=args.out, threads=args.threads, n_max=args.n_max,
                          verbose=args.verbose)


def _stderr(*args):
    print(*args, file=sys.stderr)


def main(argv=None):
    """
    Entry point, returns the exit code.
    """
    try:
        config = parse_args(argv)
        return run(config, fLOG=_stderr if config.verbose else None)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK
    except UsageError as e:
        _stderr("invalid input: {0}".format(e))
        return EXIT_INVALID
    except ResourceError as e:
        _stderr("resource guard: {0}".format(e))
        return EXIT_RESOURCE
    except (NoCycleError, DegenerateInputError) as e:
        _stderr("not found: {0}".format(e))
        return EXIT_NOT_FOUND
    except Exception as e:  # pylint: disable=W0703
        _stderr("internal error: {0}".format(e))
        traceback.print_exc(file=sys.stderr)
        return EXIT_INTERNAL
