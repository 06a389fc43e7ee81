# -*- coding: utf-8 -*-
"""
@file
@brief Configuration of a command line run.
"""
import os
from ..exc import UsageError, ResourceError
from ..symbolic import DecayModel
from ..haar import potential_from_json
from ..data import named_potential
from ..lab import Gauge
from ..io import load_json_file

SUBCOMMANDS = ('certify', 'gap', 'mmc', 'sample', 'experiment', 'selftest')


class RunConfig:
    """
    Everything a run depends on. The configuration comes
    from a JSON file (``--config``), flags override it.
    It is echoed into every artifact.
    """

    def __init__(self, subcommand, params=None, seed=None, out=None, threads=None,
                 n_max=None, verbose=False, max_trials=10 ** 6, config_path=None):
        """
        @param      subcommand  one of ``certify, gap, mmc, sample, experiment, selftest``
        @param      params      parameters of the subcommand (dictionary)
        @param      seed        seed (overrides ``params['seed']``)
        @param      out         output file, standard output if None
        @param      threads     size of the worker pool
        @param      n_max       highest level (overrides ``params['n_max']``)
        @param      verbose     logs on standard error
        @param      max_trials  resource guard on trials and samples
        @param      config_path file the parameters were read from
        """
        if subcommand not in SUBCOMMANDS:
            raise UsageError("Unknown subcommand {0!r}.".format(subcommand))
        self.subcommand = subcommand
        self.params = dict(params or {})
        if seed is not None:
            self.params['seed'] = seed
        if n_max is not None:
            self.params['n_max'] = n_max
        self.out = out
        self.threads = threads
        self.verbose = verbose
        self.max_trials = max_trials
        self.config_path = config_path
        if threads is not None and threads < 1:
            raise UsageError("threads must be >= 1 not {0}.".format(threads))

    @staticmethod
    def load(subcommand, config_path=None, **kwargs):
        """
        Reads the parameters from a JSON file and builds the configuration.
        """
        params = {}
        if config_path is not None:
            if not os.path.exists(config_path):
                raise UsageError("Unable to find {0!r}.".format(config_path))
            try:
                params = load_json_file(config_path)
            except ValueError as e:
                raise UsageError("{0!r} is not a valid JSON file: {1}".format(
                    config_path, e)) from e
            if not isinstance(params, dict):
                raise UsageError("{0!r} must contain a JSON object.".format(config_path))
        return RunConfig(subcommand, params, config_path=config_path, **kwargs)

    def get(self, name, default=None, required=False):
        "Returns a parameter."
        if name not in self.params:
            if required:
                raise UsageError("Parameter {0!r} is missing for {1!r}.".format(
                    name, self.subcommand))
            return default
        return self.params[name]

    def get_int(self, name, default=None, required=False):
        "Returns an integer parameter."
        value = self.get(name, default, required)
        if value is None:
            return None
        if isinstance(value, bool) or not isinstance(value, int):
            raise UsageError("Parameter {0!r} must be an integer not {1!r}.".format(
                name, value))
        return value

    def get_trials(self, name, default=None, required=False):
        "Returns a number of trials checked against the guard."
        value = self.get_int(name, default, required)
        if value is not None and value > self.max_trials:
            raise ResourceError(name, value, self.max_trials)
        return value

    def get_model(self, name='model'):
        "Returns the decay model, ``a_n = 0.2^{n(n+1)/2}`` by default."
        data = self.get(name, None)
        if data is None:
            return DecayModel.theta(1., 0.2)
        return DecayModel.from_json(data)

    def get_gauge(self, name='gauge'):
        "Returns the gauge, ``b_n = a_n / n`` with the default model if missing."
        data = self.get(name, None)
        if data is None:
            return Gauge(self.get_model())
        return Gauge.from_json(data)

    def get_potential(self, name='potential'):
        """
        Returns a potential, either serialized (``step-table``,
        ``cylinder-values``) or named
        (``{"kind": "named", "name": ..., "args": {...}}``).
        """
        data = self.get(name, required=True)
        if isinstance(data, dict) and data.get('kind', None) == 'named':
            return named_potential(data.get('name', None), **data.get('args', {}))
        return potential_from_json(data)

    def to_json(self):
        "Returns the echo of the configuration."
        return dict(subcommand=self.subcommand, params=self.params, threads=self.threads,
                    max_trials=self.max_trials)

    def __repr__(self):
        return "RunConfig({0!r}, {1!r})".format(self.subcommand, self.params)
