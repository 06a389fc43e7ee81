# -*- coding: utf-8 -*-
"""
@file
@brief Decay sequences ``a = {a_n}`` defining the metric ``d_a``
on the full shift, with certified bounds on their tails.
"""
import math
from ..exc import ModelError, UsageError
from .words import Word, first_disagreement


class DecayModel:
    """
    Strictly decreasing positive sequence ``a_n``.
    Two kinds are available:

    * ``theta-superexponential``: ``a_n = A θ^{n(n+1)/2}``,
      hence ``a_{n+1}/a_n = θ^{n+1}``,
    * ``explicit-table``: ``a_0 > ... > a_{K-1}`` followed
      by a geometric extension ``a_k = a_{K-1} r^{k-K+1}`` for ``k >= K``.

    Use @see me theta or @see me table to build one.

    .. exref::
        :title: the default model
        :tag: symbolic

        ::

            from shift_locking.symbolic import DecayModel
            model = DecayModel.theta(1., 0.2)
            print(model.a(3))                # 0.2 ** 6
            print(model.tail_sum_bound(1))   # 0.2 / 0.96 ** 2
    """

    THETA = "theta-superexponential"
    TABLE = "explicit-table"

    def __init__(self, kind, amplitude=None, theta=None, table=None, ext_ratio=None):
        """
        @param      kind        ``'theta-superexponential'`` or ``'explicit-table'``
        @param      amplitude   *A* (theta model)
        @param      theta       *θ* (theta model)
        @param      table       first values (table model)
        @param      ext_ratio   geometric ratio of the extension (table model)
        """
        if kind == DecayModel.THETA:
            if amplitude is None or theta is None:
                raise ModelError("The theta model needs an amplitude and a ratio.")
            if not amplitude > 0:
                raise ModelError(
                    "Amplitude must be positive not {0}.".format(amplitude))
            if not 0 < theta < 1:
                raise ModelError(
                    "theta must be in (0, 1) not {0}.".format(theta))
            self.amplitude = float(amplitude)
            self.theta_ = float(theta)
            self.table_ = None
            self.ext_ratio = None
        elif kind == DecayModel.TABLE:
            if not table:
                raise ModelError("The table model needs at least one value.")
            table = tuple(float(v) for v in table)
            if any(v <= 0 for v in table):
                raise ModelError("All values must be positive: {0}.".format(table))
            if any(table[i + 1] >= table[i] for i in range(len(table) - 1)):
                raise ModelError(
                    "Values must be strictly decreasing: {0}.".format(table))
            if ext_ratio is None or not 0 < ext_ratio < 1:
                raise ModelError(
                    "ext_ratio must be in (0, 1) not {0}.".format(ext_ratio))
            self.amplitude = None
            self.theta_ = None
            self.table_ = table
            self.ext_ratio = float(ext_ratio)
        else:
            raise ModelError("Unknown decay model kind {0!r}.".format(kind))
        self.kind = kind

    @staticmethod
    def theta(amplitude=1., theta=0.2):
        "Builds the model ``a_n = A θ^{n(n+1)/2}``."
        return DecayModel(DecayModel.THETA, amplitude=amplitude, theta=theta)

    @staticmethod
    def table(values, ext_ratio):
        "Builds a model from explicit values and a geometric extension."
        return DecayModel(DecayModel.TABLE, table=values, ext_ratio=ext_ratio)

    @staticmethod
    def geometric(ratio=0.5, amplitude=1.):
        "Builds ``a_n = A r^n``."
        return DecayModel.table([amplitude], ratio)

    def a(self, n):
        """
        Returns ``a_n``.
        """
        if n < 0:
            raise UsageError("n must be non negative not {0}.".format(n))
        if self.kind == DecayModel.THETA:
            return self.amplitude * self.theta_ ** (n * (n + 1) // 2)
        K = len(self.table_)
        if n < K:
            return self.table_[n]
        return self.table_[-1] * self.ext_ratio ** (n - K + 1)

    def ratio(self, m):
        """
        Returns a number *r < 1* such that ``a_{k+1} <= r a_k``
        for every ``k >= m``.
        """
        if self.kind == DecayModel.THETA:
            return self.theta_ ** (m + 1)
        K = len(self.table_)
        rs = [self.table_[k + 1] / self.table_[k] for k in range(m, K - 1)]
        rs.append(self.ext_ratio)
        return max(rs)

    def _table_partial(self, n, start, stop):
        return math.fsum((k - n + 1) * self.table_[k] for k in range(start, stop))

    def tail_sum_bound(self, n, start=None):
        """
        Certified upper bound of ``Σ_{k >= start} (k - n + 1) a_k``.

        @param      n       offset of the weights, ``n >= 1``
        @param      start   first index of the sum, ``start >= n``,
                            *n* if None
        @return             float

        For the theta model and ``m = start``, the bound is
        ``a_m / (1 - θ^{m+1})^2 + (m - n) a_m / (1 - θ^{m+1})``,
        which is ``a_n / (1 - θ^{n+1})^2`` when ``m = n``.
        """
        if n < 1:
            raise UsageError("n must be >= 1 not {0}.".format(n))
        m = n if start is None else start
        if m < n:
            raise UsageError("start={0} must be >= n={1}.".format(start, n))
        if self.kind == DecayModel.THETA:
            q = self.ratio(m)
            am = self.a(m)
            return am / (1 - q) ** 2 + (m - n) * am / (1 - q)
        K = len(self.table_)
        s = max(m, K)
        r = self.ext_ratio
        exact = self._table_partial(n, m, K) if m < K else 0.
        a_s = self.a(s)
        return exact + a_s * (r / (1 - r) ** 2 + (s - n + 1) / (1 - r))

    def plain_tail_bound(self, n):
        """
        Certified upper bound of ``Σ_{k >= n} a_k``.
        """
        if n < 0:
            raise UsageError("n must be non negative not {0}.".format(n))
        if self.kind == DecayModel.THETA:
            return self.a(n) / (1 - self.ratio(n))
        K = len(self.table_)
        s = max(n, K)
        exact = math.fsum(self.table_[n:K]) if n < K else 0.
        return exact + self.a(s) / (1 - self.ext_ratio)

    def summability(self):
        """
        Certified upper bound of ``Σ_{n >= 1} n a_n``,
        finite for both kinds of models.
        """
        return self.tail_sum_bound(1)

    def theta_regime(self):
        """
        Tells which hypothesis range the ratio θ falls into.

        @return     ``'prevalence'`` if ``θ < 1/4`` (locking is prevalent in the brick),
                    ``'conditional-only'`` if ``1/4 <= θ < 1/2``
                    (conditional gap bound only), ``'none'`` otherwise,
                    ``'unspecified'`` for a table model
        """
        if self.kind != DecayModel.THETA:
            return 'unspecified'
        if self.theta_ < 0.25:
            return 'prevalence'
        if self.theta_ < 0.5:
            return 'conditional-only'
        return 'none'

    def to_json(self):
        "Returns a dictionary ready for JSON serialization."
        if self.kind == DecayModel.THETA:
            return dict(kind=self.kind, A=self.amplitude, theta=self.theta_)
        return dict(kind=self.kind, table=list(self.table_), ext_ratio=self.ext_ratio)

    @staticmethod
    def from_json(data):
        """
        Restores a model serialized by @see me to_json.
        """
        if not isinstance(data, dict) or 'kind' not in data:
            raise ModelError("Unable to read a decay model from {0!r}.".format(data))
        kind = data['kind']
        if kind == DecayModel.THETA:
            return DecayModel.theta(data.get('A', 1.), data.get('theta'))
        if kind == DecayModel.TABLE:
            return DecayModel.table(data.get('table'), data.get('ext_ratio'))
        raise ModelError("Unknown decay model kind {0!r}.".format(kind))

    def __eq__(self, other):
        return isinstance(other, DecayModel) and self.to_json() == other.to_json()

    def __hash__(self):
        return hash(repr(self))

    def __repr__(self):
        if self.kind == DecayModel.THETA:
            return "DecayModel.theta({0!r}, {1!r})".format(self.amplitude, self.theta_)
        return "DecayModel.table({0!r}, {1!r})".format(list(self.table_), self.ext_ratio)


class MetricValue:
    """
    Result of @see fn metric_d_a.
    *upper_bound* is True when both prefixes agree through
    the horizon, *value* is then ``a_{m+1}`` which bounds
    the true distance.
    """

    def __init__(self, value, upper_bound, disagreement):
        self.value = value
        self.upper_bound = upper_bound
        self.disagreement = disagreement

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return "MetricValue({0!r}, upper_bound={1!r}, disagreement={2!r})".format(
            self.value, self.upper_bound, self.disagreement)


def metric_d_a(model, x_prefix, y_prefix):
    """
    Distance ``d_a(x, y) = a_{x † y}`` between two infinite
    words known through prefixes of the same length *m*.

    @param      model       @see cl DecayModel
    @param      x_prefix    @see cl Word
    @param      y_prefix    @see cl Word
    @return                 @see cl MetricValue, flagged as an upper bound
                            ``a_{m+1}`` if the prefixes agree
    """
    x = Word(x_prefix)
    i = first_disagreement(x, y_prefix)
    if i == math.inf:
        return MetricValue(model.a(len(x) + 1), True, i)
    return MetricValue(model.a(i), False, i)
