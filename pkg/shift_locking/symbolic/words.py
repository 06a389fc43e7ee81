# -*- coding: utf-8 -*-
"""
@file
@brief Finite binary words, periodic points of the full shift
and the position of first disagreement.
"""
import math
import numpy
from ..exc import UsageError, ResourceError


class Word:
    """
    Finite word over the alphabet ``{0, 1}``.
    A word indexes a cylinder ``[w]``, a Haar function ``h_w``
    or an arc of a de Bruijn–Good digraph. The class is immutable.
    Words serialize as strings over ``{0, 1}``, the empty word
    serializes as ``"e"``.

    Integer encoding is lexicographic: the first symbol is the
    most significant bit, ``Word("011").to_int() == 3``.
    """

    __slots__ = ('_bits',)

    def __init__(self, bits=""):
        """
        @param      bits    a string over ``{0, 1}`` (``"e"`` means the empty word),
                            a sequence of integers in ``{0, 1}`` or a @see cl Word
        """
        if isinstance(bits, Word):
            text = bits._bits
        elif isinstance(bits, str):
            text = "" if bits == "e" else bits
        else:
            text = "".join(str(int(b)) for b in bits)
        if text.strip("01"):
            raise UsageError(
                "A word must only contain symbols 0 and 1 not {0!r}.".format(bits))
        object.__setattr__(self, '_bits', text)

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable.")

    @staticmethod
    def from_int(value, length):
        """
        Builds the word of length *length* whose lexicographic
        index is *value*.

        @param      value       integer in ``[0, 2^length)``
        @param      length      word length
        @return                 @see cl Word
        """
        if length < 0 or value < 0 or value >= (1 << length):
            raise UsageError(
                "Cannot encode {0} with {1} binary symbols.".format(value, length))
        if length == 0:
            return Word("")
        return Word(format(value, "0{0}b".format(length)))

    @staticmethod
    def enumerate(length):
        """
        Enumerates all words of a given length in lexicographic order.
        """
        for i in range(1 << length):
            yield Word.from_int(i, length)

    @property
    def bits(self):
        "Returns the word as a string over ``{0, 1}``."
        return self._bits

    def to_int(self):
        "Lexicographic index of the word among words of the same length."
        return int(self._bits, 2) if self._bits else 0

    def to_array(self):
        "Returns the symbols as a :epkg:`numpy` array of integers."
        return numpy.array([int(c) for c in self._bits], dtype=numpy.int8)

    def prefix(self, m):
        "Returns the first *m* symbols."
        if m > len(self._bits):
            raise UsageError("Prefix of length {0} of a word of length {1}.".format(
                m, len(self._bits)))
        return Word(self._bits[:m])

    def sigma(self):
        "Drops the first symbol (left shift)."
        if not self._bits:
            raise UsageError("The empty word cannot be shifted.")
        return Word(self._bits[1:])

    def starts_with(self, other):
        "Tells if the word belongs to the cylinder ``[other]``."
        return self._bits.startswith(Word(other)._bits)

    def __len__(self):
        return len(self._bits)

    def __getitem__(self, i):
        return int(self._bits[i])

    def __iter__(self):
        for c in self._bits:
            yield int(c)

    def __add__(self, other):
        return Word(self._bits + Word(other)._bits)

    def __eq__(self, other):
        if isinstance(other, str):
            other = Word(other)
        return isinstance(other, Word) and other._bits == self._bits

    def __lt__(self, other):
        return (len(self), self._bits) < (len(other), other._bits)

    def __hash__(self):
        return hash(('Word', self._bits))

    def __repr__(self):
        return "Word({0!r})".format(self._bits)

    def __str__(self):
        return self._bits if self._bits else "e"

    def to_json(self):
        "Serializes the word."
        return str(self)


def _primitive_root(text):
    n = len(text)
    for d in range(1, n + 1):
        if n % d == 0 and text[:d] * (n // d) == text:
            return text[:d]
    return text  # pragma: no cover


def _least_rotation(text):
    return min(text[i:] + text[:i] for i in range(len(text)))


class PeriodicPoint:
    """
    Periodic point ``www...`` of the full shift described by
    its repeating word. Once canonicalized, the repeating word
    is primitive and is the least of its rotations so that
    two descriptions of the same periodic orbit compare equal.
    """

    __slots__ = ('repeating_word', 'canonical')

    def __init__(self, repeating_word, canonical=True):
        """
        @param      repeating_word  @see cl Word or string, length >= 1
        @param      canonical       replaces the word by the least rotation of its
                                    primitive root
        """
        word = Word(repeating_word)
        if len(word) == 0:
            raise UsageError("A periodic point needs a non empty repeating word.")
        if canonical:
            word = Word(_least_rotation(_primitive_root(word.bits)))
        object.__setattr__(self, 'repeating_word', word)
        object.__setattr__(self, 'canonical', canonical)

    def __setattr__(self, name, value):
        raise AttributeError("PeriodicPoint is immutable.")

    @property
    def period(self):
        "Minimal period (when canonical)."
        return len(self.repeating_word)

    def prefix(self, m):
        """
        Returns the first *m* symbols of the infinite word.
        """
        bits = self.repeating_word.bits
        rep = m // len(bits) + 1
        return Word((bits * rep)[:m])

    def orbit_cylinders(self, n):
        """
        Returns the lexicographic indices of the level-*n* cylinders
        visited by ``x, σx, ..., σ^{p-1}x`` where *p* is the length
        of the repeating word.

        @param      n       cylinder level
        @return             :epkg:`numpy` array of integers
        """
        bits = self.repeating_word.bits
        p = len(bits)
        long = bits * (n // p + 2)
        if n == 0:
            return numpy.zeros(p, dtype=numpy.int64)
        return numpy.array([int(long[i:i + n], 2) for i in range(p)], dtype=numpy.int64)

    def birkhoff_average(self, values):
        """
        Average of a step function along the periodic orbit.

        @param      values  values of a step function of level *n*
                            on the ``2^n`` cylinders (lexicographic order)
        @return             float
        """
        values = numpy.asarray(values, dtype=numpy.float64)
        n = int(round(math.log2(values.shape[0])))
        if (1 << n) != values.shape[0]:
            raise UsageError(
                "The number of values {0} is not a power of two.".format(values.shape[0]))
        return float(values[self.orbit_cylinders(n)].mean())

    def __eq__(self, other):
        if not isinstance(other, PeriodicPoint):
            return False
        return PeriodicPoint(self.repeating_word).repeating_word == \
            PeriodicPoint(other.repeating_word).repeating_word

    def __hash__(self):
        return hash(('PeriodicPoint', PeriodicPoint(self.repeating_word).repeating_word.bits))

    def __repr__(self):
        return "PeriodicPoint({0!r})".format(self.repeating_word.bits)

    def to_json(self):
        "Serializes the periodic point as its repeating word."
        return self.repeating_word.bits


def enumerate_periodic_points(max_period, guard=16):
    """
    Enumerates every periodic orbit of period at most *max_period*,
    each one given once by its canonical @see cl PeriodicPoint.
    The canonical repeating words are the Lyndon words, generated
    with Duval's algorithm.

    @param      max_period  maximum period
    @param      guard       maximum allowed value for *max_period*
    @return                 iterator on @see cl PeriodicPoint
    """
    if max_period > guard:
        raise ResourceError("max_period", max_period, guard)
    if max_period < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield PeriodicPoint(Word(w), canonical=False)
        m = len(w)
        while len(w) < max_period:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()


def first_disagreement(x_prefix, y_prefix):
    """
    Position of first disagreement ``x † y`` between two
    infinite words known through prefixes of the same length.

    @param      x_prefix    @see cl Word or string
    @param      y_prefix    @see cl Word or string
    @return                 least index *i* (1-based) with ``x_i != y_i``,
                            ``math.inf`` if both prefixes agree
                            (the words agree through the horizon)
    """
    x = Word(x_prefix)
    y = Word(y_prefix)
    if len(x) != len(y) or len(x) == 0:
        raise UsageError(
            "Prefixes must have the same positive length: {0} != {1}".format(len(x), len(y)))
    for i, (a, b) in enumerate(zip(x.bits, y.bits)):
        if a != b:
            return i + 1
    return math.inf
