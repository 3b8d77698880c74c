"""Benchmark input sequences.

All families produce ``int64`` arrays.  ``random``, ``onezero`` and
``twofaced`` consume the supplied seed; the others are fixed.
"""

import enum
from dataclasses import dataclass

import numpy as np

from . import _backend
from .sampling import Rng

__all__ = ["Sequence", "SequenceSpec", "generate", "m3killer"]


class Sequence(enum.Enum):
    RANDOM = "random"
    ONEZERO = "onezero"
    SORTED = "sorted"
    ROTATED = "rotated"
    ORGANPIPE = "organpipe"
    M3KILLER = "m3killer"
    TWOFACED = "twofaced"

    @property
    def randomized(self):
        return self in (Sequence.RANDOM, Sequence.ONEZERO, Sequence.TWOFACED)


@dataclass(frozen=True)
class SequenceSpec:
    family: Sequence
    n: int
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "family", Sequence(self.family))
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.family is Sequence.ORGANPIPE and self.n % 2:
            raise ValueError("organpipe needs even n")
        if self.family in (Sequence.M3KILLER, Sequence.TWOFACED) and self.n % 4:
            raise ValueError(f"{self.family.value} needs n divisible by 4")


def _shuffle(x, lo, hi, rng):
    """Uniform shuffle of x[lo..hi] (0-based, inclusive); empty ranges are a no-op."""
    if hi > lo:
        K = _backend.load(True, _backend.debug_enabled())
        K.place_sample(x, lo, hi, hi - lo + 1, rng._state)


def m3killer(n):
    """Median-of-3 killer permutation of 1..n for ``n % 4 == 0``."""
    k = n // 2
    i = np.arange(1, n + 1, dtype=np.int64)
    x = i.copy()
    low = i <= k - 1
    x[low & (i % 2 == 0)] = k + i[low & (i % 2 == 0)] - 1
    mid = (i >= k) & (i <= 2 * k - 2)
    x[mid] = 2 * (i[mid] - k + 1)
    return x


def generate(spec):
    spec = SequenceSpec(*spec) if isinstance(spec, tuple) else spec
    n = spec.n
    fam = spec.family
    rng = Rng(spec.seed)
    if fam is Sequence.RANDOM:
        x = np.arange(1, n + 1, dtype=np.int64)
        _shuffle(x, 0, n - 1, rng)
    elif fam is Sequence.ONEZERO:
        x = np.zeros(n, dtype=np.int64)
        x[: (n + 1) // 2] = 1
        _shuffle(x, 0, n - 1, rng)
    elif fam is Sequence.SORTED:
        x = np.arange(1, n + 1, dtype=np.int64)
    elif fam is Sequence.ROTATED:
        x = np.roll(np.arange(1, n + 1, dtype=np.int64), -1)
    elif fam is Sequence.ORGANPIPE:
        half = np.arange(1, n // 2 + 1, dtype=np.int64)
        x = np.concatenate([half, half[::-1]])
    elif fam is Sequence.M3KILLER:
        x = m3killer(n)
    else:
        x = m3killer(n)
        t = 4 * (n.bit_length() - 1)
        # 1-based inclusive ranges [t, n/2 - 1] and [n/2 + t - 1, n - 2]
        _shuffle(x, t - 1, n // 2 - 2, rng)
        _shuffle(x, n // 2 + t - 2, n - 3, rng)
    return x
