"""Random numbers, sample-size and gap formulas, and sample placement."""

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _backend

__all__ = [
    "ConfigurationError",
    "Rng",
    "Family",
    "SampleStrategy",
    "SampleParams",
    "f_of_n",
    "phi_eps",
    "ceil_snap",
    "sample_params",
    "place_sample",
]


class ConfigurationError(ValueError):
    """Raised for parameter choices outside the supported domain."""


class Rng:
    """SplitMix64 generator.

    Each call to :meth:`next_u64` adds the golden-ratio increment
    ``0x9E3779B97F4A7C15`` to the 64-bit state and returns the state passed
    through the standard two-multiply finalizer.  The same arithmetic runs in
    the compiled kernels, so a seed produces the same stream on every backend.
    """

    def __init__(self, seed=0):
        self._state = np.array([int(seed) & 0xFFFFFFFFFFFFFFFF], dtype=np.uint64)

    @property
    def state(self):
        return int(self._state[0])

    @state.setter
    def state(self, value):
        self._state[0] = int(value) & 0xFFFFFFFFFFFFFFFF

    def next_u64(self):
        box = [self.state]
        z = _backend.python_kernels().next_u64(box)
        self.state = box[0]
        return int(z)

    def rand_below(self, b):
        """Uniform integer in ``[0, b]`` by rejection; ``b == 0`` draws nothing."""
        box = [self.state]
        v = _backend.python_kernels().rand_below(int(b), box)
        self.state = box[0]
        return int(v)

    def _box(self, jit):
        # the kernels mutate a one-slot container in place
        return self._state if jit else [self.state]

    def _sync(self, box, jit):
        if not jit:
            self.state = box[0]


class Family(enum.IntEnum):
    """Sample-size and gap families."""

    FR = 0
    FR_LNS = 1
    FR_LNEPS = 2
    FR_SN23 = 3
    REISCHUK = 4


@dataclass(frozen=True)
class SampleStrategy:
    """A sampling family plus its tuning constants.

    ``alpha`` scales the sample size and ``beta`` the gap.  ``theta`` only
    matters for FR_LNS, ``eps_l`` for FR_LNEPS, and ``eps_s``/``eps`` for
    REISCHUK.
    """

    family: Family = Family.FR
    alpha: float = 0.5
    beta: float = 0.25
    theta: float = 1.0
    eps_l: float = 1.0
    eps_s: float = None
    eps: float = 0.25

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.eps_s is None:
            object.__setattr__(self, "eps_s", (2.0 + self.eps) / 3.0)
        if not self.alpha > 0 or not self.beta > 0:
            raise ConfigurationError("alpha and beta must be positive")
        if self.family == Family.FR_LNS and not self.theta > 0:
            raise ConfigurationError("theta must be positive")
        if self.family == Family.FR_LNEPS and not self.eps_l > 0:
            raise ConfigurationError("eps_l must be positive")
        if self.family == Family.REISCHUK:
            if not (0 < self.eps < 1 and 0 < self.eps_s < 1):
                raise ConfigurationError("eps and eps_s must lie in (0, 1)")
            eta = max(1 + (self.eps - self.eps_s) / 2, self.eps_s)
            if not eta < 1:
                raise ConfigurationError(
                    f"eps={self.eps}, eps_s={self.eps_s} give eta={eta:.4g}; need eta < 1"
                )

    def vector(self):
        """Packed float64 form consumed by the kernels."""
        return np.array(
            [int(self.family), self.alpha, self.beta, self.theta, self.eps_l, self.eps_s, self.eps],
            dtype=np.float64,
        )


@dataclass(frozen=True)
class SampleParams:
    s: int
    g: float


def f_of_n(n, eps_l=1.0):
    """``n**(2/3) * ln(n)**(eps_l/3)``; the sample-size base before scaling."""
    if n < 2:
        raise ConfigurationError("f_of_n needs n >= 2")
    return n ** (2.0 / 3.0) * math.log(n) ** (eps_l / 3.0)


def phi_eps(n, eps):
    """``(n**eps / ln n)**(1/3)``.

    This is the ratio of the REISCHUK sample size (exponent ``(2+eps)/3``)
    to the FR sample size at the same alpha.
    """
    if n < 3:
        raise ConfigurationError("phi_eps needs n >= 3")
    return (n**eps / math.log(n)) ** (1.0 / 3.0)


def ceil_snap(t):
    """Ceiling that snaps values within 1e-9 of an integer onto it."""
    return int(_backend.python_kernels().ceil_snap(float(t)))


def sample_params(strategy, m):
    """Sample size ``s`` and gap ``g`` for a segment of ``m >= 2`` elements."""
    if m < 2:
        raise ConfigurationError("sampling needs at least two elements")
    s, g = _backend.python_kernels().sample_params(strategy.vector(), int(m))
    return SampleParams(int(s), float(g))


def place_sample(x, l, r, s, rng, backend="auto"):
    """Move a uniform random ``s``-subset of ``x[l..r]`` into ``x[l..l+s-1]``."""
    if not 0 <= s <= r - l + 1:
        raise ConfigurationError("sample size out of range")
    jit = _backend.wants_jit(x, backend)
    K = _backend.load(jit, _backend.debug_enabled())
    box = rng._box(jit)
    K.place_sample(x, l, r, s, box)
    rng._sync(box, jit)
