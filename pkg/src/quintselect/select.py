"""Sampling-based selection with two pivots and five-way partitioning."""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .instrumentation import counters_for, write_back
from .sampling import ConfigurationError, Rng, SampleStrategy, ceil_snap

__all__ = [
    "Mode",
    "SelectConfig",
    "SelectionResult",
    "PivotRanks",
    "pivot_ranks",
    "select",
    "sselect",
    "select_nonrecursive_sort",
    "sorting_constant",
]


class Mode(enum.Enum):
    RECURSIVE = "recursive"
    NONRECURSIVE_SORT = "nonrecursive_sort"


@dataclass(frozen=True)
class SelectConfig:
    """Sampling strategy, cutoff length and variant switches.

    Segments of at most ``n_cut`` elements are finished by :func:`sselect`.
    ``single_pivot_clamp`` collapses the two pivots into one when the target
    rank is within ``g*m/s`` of either end of the segment.
    """

    strategy: SampleStrategy = field(default_factory=SampleStrategy)
    n_cut: int = 600
    mode: Mode = Mode.RECURSIVE
    single_pivot_clamp: bool = False

    def __post_init__(self):
        if int(self.n_cut) != self.n_cut or self.n_cut < 1:
            raise ConfigurationError("n_cut must be a positive integer")
        object.__setattr__(self, "mode", Mode(self.mode))


@dataclass(frozen=True)
class SelectionResult:
    """The selected value and its equal range ``x[k_minus..k_plus]``."""

    value: object
    k_minus: int
    k_plus: int


@dataclass(frozen=True)
class PivotRanks:
    """Sample ranks ``i_u <= i_v`` (1-based within the sample), the pivot
    positions ``k_u, k_v`` and the bounding ranks ``k_l, k_r`` (all
    relative to the segment start, 1-based)."""

    i_u: int
    i_v: int
    k_u: int
    k_v: int
    k_l: int
    k_r: int


def pivot_ranks(i, m, s, g, single_pivot_clamp=False):
    """Pivot ranks for target rank ``i`` (1-based) in a segment of ``m`` elements."""
    if not (1 <= i <= m and 1 <= s <= m - 1 and g > 0):
        raise ValueError("pivot_ranks needs 1 <= i <= m, 1 <= s < m and g > 0")
    K = _backend.python_kernels()
    iu, iv = K.pivot_ranks(i, m, s, g, single_pivot_clamp)
    spread = 2.0 * g * m / s
    k_l = max(ceil_snap(i - spread), 1)
    k_r = min(ceil_snap(i + spread), m)
    return PivotRanks(int(iu), int(iv), int(iu), int(iv), k_l, k_r)


def _bounds(x, k, l, r):
    n = len(x)
    if r is None:
        r = n - 1
    if not 0 <= l <= r < n:
        raise IndexError(f"segment [{l}, {r}] outside array of length {n}")
    if not l <= k <= r:
        raise IndexError(f"k={k} outside segment [{l}, {r}]")
    return int(k), int(l), int(r)


def _result(x, k, km, kp):
    return SelectionResult(x[k], int(km), int(kp))


def select(x, k, l=0, r=None, *, config=None, rng=None, stats=None, backend="auto"):
    """Permute ``x[l..r]`` so that ``x[k]`` holds its ``(k-l+1)``-th smallest element.

    Elements left of the returned equal range are smaller, elements right of
    it larger.  ``x`` may be a list of any mutually comparable objects or a
    numeric numpy array (compiled path).
    """
    config = config or SelectConfig()
    if config.mode is Mode.NONRECURSIVE_SORT:
        return select_nonrecursive_sort(x, k, l, r, config=config, rng=rng, stats=stats, backend=backend)
    k, l, r = _bounds(x, k, l, r)
    rng = rng if rng is not None else Rng()
    jit = _backend.wants_jit(x, backend)
    K = _backend.load(jit, _backend.debug_enabled())
    st = counters_for(stats, jit)
    box = rng._box(jit)
    km, kp = K.select(
        x, l, r, k, config.strategy.vector(), int(config.n_cut), config.single_pivot_clamp,
        box, st, np.zeros(4), False,
    )
    rng._sync(box, jit)
    write_back(stats, st)
    return _result(x, k, km, kp)


def first_pass(x, k, l=0, r=None, *, config=None, rng=None, stats=None, backend="auto"):
    """Run one sampling pass (sample, pick pivots, partition, shrink).

    Returns ``(c, s, g, n_hat)``: comparisons spent partitioning, sample
    size, gap, and length of the surviving segment.  ``x[l..r]`` must be
    longer than ``config.n_cut``.
    """
    config = config or SelectConfig()
    k, l, r = _bounds(x, k, l, r)
    if r - l + 1 <= config.n_cut:
        raise ValueError("segment is not longer than the cutoff; no sampling pass happens")
    rng = rng if rng is not None else Rng()
    jit = _backend.wants_jit(x, backend)
    K = _backend.load(jit, _backend.debug_enabled())
    st = counters_for(stats, jit)
    box = rng._box(jit)
    info = np.zeros(4)
    K.select(
        x, l, r, k, config.strategy.vector(), int(config.n_cut), config.single_pivot_clamp,
        box, st, info, True,
    )
    rng._sync(box, jit)
    write_back(stats, st)
    return int(info[0]), int(info[1]), float(info[2]), int(info[3])


def sselect(x, k, l=0, r=None, *, stats=None, backend="auto"):
    """Repeated three-way partitioning around ``x[k]``; used below the cutoff."""
    k, l, r = _bounds(x, k, l, r)
    jit = _backend.wants_jit(x, backend)
    K = _backend.load(jit, _backend.debug_enabled())
    st = counters_for(stats, jit)
    km, kp = K.sselect(x, l, r, k, st)
    write_back(stats, st)
    return _result(x, k, km, kp)


def select_nonrecursive_sort(x, k, l=0, r=None, *, config=None, rng=None, stats=None, backend="auto"):
    """Single sampling pass with merge-sorted sample and surviving segment.

    A pass whose surviving segment has ``4*g*m/s`` or more elements is
    discarded and the segment re-sampled; after 20 discarded passes the
    whole segment is sorted.  Both events are counted in ``stats``.
    """
    config = config or SelectConfig(mode=Mode.NONRECURSIVE_SORT)
    k, l, r = _bounds(x, k, l, r)
    rng = rng if rng is not None else Rng()
    jit = _backend.wants_jit(x, backend)
    K = _backend.load(jit, _backend.debug_enabled())
    st = counters_for(stats, jit)
    box = rng._box(jit)
    km, kp = K.select_sorting(
        x, l, r, k, config.strategy.vector(), int(config.n_cut), config.single_pivot_clamp, box, st
    )
    rng._sync(box, jit)
    write_back(stats, st)
    return _result(x, k, km, kp)


def sorting_constant(n, strategy=None, gamma_sort=1.0 / math.log(2.0)):
    """Constant ``C`` such that the sorting variant uses at most
    ``n + min(k, n-k) + C f(n) ln n`` comparisons with high probability.

    ``gamma_sort`` is the constant of the sort's ``gamma m ln m`` worst-case
    bound; top-down merge sort needs at most ``m log2 m`` comparisons.
    """
    from .sampling import f_of_n

    strategy = strategy or SampleStrategy()
    a, b = strategy.alpha, strategy.beta
    ln = math.log(n)
    return (4 * gamma_sort + 2 / ln) * math.sqrt(b / a) + (gamma_sort - 1 / ln) * (a + 1 / f_of_n(n))
