"""Baseline quickselect: sorted median-of-3 pivots, randomized when shrinking stalls."""

from dataclasses import dataclass

from . import _backend
from .instrumentation import counters_for, write_back
from .sampling import ConfigurationError, Rng

__all__ = ["RiselectConfig", "riselect", "median3_sorted"]


@dataclass(frozen=True)
class RiselectConfig:
    """``shrink_threshold``: if a segment keeps more than this fraction of the
    previous segment's length, its three pivot candidates are first swapped
    with random elements.  ``fallback`` finishes by merge sort after about
    ``16 + 2 * m.bit_length()`` partitions."""

    shrink_threshold: float = 7.0 / 8.0
    fallback: bool = False

    def __post_init__(self):
        if not 0.0 < self.shrink_threshold < 1.0:
            raise ConfigurationError("shrink_threshold must lie in (0, 1)")


def median3_sorted(x, i, j, m, stats=None):
    """Sort ``x[i], x[j], x[m]`` in place with at most three comparisons."""
    if not i < j < m:
        raise IndexError("median3_sorted needs i < j < m")
    K = _backend.kernels_for(x)
    st = counters_for(stats, K.JIT)
    K.median3(x, i, j, m, st)
    write_back(stats, st)


def riselect(x, k, l=0, r=None, *, config=None, rng=None, stats=None, backend="auto"):
    """Move the ``(k-l+1)``-th smallest of ``x[l..r]`` to ``x[k]``; returns ``k``.

    Afterwards ``x[i] <= x[k]`` for ``i < k`` and ``x[i] >= x[k]`` for ``i > k``.
    """
    config = config or RiselectConfig()
    n = len(x)
    r = n - 1 if r is None else r
    if not 0 <= l <= r < n:
        raise IndexError(f"segment [{l}, {r}] outside array of length {n}")
    if not l <= k <= r:
        raise IndexError(f"k={k} outside segment [{l}, {r}]")
    rng = rng if rng is not None else Rng()
    jit = _backend.wants_jit(x, backend)
    K = _backend.load(jit, _backend.debug_enabled())
    st = counters_for(stats, jit)
    box = rng._box(jit)
    K.riselect(x, int(l), int(r), int(k), float(config.shrink_threshold), config.fallback, box, st)
    rng._sync(box, jit)
    write_back(stats, st)
    return int(k)
