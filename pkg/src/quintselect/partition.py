"""In-place three-way and five-way partitioning of a segment.

Segments are 0-based and inclusive.  The five-way schemes start from the
layout left by sampling and pivot selection, so they are normally driven by
:func:`quintselect.select`; the functions here expose each stage on its own.
"""

from dataclasses import dataclass

from . import _backend
from .instrumentation import counters_for, write_back

__all__ = [
    "PartitionBounds",
    "PreparedLayout",
    "vector_swap",
    "ternary_partition",
    "prepare_quintary",
    "quintary_left",
    "quintary_right",
]


@dataclass(frozen=True)
class PartitionBounds:
    """Five blocks ``x[l..a-1] < u``, ``x[a..b-1] == u``, ``u < x[b..c] < v``,
    ``x[c+1..d] == v`` and ``x[d+1..r] > v``.

    A three-way partition around ``v`` sets ``b = d + 1`` and ``c = a - 1``,
    so the same segment update applies to both.
    """

    a: int
    b: int
    c: int
    d: int


@dataclass(frozen=True)
class PreparedLayout:
    """Six consecutive parts of ``x[l..r]``:

    ``<u [l, lb)``, ``=u [lb, pb)``, ``(u,v) [pb, kv_minus)``,
    unknown ``[kv_minus, qb]``, ``=v (qb, rb]``, ``>v (rb, r]``.
    """

    l: int
    lb: int
    pb: int
    kv_minus: int
    qb: int
    rb: int
    r: int


def _check_segment(x, l, r):
    if not 0 <= l <= r < len(x):
        raise IndexError(f"segment [{l}, {r}] outside array of length {len(x)}")


def vector_swap(x, a, b, c):
    """Exchange the first ``d = min(b+1-a, c-b)`` elements of ``x[a..c]`` with its last ``d``."""
    if not a - 1 <= b <= c:
        raise IndexError("vector_swap needs a - 1 <= b <= c")
    d = min(b + 1 - a, c - b)
    if d > 0 and (a < 0 or c >= len(x)):
        raise IndexError("vector_swap range outside array")
    _backend.kernels_for(x).vswap(x, a, b, c)


def ternary_partition(x, l, r, k, stats=None, backend="auto"):
    """Partition ``x[l..r]`` around ``v = x[k]`` into ``<v | =v | >v``.

    Returns bounds with ``x[a..d] == v``.
    """
    _check_segment(x, l, r)
    if not l <= k <= r:
        raise IndexError("pivot index outside segment")
    jit = _backend.wants_jit(x, backend)
    K = _backend.load(jit, _backend.debug_enabled())
    st = counters_for(stats, jit)
    a, d = K.ternary(x, l, r, k, st)
    write_back(stats, st)
    return PartitionBounds(int(a), int(d) + 1, int(a) - 1, int(d))


def prepare_quintary(x, l, r, r_s, ku_minus, ku_plus, kv_minus, kv_plus):
    """Move the unsampled tail between the sampled blocks.

    Expects ``x[l..r_s]`` to hold the sample arranged as
    ``<u | =u [ku_minus..ku_plus] | (u,v) | =v [kv_minus..kv_plus] | >v`` and
    ``x[r_s+1..r]`` the unexamined elements.  No comparisons are made.
    """
    _check_segment(x, l, r)
    if not l <= ku_minus <= ku_plus + 1 <= kv_minus <= kv_plus <= r_s <= r:
        raise ValueError("inconsistent sample block indices")
    lb, pb, qb, rb = _backend.kernels_for(x).prepare(x, r, r_s, ku_minus, ku_plus, kv_minus, kv_plus)
    return PreparedLayout(l, int(lb), int(pb), kv_minus, int(qb), int(rb), r)


def _quintary(name, x, layout, u, v, stats, backend):
    if not u < v:
        raise ValueError("five-way partitioning needs u < v; use the three-way scheme for u == v")
    jit = _backend.wants_jit(x, backend)
    K = _backend.load(jit, _backend.debug_enabled())
    st = counters_for(stats, jit)
    lo = layout
    a, b, c, d = getattr(K, name)(x, lo.lb, lo.pb, lo.kv_minus, lo.qb, lo.rb, u, v, st)
    write_back(stats, st)
    return PartitionBounds(int(a), int(b), int(c), int(d))


def quintary_left(x, layout, u, v, stats=None, backend="auto"):
    """Five-way partition comparing each unknown element with ``v`` first."""
    return _quintary("quintary_left", x, layout, u, v, stats, backend)


def quintary_right(x, layout, u, v, stats=None, backend="auto"):
    """Five-way partition comparing each unknown element with ``u`` first."""
    return _quintary("quintary_right", x, layout, u, v, stats, backend)
