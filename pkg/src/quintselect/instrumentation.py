"""Run counters and the per-column summaries used by the benchmark tables."""

import math
from dataclasses import dataclass, fields

import numpy as np

from .sampling import f_of_n

__all__ = ["RunStats", "ColumnSummary", "AggregateStats", "gamma_avg", "aggregate"]

# order matches the counter slots in the kernels
_SLOTS = (
    "comparisons",
    "partitioned_length",
    "partitions",
    "sselect_calls",
    "sselect_partitions",
    "sample_size_sum",
    "randomizations",
    "resamples",
    "fallbacks",
)


@dataclass
class RunStats:
    """Counters for one run.

    ``partitioned_length`` sums the sizes of all partitioned segments
    (sampling passes and cutoff passes alike); ``partitions`` counts only
    the sampling passes, and ``sselect_partitions`` the cutoff passes.
    ``sample_size_sum`` includes samples drawn by discarded passes of the
    sorting variant; ``resamples`` counts those passes.
    """

    comparisons: int = 0
    partitioned_length: int = 0
    partitions: int = 0
    sselect_calls: int = 0
    sselect_partitions: int = 0
    sample_size_sum: int = 0
    randomizations: int = 0
    resamples: int = 0
    fallbacks: int = 0

    def _counters(self, jit):
        values = [getattr(self, name) for name in _SLOTS]
        return np.array(values, dtype=np.int64) if jit else values

    def _absorb(self, counters):
        for name, value in zip(_SLOTS, counters):
            setattr(self, name, int(value))

    def as_dict(self):
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @property
    def sample_size_per_pass(self):
        return self.sample_size_sum / (1 + self.resamples)


def counters_for(stats, jit):
    """Counter container for a kernel call; a throwaway one when stats is None."""
    return (stats if stats is not None else RunStats())._counters(jit)


def write_back(stats, counters):
    if stats is not None:
        stats._absorb(counters)


@dataclass(frozen=True)
class ColumnSummary:
    avg: float
    max: float
    min: float

    @classmethod
    def of(cls, values):
        values = [float(v) for v in values]
        return cls(math.fsum(values) / len(values), max(values), min(values))


@dataclass(frozen=True)
class AggregateStats:
    """Table columns over a set of trials, in normalized units.

    C and L are in multiples of n, P and N in multiples of ln n, p is
    cutoff partitions per cutoff call, s is the sample-size sum in percent
    of n, and N_rnd is the raw randomization count.
    """

    n: int
    trials: int
    C: ColumnSummary
    L: ColumnSummary
    P: ColumnSummary
    N: ColumnSummary
    p: ColumnSummary
    s_pct: ColumnSummary
    s_pass_pct: ColumnSummary
    N_rnd: ColumnSummary
    gamma_avg: float


def gamma_avg(c_avg, n):
    """``(c_avg - 1.5 n) / f(n)``, the empirical lower-order constant at the median."""
    return (c_avg - 1.5 * n) / f_of_n(n)


def aggregate(trials, n):
    if not trials:
        raise ValueError("aggregate needs at least one trial")
    ln = math.log(n) if n > 1 else 1.0
    col = ColumnSummary.of
    c = col([t.comparisons / n for t in trials])
    return AggregateStats(
        n=n,
        trials=len(trials),
        C=c,
        L=col([t.partitioned_length / n for t in trials]),
        P=col([t.partitions / ln for t in trials]),
        N=col([t.sselect_calls / ln for t in trials]),
        p=col([t.sselect_partitions / t.sselect_calls if t.sselect_calls else 0.0 for t in trials]),
        s_pct=col([100.0 * t.sample_size_sum / n for t in trials]),
        s_pass_pct=col([100.0 * t.sample_size_per_pass / n for t in trials]),
        N_rnd=col([t.randomizations for t in trials]),
        gamma_avg=gamma_avg(c.avg * n, n) if n >= 2 else 0.0,
    )
