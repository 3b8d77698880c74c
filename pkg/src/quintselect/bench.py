"""Benchmark runner: repeated selections on generated inputs, summarized per size."""

import csv
import hashlib
import io
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .generators import Sequence, SequenceSpec, generate
from .instrumentation import AggregateStats, RunStats, aggregate
from .riselect import RiselectConfig, riselect
from .sampling import Rng, SampleStrategy
from .select import SelectConfig, select, select_nonrecursive_sort

__all__ = ["ALGORITHMS", "CSV_FIELDS", "BenchConfig", "BenchRow", "derive_seed", "run", "render"]

ALGORITHMS = ("select", "select-nonrec-sort", "riselect")

CSV_FIELDS = (
    "algorithm", "sequence", "n", "k", "trials", "seed",
    "C_avg", "C_max", "C_min", "gamma_avg", "L_avg", "P_avg", "N_avg", "p_avg",
    "s_avg_pct", "N_rnd", "time_ms_avg",
)


def derive_seed(master, family, n, trial, purpose):
    """64-bit seed from blake2b over ``"master:family:n:trial:purpose"``."""
    key = f"{master}:{family}:{n}:{trial}:{purpose}".encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "little")


@dataclass(frozen=True)
class BenchConfig:
    """One benchmark sweep.  ``k`` is a 1-based rank; ``None`` means the lower median."""

    algorithm: str = "select"
    sequence: Sequence = Sequence.RANDOM
    n_list: tuple = (1_000_000,)
    k: int = None
    trials: int = 20
    seed: int = 0
    strategy: SampleStrategy = field(default_factory=SampleStrategy)
    n_cut: int = 600
    riselect: RiselectConfig = field(default_factory=RiselectConfig)

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        object.__setattr__(self, "sequence", Sequence(self.sequence))
        object.__setattr__(self, "n_list", tuple(int(n) for n in self.n_list))
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.n_list:
            raise ValueError("n_list must not be empty")
        for n in self.n_list:
            SequenceSpec(self.sequence, n)
            if self.k is not None and not 1 <= self.k <= n:
                raise ValueError(f"k={self.k} outside 1..{n}")

    def rank(self, n):
        return self.k if self.k is not None else (n + 1) // 2


@dataclass(frozen=True)
class BenchRow:
    algorithm: str
    sequence: str
    n: int
    k: int
    trials: int
    seed: int
    stats: AggregateStats
    time_ms_avg: float
    runs: tuple

    def csv_values(self):
        a = self.stats
        return [
            self.algorithm, self.sequence, str(self.n), str(self.k), str(self.trials), str(self.seed),
            f"{a.C.avg:.6f}", f"{a.C.max:.6f}", f"{a.C.min:.6f}", f"{a.gamma_avg:.6f}",
            f"{a.L.avg:.6f}", f"{a.P.avg:.6f}", f"{a.N.avg:.6f}", f"{a.p.avg:.6f}",
            f"{a.s_pct.avg:.6f}", f"{a.N_rnd.avg:.6f}", f"{self.time_ms_avg:.3f}",
        ]


def _one_run(config, x, k0, rng):
    stats = RunStats()
    start = time.perf_counter()
    if config.algorithm == "riselect":
        riselect(x, k0, config=config.riselect, rng=rng, stats=stats)
    else:
        sc = SelectConfig(strategy=config.strategy, n_cut=config.n_cut)
        fn = select if config.algorithm == "select" else select_nonrecursive_sort
        fn(x, k0, config=sc, rng=rng, stats=stats)
    return stats, time.perf_counter() - start


def _warm_up(config):
    # compile once outside the timed region
    x = np.arange(2000, 0, -1, dtype=np.int64)
    _one_run(config, x, 999, Rng(0))


def run(config):
    """One row per size; randomized inputs are regenerated per trial, fixed
    inputs are copied, and every trial gets its own algorithm seed."""
    _warm_up(config)
    fam = config.sequence.value
    rows = []
    for n in config.n_list:
        k = config.rank(n)
        fixed = None if config.sequence.randomized else generate(SequenceSpec(config.sequence, n))
        runs = []
        seconds = []
        for t in range(config.trials):
            if fixed is None:
                x = generate(SequenceSpec(config.sequence, n, derive_seed(config.seed, fam, n, t, "input")))
            else:
                x = fixed.copy()
            rng = Rng(derive_seed(config.seed, fam, n, t, "algorithm"))
            stats, dt = _one_run(config, x, k - 1, rng)
            runs.append(stats)
            seconds.append(dt)
        rows.append(BenchRow(
            config.algorithm, fam, n, k, config.trials, config.seed,
            aggregate(runs, n), 1000.0 * math.fsum(seconds) / len(seconds), tuple(runs),
        ))
    return rows


_TABLE_HEAD = (
    ("sequence", "{:<10}"), ("n", "{:>9}"), ("time ms", "{:>9}"),
    ("C avg", "{:>6}"), ("C max", "{:>6}"), ("C min", "{:>6}"), ("gamma", "{:>6}"),
    ("L avg", "{:>6}"), ("P avg", "{:>6}"), ("N avg", "{:>6}"), ("p avg", "{:>6}"),
    ("s %n", "{:>6}"), ("N_rnd", "{:>6}"),
)


def render(rows, fmt="table"):
    if not rows:
        raise ValueError("nothing to render")
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for row in rows:
            w.writerow(row.csv_values())
        return buf.getvalue()
    if fmt != "table":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"{rows[0].algorithm}: C and L in [n], P and N in [ln n], s in [%n]"]
    lines.append(" ".join(spec.format(name) for name, spec in _TABLE_HEAD))
    for row in rows:
        a = row.stats
        values = (
            row.sequence, row.n, f"{row.time_ms_avg:.2f}",
            f"{a.C.avg:.3f}", f"{a.C.max:.3f}", f"{a.C.min:.3f}", f"{a.gamma_avg:.2f}",
            f"{a.L.avg:.3f}", f"{a.P.avg:.2f}", f"{a.N.avg:.2f}", f"{a.p.avg:.2f}",
            f"{a.s_pct.avg:.2f}", f"{a.N_rnd.avg:.2f}",
        )
        lines.append(" ".join(spec.format(v) for (_, spec), v in zip(_TABLE_HEAD, values)))
    return "\n".join(lines) + "\n"
