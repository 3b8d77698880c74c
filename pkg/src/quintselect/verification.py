"""Reference answers and bound checks that do not share code with the selectors."""

import bisect
import decimal
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .sampling import Rng, SampleStrategy, ceil_snap, place_sample, sample_params
from .select import SelectConfig, SelectionResult, first_pass

__all__ = [
    "TailQuery",
    "sort_oracle",
    "hyper_tail",
    "hyper_tail_exact",
    "tail_grid",
    "GridPoint",
    "check_tail_grid",
    "LemmaReport",
    "check_lemma_bounds",
]

TAIL_N_CAP = 2000


def sort_oracle(x, k):
    """k-th smallest (0-based ``k``) of ``x`` by full sort, with its equal range."""
    if not 0 <= k < len(x):
        raise IndexError("k outside sequence")
    ordered = sorted(x)
    value = ordered[k]
    return SelectionResult(value, bisect.bisect_left(ordered, value), bisect.bisect_right(ordered, value) - 1)


@dataclass(frozen=True)
class TailQuery:
    """Draw ``s`` of ``n`` balls without replacement, ``r`` of them red; the
    event is at least ``p*s + g`` red draws, ``p = r/n``."""

    n: int
    r: int
    s: int
    g: float

    def __post_init__(self):
        if not (0 <= self.r <= self.n and 1 <= self.s <= self.n and self.g >= 0):
            raise ValueError("need 0 <= r <= n, 1 <= s <= n and g >= 0")

    @property
    def threshold(self):
        """Smallest integer count that is at least ``p*s + g``."""
        return ceil_snap(self.r * self.s / self.n + self.g)

    def support(self):
        return max(0, self.s - (self.n - self.r)), min(self.r, self.s)


def hyper_tail(q):
    """Tail probability in floating point via log-factorials and compensated sums."""
    if q.n > TAIL_N_CAP:
        raise ValueError(f"hyper_tail supports n <= {TAIL_N_CAP}")
    lo, hi = q.support()
    t = max(q.threshold, lo)
    if t > hi:
        return 0.0

    def lchoose(a, b):
        return math.lgamma(a + 1) - math.lgamma(b + 1) - math.lgamma(a - b + 1)

    denom = lchoose(q.n, q.s)
    terms = [math.exp(lchoose(q.r, j) + lchoose(q.n - q.r, q.s - j) - denom) for j in range(t, hi + 1)]
    return min(1.0, math.fsum(terms))


def hyper_tail_exact(q):
    """Tail probability as an exact fraction."""
    lo, hi = q.support()
    t = max(q.threshold, lo)
    num = sum(math.comb(q.r, j) * math.comb(q.n - q.r, q.s - j) for j in range(t, hi + 1))
    return Fraction(num, math.comb(q.n, q.s))


def tail_grid():
    """Grid over n in {50, 100, 500}, several red fractions, draw counts and deviations."""
    points = []
    for n in (50, 100, 500):
        reds = sorted({0, n // 10, n // 4, n // 2, 3 * n // 4, n})
        draws = sorted({math.isqrt(n - 1) + 1, n // 10, n // 4, n // 2, n})
        for r in reds:
            for s in draws:
                gaps = {0.0, 1.0, 2.0, 3.0}
                gaps.update(j * math.sqrt(s) / 4 for j in range(1, 13))
                for g in sorted(gaps):
                    points.append(TailQuery(n, r, s, g))
    return points


@dataclass(frozen=True)
class GridPoint:
    query: TailQuery
    tail: Fraction
    holds: bool


def _bound_holds(tail, q):
    # tail <= exp(-2 g^2 / s), decided with 200-digit decimal arithmetic
    ctx = decimal.Context(prec=200)
    g = decimal.Decimal(q.g)
    exponent = ctx.divide(ctx.multiply(-2 * g, g), decimal.Decimal(q.s))
    bound = ctx.exp(exponent)
    return decimal.Decimal(tail.numerator) <= ctx.multiply(bound, decimal.Decimal(tail.denominator))


def check_tail_grid(points=None):
    """Exact tail versus ``exp(-2 g^2/s)`` at every grid point."""
    out = []
    for q in points if points is not None else tail_grid():
        tail = hyper_tail_exact(q)
        out.append(GridPoint(q, tail, _bound_holds(tail, q)))
    return out


@dataclass(frozen=True)
class LemmaReport:
    """Fractions of first passes meeting the comparison bound, the shrink
    bound and both, against the guaranteed probability ``bound``."""

    n: int
    k: int
    trials: int
    frac_c_ok: float
    frac_shrink_ok: float
    frac_joint: float
    bound: float
    s: int
    g: float
    c_bar: float


def check_lemma_bounds(n, k, strategy=None, trials=1000, rng=None, single_pivot_clamp=False, n_cut=600):
    """Run the first sampling pass on ``trials`` fresh random permutations of 1..n.

    ``k`` is 0-based.  A pass meets the comparison bound when the partition
    uses at most ``n + min(k1, n-k1) - s + 2gn/s`` comparisons (``k1 = k+1``)
    and the shrink bound when fewer than ``4gn/s`` elements survive.
    """
    if n < 4 or trials < 1:
        raise ValueError("need n >= 4 and at least one trial")
    if not 0 <= k < n:
        raise IndexError("k outside 0..n-1")
    strategy = strategy or SampleStrategy()
    rng = rng if rng is not None else Rng()
    config = SelectConfig(strategy=strategy, n_cut=min(n_cut, n - 1), single_pivot_clamp=single_pivot_clamp)
    params = sample_params(strategy, n)
    s, g = params.s, params.g
    k1 = k + 1
    c_bar = n + min(k1, n - k1) - s + 2 * g * n / s
    shrink_limit = 4 * g * n / s
    c_ok = shrink_ok = joint = 0
    base = np.arange(1, n + 1, dtype=np.int64)
    for _ in range(trials):
        x = base.copy()
        # a fresh permutation drawn from the same stream as the algorithm
        place_sample(x, 0, n - 1, n, rng)
        c, _, _, n_hat = first_pass(x, k, config=config, rng=rng)
        a = c <= c_bar
        b = n_hat < shrink_limit
        c_ok += a
        shrink_ok += b
        joint += a and b
    bound = 1.0 - 4.0 * math.exp(-2.0 * g * g / s)
    return LemmaReport(n, k, trials, c_ok / trials, shrink_ok / trials, joint / trials, bound, s, g, c_bar)
