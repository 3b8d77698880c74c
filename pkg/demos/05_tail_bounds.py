# # Why the pivots bracket the target
#
# Drawing s of n balls without replacement, r of them red, the number of red
# draws exceeds its mean p*s by g or more with probability at most
# exp(-2 g^2 / s).  The selector's gap is chosen so this is tiny.

import math

from quintselect import Rng, TailQuery, check_lemma_bounds, check_tail_grid, hyper_tail, hyper_tail_exact

q = TailQuery(n=500, r=250, s=50, g=8.0)
print(float(hyper_tail_exact(q)), hyper_tail(q), math.exp(-2 * q.g**2 / q.s))

# The bound holds at every point of a grid of populations, red counts,
# draws and gaps (checked with exact rational arithmetic).

points = check_tail_grid()
print(len(points), sum(not p.holds for p in points))
# the point where the bound is closest to the exact tail, ignoring g = 0
nontrivial = [p for p in points if p.query.g > 0]
tightest = max(nontrivial, key=lambda p: float(p.tail) / math.exp(-2 * p.query.g**2 / p.query.s))
print(tightest.query, float(tightest.tail), math.exp(-2 * tightest.query.g**2 / tightest.query.s))

# ## First pass on 10^4 elements
#
# How often does one pass stay within its comparison budget and shrink the
# problem below 4gn/s?  The guarantee is 1 - 4/sqrt(n) = 0.96.

for k in (0, 4_999, 9_999):
    rep = check_lemma_bounds(10_000, k, trials=1000, rng=Rng(k))
    print(k, rep.frac_c_ok, rep.frac_shrink_ok, round(rep.bound, 3))
