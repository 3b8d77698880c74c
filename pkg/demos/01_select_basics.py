# # Selecting the k-th smallest element
#
# `select` permutes a segment in place so that position k holds the element
# of rank k, everything smaller sits to its left and everything larger to its
# right.  It also reports the full run of elements equal to the answer.

import numpy as np

from quintselect import Rng, RunStats, SelectConfig, select, sort_oracle

# Any list of mutually comparable objects works (interpreted kernels).

words = "delta alpha echo bravo charlie alpha foxtrot".split()
res = select(words, 2)
print(res)
print(words)

# Numeric numpy arrays take the compiled path.  Indices are 0-based, so the
# lower median of n elements is at k = (n + 1) // 2 - 1.

n = 1_000_000
x = np.random.default_rng(0).permutation(n) + 1
stats = RunStats()
res = select(x, (n + 1) // 2 - 1, rng=Rng(42), stats=stats)
print(res.value, stats.comparisons / n)

# About 1.59 n comparisons: n for the first pass over the data, about n/2 for
# the side of the median that has to be compared with both pivots, and a
# lower-order term for the samples.

print(stats)

# # Duplicates
#
# With many equal keys the equal range is wide, and the run finishes as soon
# as the target lands in a block of keys equal to a pivot.

y = np.random.default_rng(1).integers(0, 2, n)
stats = RunStats()
res = select(y, n // 2, rng=Rng(1), stats=stats)
print(res, stats.comparisons / n)
print(res == sort_oracle(y.tolist(), n // 2))

# # Sub-segments
#
# Only x[l..r] is touched; k is an absolute position inside that segment.

z = list(range(20, 0, -1))
res = select(z, 7, l=5, r=14, config=SelectConfig(n_cut=3))
print(z, res)
