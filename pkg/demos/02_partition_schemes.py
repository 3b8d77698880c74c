# # Three-way and five-way partitioning
#
# The selector never compares a sampled element again: after choosing
# pivots u < v from a sorted sample, the sample already sits in five blocks
# and only the remaining elements are classified.

from quintselect import RunStats, prepare_quintary, quintary_left, quintary_right, ternary_partition

# ## Three-way partition around x[k]

x = [4, 1, 4, 7, 2, 4, 9, 0]
b = ternary_partition(x, 0, len(x) - 1, 0)
print(x, b)

# ## Five-way partition
#
# Sample [1, 2, 2, 5, 6, 6, 8] with u = 2 at positions 1..2 and v = 6 at
# positions 4..5, followed by the unexamined elements.

sample = [1, 2, 2, 5, 6, 6, 8]
rest = [7, 2, 3, 6, 0, 9, 4, 2, 6, 5]
for scheme in (quintary_left, quintary_right):
    seg = sample + rest
    layout = prepare_quintary(seg, 0, len(seg) - 1, 6, 1, 2, 4, 5)
    print(layout)
    print(seg)
    stats = RunStats()
    b = scheme(seg, layout, 2, 6, stats=stats)
    print(scheme.__name__, seg, b, stats.comparisons)

# The left scheme compares each unknown element with v and only those below
# v with u, so it is cheaper when the target is in the lower part; the right
# scheme is its mirror image.

below_v = sum(t < 6 for t in rest)
above_u = sum(t > 2 for t in rest)
print(len(rest) + below_v + 2, len(rest) + above_u + 2)
