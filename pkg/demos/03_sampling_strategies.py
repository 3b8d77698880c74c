# # Sample sizes and gaps
#
# Each pass draws a sample of s elements and chooses pivots g ranks either
# side of the target's expected position in the sample.

import math

import numpy as np

from quintselect import Family, Rng, RunStats, SampleStrategy, SelectConfig, f_of_n, phi_eps, sample_params, select

for m in (10**3, 10**4, 10**5, 10**6, 10**7):
    p = sample_params(SampleStrategy(), m)
    print(f"m={m:>9}  f(m)={f_of_n(m):>12.3f}  s={p.s:>6}  g={p.g:8.2f}  exp(-2g^2/s)={math.exp(-2 * p.g**2 / p.s):.2e}")

# With the default family the failure probability of a pass is m**(-2 beta).
# The polynomial-gap family uses a larger sample; phi_eps gives the ratio.

for eps in (1 / 4, 1 / 6, 1 / 9):
    print(eps, [round(phi_eps(n, eps), 3) for n in (10**5, 10**6, 5 * 10**6, 10**7)])

# ## Comparing the families on one input

n = 500_000
base = np.random.default_rng(3).permutation(n)
for strategy in (
    SampleStrategy(Family.FR),
    SampleStrategy(Family.FR_LNS),
    SampleStrategy(Family.FR_LNEPS, eps_l=0.5),
    SampleStrategy(Family.FR_SN23),
    SampleStrategy(Family.REISCHUK),
):
    x = base.copy()
    stats = RunStats()
    select(x, n // 2, config=SelectConfig(strategy=strategy), rng=Rng(0), stats=stats)
    print(f"{strategy.family.name:<9} C/n={stats.comparisons / n:.4f}  samples={100 * stats.sample_size_sum / n:.2f}% of n")
