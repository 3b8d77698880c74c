# # Benchmark tables
#
# The same sweep is available as `quintselect bench ...` on the command line.
# Comparison counts are machine independent; times are not.

from quintselect.bench import BenchConfig, render, run

sizes = (50_000, 100_000, 500_000, 1_000_000)

for sequence in ("random", "onezero", "sorted", "m3killer"):
    rows = run(BenchConfig(algorithm="select", sequence=sequence, n_list=sizes, trials=20, seed=7))
    print(render(rows, "table"))

# The baseline quickselect for comparison.  It needs roughly 1.7 times as
# many comparisons on random data but is perfect on sorted input.

for sequence in ("random", "sorted", "rotated"):
    rows = run(BenchConfig(algorithm="riselect", sequence=sequence, n_list=sizes, trials=20, seed=7))
    print(render(rows, "table"))

# CSV output for further processing.

print(render(run(BenchConfig(n_list=(100_000,), trials=5)), "csv"))
