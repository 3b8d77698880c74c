import math

import pytest

from quintselect import RunStats, aggregate, f_of_n, gamma_avg


def test_gamma_avg_examples():
    assert gamma_avg(1.5 * 10**6, 10**6) == 0
    assert gamma_avg(1.59 * 10**6, 10**6) == pytest.approx(90_000 / f_of_n(10**6))
    assert round(gamma_avg(1.59 * 10**6, 10**6), 2) == 3.75
    assert gamma_avg(1.49 * 10**6, 10**6) < 0


def test_single_trial():
    a = aggregate([RunStats(comparisons=1500, partitioned_length=1000, partitions=3)], 1000)
    assert a.C.avg == a.C.max == a.C.min == 1.5
    assert a.P.avg == pytest.approx(3 / math.log(1000))


def test_two_trials_mean():
    n = 1000
    a = aggregate([RunStats(comparisons=1500), RunStats(comparisons=1520)], n)
    assert a.C.avg == pytest.approx(1.51)
    assert (a.C.max, a.C.min) == (1.52, 1.5)
    assert a.trials == 2


def test_columns():
    n = 10_000
    runs = [
        RunStats(sselect_calls=4, sselect_partitions=20, sample_size_sum=500, randomizations=1, resamples=1),
        RunStats(sselect_calls=2, sselect_partitions=6, sample_size_sum=300),
    ]
    a = aggregate(runs, n)
    assert a.N.avg == pytest.approx(3 / math.log(n))
    assert a.p.avg == pytest.approx((5 + 3) / 2)
    assert a.s_pct.avg == pytest.approx(4.0)
    assert a.s_pass_pct.max == pytest.approx(3.0)
    assert a.N_rnd.avg == 0.5
    for col in (a.C, a.L, a.P, a.N, a.p, a.s_pct, a.N_rnd):
        assert col.min <= col.avg <= col.max


def test_empty_rejected():
    with pytest.raises(ValueError):
        aggregate([], 10)
