import numpy as np
import pytest

from quintselect import Sequence, SequenceSpec, generate
from quintselect.generators import m3killer


def gen(name, n, seed=0):
    return generate(SequenceSpec(Sequence(name), n, seed)).tolist()


def test_sorted_and_rotated():
    assert gen("sorted", 5) == [1, 2, 3, 4, 5]
    assert gen("rotated", 5) == [2, 3, 4, 5, 1]


def test_organpipe():
    assert gen("organpipe", 8) == [1, 2, 3, 4, 4, 3, 2, 1]


def expand_m3killer(k):
    """Two-row table: position i (1-based) and its value, written out case by case."""
    out = {}
    for i in range(1, 2 * k + 1):
        if i <= k - 1 and i % 2 == 1:
            out[i] = i
        elif i <= k - 2 and i % 2 == 0:
            out[i] = k + i - 1
        elif k <= i <= 2 * k - 2:
            out[i] = 2 * (i - k + 1)
        else:
            out[i] = i
    return [out[i] for i in range(1, 2 * k + 1)]


def test_m3killer_eight():
    assert m3killer(8).tolist() == [1, 5, 3, 2, 4, 6, 7, 8]


@pytest.mark.parametrize("k", [4, 6, 8, 50, 512])
def test_m3killer_closed_form(k):
    assert m3killer(2 * k).tolist() == expand_m3killer(k)


def test_m3killer_twelve_by_hand():
    assert m3killer(12).tolist() == [1, 7, 3, 9, 5, 2, 4, 6, 8, 10, 11, 12]


@pytest.mark.parametrize("name", ["random", "sorted", "rotated", "m3killer", "twofaced"])
@pytest.mark.parametrize("n", [4, 8, 64, 1000])
def test_permutation_families(name, n):
    assert sorted(gen(name, n, 5)) == list(range(1, n + 1))


def test_organpipe_multiset():
    x = gen("organpipe", 1000)
    assert sorted(x) == sorted(list(range(1, 501)) * 2)


@pytest.mark.parametrize("n", [1, 2, 5, 1000])
def test_onezero_multiset(n):
    x = gen("onezero", n, 3)
    assert sum(x) == (n + 1) // 2 and x.count(0) == n // 2


def test_twofaced_keeps_fixed_positions():
    n = 1024
    base = m3killer(n).tolist()
    x = gen("twofaced", n, 9)
    t = 4 * 10
    # 1-based shuffled ranges [t, n/2 - 1] and [n/2 + t - 1, n - 2]
    fixed = [i for i in range(1, n + 1) if not (t <= i <= n // 2 - 1 or n // 2 + t - 1 <= i <= n - 2)]
    assert all(x[i - 1] == base[i - 1] for i in fixed)
    assert x != base
    assert sorted(x[t - 1 : n // 2 - 1]) == sorted(base[t - 1 : n // 2 - 1])


def test_twofaced_small_n_has_empty_ranges():
    assert gen("twofaced", 8) == m3killer(8).tolist()


def test_determinism_and_seed_dependence():
    assert gen("random", 100, 1) == gen("random", 100, 1)
    assert gen("random", 100, 1) != gen("random", 100, 2)
    assert isinstance(generate(SequenceSpec(Sequence.SORTED, 3)), np.ndarray)


@pytest.mark.parametrize("name,n", [("organpipe", 7), ("m3killer", 10), ("twofaced", 6)])
def test_parity_errors(name, n):
    with pytest.raises(ValueError):
        SequenceSpec(Sequence(name), n)
