"""The compiled and interpreted kernels must agree, and every comparison must be counted."""

import numpy as np
import pytest

from quintselect import Mode, RiselectConfig, Rng, SampleStrategy, SelectConfig
from quintselect import _backend
from quintselect.instrumentation import RunStats


def counting_kernels():
    """A private interpreted copy whose comparators tally every call."""
    K = _backend.load(False, True, name="quintselect._kernels_counting")
    K.calls = 0

    def lt(a, b):
        K.calls += 1
        return a < b

    def cmp(a, b):
        K.calls += 1
        return -1 if a < b else (1 if b < a else 0)

    K._lt = lt
    K._cmp = cmp
    return K


@pytest.fixture(scope="module")
def K():
    return counting_kernels()


def run_kernel(K, algo, x, k, seed, jit):
    st = np.zeros(9, dtype=np.int64) if jit else [0] * 9
    state = np.array([seed], dtype=np.uint64) if jit else [seed]
    sp = SampleStrategy().vector()
    n = len(x)
    if algo == "select":
        out = K.select(x, 0, n - 1, k, sp, 50, False, state, st, np.zeros(4), False)
    elif algo == "sorting":
        out = K.select_sorting(x, 0, n - 1, k, sp, 50, False, state, st)
    elif algo == "sselect":
        out = K.sselect(x, 0, n - 1, k, st)
    else:
        out = K.riselect(x, 0, n - 1, k, 7 / 8, True, state, st)
    return out, [int(v) for v in st], int(state[0])


ALGOS = ["select", "sorting", "sselect", "riselect"]


@pytest.mark.parametrize("algo", ALGOS)
@pytest.mark.parametrize("alphabet", [2, 10, None])
def test_counter_matches_comparator_calls(K, algo, alphabet):
    rng = np.random.default_rng(17)
    for trial in range(30):
        n = int(rng.integers(1, 3000))
        x = (rng.integers(0, alphabet, n) if alphabet else rng.permutation(n)).tolist()
        k = int(rng.integers(0, n))
        K.calls = 0
        _, st, _ = run_kernel(K, algo, x, k, trial, False)
        assert st[0] == K.calls


@pytest.mark.parametrize("algo", ALGOS)
def test_compiled_and_interpreted_agree(algo):
    Kp = _backend.load(False, False)
    Kj = _backend.load(True, False)
    rng = np.random.default_rng(5)
    for trial in range(20):
        n = int(rng.integers(1, 5000))
        base = rng.integers(0, [2, 10, 10**9][trial % 3], n)
        k = int(rng.integers(0, n))
        xp = base.tolist()
        xj = base.copy()
        op, stp, sp = run_kernel(Kp, algo, xp, k, trial, False)
        oj, stj, sj = run_kernel(Kj, algo, xj, k, trial, True)
        assert xp == xj.tolist()
        assert stp == stj and sp == sj
        assert np.array(op).tolist() == np.array(oj).tolist()


def test_public_api_backends_agree():
    from quintselect import riselect, select

    base = np.random.default_rng(8).integers(0, 50, 20_000)
    for fn, cfg in ((select, SelectConfig()), (select, SelectConfig(mode=Mode.NONRECURSIVE_SORT)), (riselect, RiselectConfig())):
        outs = []
        for backend in ("python", "jit"):
            x = base.copy() if backend == "jit" else base.tolist()
            stats = RunStats()
            fn(x, 9_999, config=cfg, rng=Rng(3), stats=stats, backend=backend)
            outs.append((list(x), stats.as_dict()))
        assert outs[0] == outs[1]


def test_debug_checks_run(monkeypatch):
    monkeypatch.setenv("QUINTSELECT_DEBUG", "1")
    from quintselect import select

    x = np.random.default_rng(1).integers(0, 30, 5000)
    assert select(x, 2500).value == np.sort(x)[2500]
    y = x.tolist()
    assert select(y, 100, config=SelectConfig(n_cut=5)).value == sorted(y)[100]


def test_unknown_backend():
    with pytest.raises(ValueError):
        _backend.wants_jit([1], "gpu")


@pytest.mark.parametrize("jit", [False, True])
def test_debug_checks_detect_bad_blocks(jit):
    K = _backend.load(jit, True)
    x = np.array([1, 5, 2, 7, 9]) if jit else [1, 5, 2, 7, 9]
    # claims x[1..1] == u == 2, which is false
    with pytest.raises(AssertionError):
        K.check_blocks(x, 0, 4, 1, 2, 2, 3, 2, 7)
    y = np.array([1, 2, 5, 7, 9]) if jit else [1, 2, 5, 7, 9]
    K.check_blocks(y, 0, 4, 1, 2, 2, 3, 2, 7)
