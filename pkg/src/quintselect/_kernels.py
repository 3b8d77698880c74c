"""Hot loops shared by every public module.

This file is executed twice by :mod:`quintselect._backend`: once as plain
Python (works on lists of arbitrary ordered objects) and once under
``numba.njit`` (numeric numpy arrays).  The loader injects ``JIT`` and
``DEBUG`` before execution, so everything here must stay inside the subset
of Python that numba compiles.

Index convention: all positions are 0-based and segments are inclusive,
``x[l..r]``.  Rank arithmetic (``i = k - l + 1``, ``m = r - l + 1``) is
shift-invariant, so the 1-based formulas carry over unchanged.

Every element comparison goes through :func:`_lt` or :func:`_cmp` and is
counted once, whether it yields a two-way or a three-way answer.
"""

import math

import numpy as np

try:
    JIT
except NameError:
    JIT = False
try:
    DEBUG
except NameError:
    DEBUG = False

if JIT:
    import numba

    # the on-disk cache is keyed by source file, so only one variant may use it
    kernel = numba.njit(cache=not DEBUG, nogil=True)
    # self-recursive functions segfault when reloaded from the cache
    recursive_kernel = numba.njit(cache=False, nogil=True)
    U = np.uint64
    I = np.int64
else:

    def kernel(f):
        return f

    recursive_kernel = kernel

    U = int
    I = int

# counter slots
C_COMPARISONS = 0
C_PARTITIONED = 1
C_PARTITIONS = 2
C_SSELECT_CALLS = 3
C_SSELECT_PARTITIONS = 4
C_SAMPLE_SUM = 5
C_RANDOMIZATIONS = 6
C_RESAMPLES = 7
C_FALLBACKS = 8
N_COUNTERS = 9

# strategy families, as stored in slot 0 of the strategy vector
FR = 0
FR_LNS = 1
FR_LNEPS = 2
FR_SN23 = 3
REISCHUK = 4

SNAP = 1e-9
MAX_RESAMPLES = 20

# SplitMix64 constants
_GAMMA = U(0x9E3779B97F4A7C15)
_MIX1 = U(0xBF58476D1CE4E5B9)
_MIX2 = U(0x94D049BB133111EB)
_MASK = U(0xFFFFFFFFFFFFFFFF)
_ONE = U(1)
_S27 = U(27)
_S30 = U(30)
_S31 = U(31)


# ---------------------------------------------------------------- randomness


@kernel
def next_u64(state):
    z = (state[0] + _GAMMA) & _MASK
    state[0] = z
    z = ((z ^ (z >> _S30)) * _MIX1) & _MASK
    z = ((z ^ (z >> _S27)) * _MIX2) & _MASK
    return z ^ (z >> _S31)


@kernel
def rand_below(b, state):
    """Uniform integer in [0, b]; b == 0 consumes no draw."""
    if b <= 0:
        return I(0)
    bound = U(b) + _ONE
    # reject the low 2**64 mod bound outputs so the modulo is unbiased
    threshold = (_MASK - bound + _ONE) % bound
    while True:
        z = next_u64(state)
        if z >= threshold:
            return I(z % bound)


@kernel
def place_sample(x, l, r, s, state):
    for i in range(l, l + s):
        j = i + rand_below(r - i, state)
        x[i], x[j] = x[j], x[i]


# ---------------------------------------------------------- sample formulas


@kernel
def ceil_snap(t):
    n = math.floor(t + 0.5)
    if abs(t - n) <= SNAP:
        return I(n)
    return I(math.ceil(t))


@kernel
def f_value(n, eps_l):
    return n ** (2.0 / 3.0) * math.log(n) ** (eps_l / 3.0)


@kernel
def sample_params(sp, m):
    family = int(sp[0])
    alpha = sp[1]
    beta = sp[2]
    lnm = math.log(m)
    if family == FR_LNEPS:
        base = f_value(m, sp[4])
    elif family == FR_SN23:
        base = m ** (2.0 / 3.0)
    elif family == REISCHUK:
        base = m ** sp[5]
    else:
        base = f_value(m, 1.0)
    s = ceil_snap(alpha * base)
    if s > m - 1:
        s = m - 1
    if s < 1:
        s = 1
    if family == FR_LNS:
        g2 = 0.0
        ts = sp[3] * s
        if ts > 1.0:
            g2 = beta * s * math.log(ts)
        if g2 <= 0.0:
            # ln(theta*s) <= 0 would give no gap at all
            g2 = beta * s * lnm
    elif family == FR_LNEPS:
        g2 = beta * s * lnm ** sp[4]
    elif family == REISCHUK:
        g2 = beta * s * m ** sp[6]
    else:
        g2 = beta * s * lnm
    return s, math.sqrt(g2)


@kernel
def pivot_ranks(i, m, s, g, clamp):
    t = i * s / m
    iu = ceil_snap(t - g)
    if iu < 1:
        iu = 1
    iv = ceil_snap(t + g)
    if iv > s:
        iv = s
    if clamp:
        gms = g * m / s
        if i <= gms:
            iu = iv
        elif m < i + gms:
            iv = iu
    return iu, iv


# ---------------------------------------------------------------- comparing


@kernel
def _lt(a, b):
    return a < b


@kernel
def _cmp(a, b):
    if a < b:
        return -1
    if b < a:
        return 1
    return 0


# ------------------------------------------------------------- partitioning


@kernel
def vswap(x, a, b, c):
    d = min(b + 1 - a, c - b)
    off = c - d + 1
    for t in range(d):
        x[a + t], x[off + t] = x[off + t], x[a + t]


@kernel
def ternary_core(x, lb, p, i, j, q, rb, v, jmin, st):
    """Steps A2-A5 from the state ``=v|<v|?|>v|=v`` delimited by lb,p,i,j,q,rb."""
    c = 0
    ci = 0
    cj = 0
    while True:
        while True:
            i += 1
            c += 1
            ci = _cmp(x[i], v)
            if ci >= 0:
                break
        while True:
            j -= 1
            if j < jmin:
                # no element <= v left of the scan; only reachable when the
                # left equal block is empty and lb == jmin
                cj = -1
                break
            c += 1
            cj = _cmp(x[j], v)
            if cj <= 0:
                break
        if i < j:
            x[i], x[j] = x[j], x[i]
            if cj == 0:
                x[i], x[p] = x[p], x[i]
                p += 1
            if ci == 0:
                x[j], x[q] = x[q], x[j]
                q -= 1
            continue
        if i == j:
            i += 1
            j -= 1
        break
    st[C_COMPARISONS] += c
    a = lb + j - p + 1
    d = rb - q + i - 1
    vswap(x, lb, p - 1, j)
    vswap(x, i, q, rb)
    return a, d


@kernel
def ternary(x, l, r, k, st):
    """Step A1 then the ternary scan, pivot v = x[k]."""
    if l == r:
        return l, r
    v = x[k]
    x[l], x[k] = x[k], x[l]
    lb = l
    p = l + 1
    q = r - 1
    rb = r
    st[C_COMPARISONS] += 1
    cr = _cmp(v, x[r])
    if cr < 0:
        rb = q
    elif cr > 0:
        x[l], x[r] = x[r], x[l]
        lb = p
    return ternary_core(x, lb, p, l, r, q, rb, v, l, st)


@kernel
def prepare(x, r, rs, kum, kup, kvm, kvp):
    lb = kum
    pb = kup + 1
    rb = r - rs + kvp
    qb = rb - kvp + kvm - 1
    vswap(x, kvp + 1, rs, r)
    vswap(x, kvm, kvp, rb)
    return lb, pb, qb, rb


@kernel
def quintary_left(x, lb, pb, kvm, qb, rb, u, v, st):
    """Steps B1-B5: compare with v first, then with u when below v."""
    c = 0
    ci = 0
    p = kvm
    q = qb
    i = p - 1
    j = q + 1
    while True:
        while True:
            i += 1
            c += 1
            ci = _cmp(x[i], v)
            if ci >= 0:
                break
            c += 1
            cu = _cmp(x[i], u)
            if cu < 0:
                continue
            x[i], x[p] = x[p], x[i]
            if cu == 0:
                x[p], x[pb] = x[pb], x[p]
                pb += 1
            p += 1
        while True:
            j -= 1
            c += 1
            cj = _cmp(x[j], v)
            if cj > 0:
                continue
            if cj == 0:
                x[j], x[q] = x[q], x[j]
                q -= 1
                continue
            break
        if i >= j:
            break
        x[i], x[j] = x[j], x[i]
        c += 1
        cu = _cmp(x[i], u)
        if cu > 0:
            x[i], x[p] = x[p], x[i]
            p += 1
        elif cu == 0:
            x[i], x[p] = x[p], x[i]
            x[p], x[pb] = x[pb], x[p]
            pb += 1
            p += 1
        if ci == 0:
            x[j], x[q] = x[q], x[j]
            q -= 1
    st[C_COMPARISONS] += c
    a = lb + i - p
    b = a + pb - lb
    d = rb - q + j
    cc = d - rb + q
    vswap(x, pb, p - 1, j)
    vswap(x, lb, pb - 1, b - 1)
    vswap(x, i, q, rb)
    return a, b, cc, d


@kernel
def quintary_right(x, lb, pb, kvm, qb, rb, u, v, st):
    """Steps C1-C5: compare with u first, then with v when above u."""
    c = 0
    cj = 0
    p = pb
    q = qb - kvm + pb
    i = p - 1
    j = q + 1
    vswap(x, pb, kvm - 1, qb)
    while True:
        while True:
            i += 1
            c += 1
            ci = _cmp(x[i], u)
            if ci < 0:
                continue
            if ci == 0:
                x[i], x[p] = x[p], x[i]
                p += 1
                continue
            break
        while True:
            j -= 1
            c += 1
            cj = _cmp(x[j], u)
            if cj <= 0:
                break
            c += 1
            cv = _cmp(x[j], v)
            if cv > 0:
                continue
            x[j], x[q] = x[q], x[j]
            if cv == 0:
                x[q], x[qb] = x[qb], x[q]
                qb -= 1
            q -= 1
        if i >= j:
            break
        x[i], x[j] = x[j], x[i]
        if cj == 0:
            x[i], x[p] = x[p], x[i]
            p += 1
        c += 1
        cv = _cmp(x[j], v)
        if cv < 0:
            x[j], x[q] = x[q], x[j]
            q -= 1
        elif cv == 0:
            x[j], x[q] = x[q], x[j]
            x[q], x[qb] = x[qb], x[q]
            qb -= 1
            q -= 1
    st[C_COMPARISONS] += c
    a = lb + i - p
    b = a + p - lb
    d = rb - q + j
    cc = d - rb + qb
    vswap(x, lb, p - 1, j)
    vswap(x, i, q, qb)
    vswap(x, cc + 1, qb, rb)
    return a, b, cc, d


# ------------------------------------------------------- debug-only checks


@kernel
def check_prepared(x, l, lb, pb, kvm, qb, rb, r, u, v):
    for t in range(l, lb):
        assert x[t] < u
    for t in range(lb, pb):
        assert not (x[t] < u) and not (u < x[t])
    for t in range(pb, kvm):
        assert u < x[t] and x[t] < v
    for t in range(qb + 1, rb + 1):
        assert not (x[t] < v) and not (v < x[t])
    for t in range(rb + 1, r + 1):
        assert v < x[t]


@kernel
def check_blocks(x, l, r, a, b, c, d, u, v):
    for t in range(l, a):
        assert x[t] < u
    for t in range(a, b):
        assert not (x[t] < u) and not (u < x[t])
    for t in range(b, c + 1):
        assert u < x[t] and x[t] < v
    for t in range(c + 1, d + 1):
        assert not (x[t] < v) and not (v < x[t])
    for t in range(d + 1, r + 1):
        assert v < x[t]


# ------------------------------------------------------------------ select


@kernel
def reduce_segment(l, r, k, a, b, c, d):
    if a <= k:
        l = b
    if c < k:
        l = d + 1
    if k <= d:
        r = c
    if k < b:
        r = a - 1
    return l, r


@kernel
def partition_step(x, l, r, k, rs, kum, kup, kvm, kvp, equal, u, v, st):
    """Prepare the sampled layout and run Step 4; returns (a, b, c, d)."""
    lb, pb, qb, rb = prepare(x, r, rs, kum, kup, kvm, kvp)
    if DEBUG:
        check_prepared(x, l, lb, pb, kvm, qb, rb, r, u, v)
    st[C_PARTITIONS] += 1
    st[C_PARTITIONED] += r - l + 1
    if equal:
        a, d = ternary_core(x, lb, pb, pb - 1, qb + 1, qb, rb, v, l, st)
        b = d + 1
        c = a - 1
    elif k < (l + r) // 2:
        a, b, c, d = quintary_left(x, lb, pb, kvm, qb, rb, u, v, st)
    else:
        a, b, c, d = quintary_right(x, lb, pb, kvm, qb, rb, u, v, st)
    if DEBUG:
        check_blocks(x, l, r, a, b, c, d, u, v)
    return a, b, c, d


@kernel
def sselect(x, l, r, k, st):
    st[C_SSELECT_CALLS] += 1
    while l < r:
        m = r - l + 1
        a, d = ternary(x, l, r, k, st)
        st[C_SSELECT_PARTITIONS] += 1
        st[C_PARTITIONED] += m
        l, r = reduce_segment(l, r, k, a, d + 1, a - 1, d)
    if l == r:
        return k, k
    return r + 1, l - 1


@recursive_kernel
def select(x, l, r, k, sp, ncut, clamp, state, st, info, one_pass):
    """Recursive sampling select on x[l..r]; returns the equal range of x[k].

    With ``one_pass`` set, stops after the first partition and records
    (Step-4 comparisons, s, g, surviving size) in ``info``; the returned
    pair is then the reduced segment, not an equal range.
    """
    while True:
        m = r - l + 1
        if m <= ncut:
            return sselect(x, l, r, k, st)
        s, g = sample_params(sp, m)
        st[C_SAMPLE_SUM] += s
        rs = l + s - 1
        place_sample(x, l, r, s, state)
        iu, iv = pivot_ranks(k - l + 1, m, s, g, clamp)
        ku = l + iu - 1
        kv = l + iv - 1
        kum, kup = select(x, l, rs, ku, sp, ncut, clamp, state, st, info, False)
        u = x[ku]
        v = u
        equal = kup >= kv
        if equal:
            kvm = kv
            kvp = kup
            kup = kv - 1
        else:
            kvm, kvp = select(x, kup + 1, rs, kv, sp, ncut, clamp, state, st, info, False)
            v = x[kv]
        c0 = st[C_COMPARISONS]
        a, b, c, d = partition_step(x, l, r, k, rs, kum, kup, kvm, kvp, equal, u, v, st)
        l, r = reduce_segment(l, r, k, a, b, c, d)
        if one_pass:
            info[0] = st[C_COMPARISONS] - c0
            info[1] = s
            info[2] = g
            info[3] = r - l + 1 if l <= r else 0
            return l, r
        if l == r:
            return k, k
        if l > r:
            return r + 1, l - 1


# --------------------------------------------------- sorting-based variant


@recursive_kernel
def _msort(x, aux, lo, hi, off, st):
    if hi <= lo:
        return
    mid = (lo + hi) // 2
    _msort(x, aux, lo, mid, off, st)
    _msort(x, aux, mid + 1, hi, off, st)
    for t in range(lo, hi + 1):
        aux[t - off] = x[t]
    i = lo
    j = mid + 1
    c = 0
    for t in range(lo, hi + 1):
        if i > mid:
            x[t] = aux[j - off]
            j += 1
        elif j > hi:
            x[t] = aux[i - off]
            i += 1
        else:
            c += 1
            if _lt(aux[j - off], aux[i - off]):
                x[t] = aux[j - off]
                j += 1
            else:
                x[t] = aux[i - off]
                i += 1
    st[C_COMPARISONS] += c


@kernel
def merge_sort(x, lo, hi, st):
    """Top-down merge sort of x[lo..hi]; at most m*log2(m) comparisons."""
    if hi <= lo:
        return
    aux = x[lo : hi + 1].copy()
    _msort(x, aux, lo, hi, lo, st)


@kernel
def equal_range_sorted(x, lo, hi, k, st):
    v = x[k]
    a = k
    while a > lo:
        st[C_COMPARISONS] += 1
        if _lt(x[a - 1], v):
            break
        a -= 1
    b = k
    while b < hi:
        st[C_COMPARISONS] += 1
        if _lt(v, x[b + 1]):
            break
        b += 1
    return a, b


@kernel
def select_sorting(x, l, r, k, sp, ncut, clamp, state, st):
    """Nonrecursive variant: sort the sample and the surviving segment.

    A pass whose surviving segment is not below 4gm/s is thrown away and the
    segment re-sampled; after MAX_RESAMPLES such passes the whole segment is
    sorted instead.
    """
    m = r - l + 1
    if m <= ncut:
        merge_sort(x, l, r, st)
        return equal_range_sorted(x, l, r, k, st)
    tries = 0
    while True:
        s, g = sample_params(sp, m)
        st[C_SAMPLE_SUM] += s
        rs = l + s - 1
        place_sample(x, l, r, s, state)
        merge_sort(x, l, rs, st)
        iu, iv = pivot_ranks(k - l + 1, m, s, g, clamp)
        ku = l + iu - 1
        kv = l + iv - 1
        u = x[ku]
        v = u
        kum, kup = equal_range_sorted(x, l, rs, ku, st)
        equal = kup >= kv
        if equal:
            kvm = kv
            kvp = kup
            kup = kv - 1
        else:
            kvm, kvp = equal_range_sorted(x, kup + 1, rs, kv, st)
            v = x[kv]
        a, b, c, d = partition_step(x, l, r, k, rs, kum, kup, kvm, kvp, equal, u, v, st)
        l2, r2 = reduce_segment(l, r, k, a, b, c, d)
        nhat = r2 - l2 + 1 if l2 <= r2 else 0
        if nhat >= 4.0 * g * m / s:
            if tries < MAX_RESAMPLES:
                tries += 1
                st[C_RESAMPLES] += 1
                continue
            st[C_FALLBACKS] += 1
            merge_sort(x, l, r, st)
            return equal_range_sorted(x, l, r, k, st)
        if l2 > r2:
            return r2 + 1, l2 - 1
        merge_sort(x, l2, r2, st)
        return equal_range_sorted(x, l2, r2, k, st)


# ----------------------------------------------------------------- riSelect


@kernel
def median3(x, i, j, m, st):
    c = 1
    if _lt(x[j], x[i]):
        x[i], x[j] = x[j], x[i]
    c += 1
    if _lt(x[m], x[j]):
        x[j], x[m] = x[m], x[j]
        c += 1
        if _lt(x[j], x[i]):
            x[i], x[j] = x[j], x[i]
    st[C_COMPARISONS] += c


@kernel
def riselect(x, l, r, k, threshold, fallback, state, st):
    prev = 0
    limit = 16
    t = r - l + 1
    while t > 0:
        t >>= 1
        limit += 2
    parts = 0
    while r - l + 1 > 3:
        m = r - l + 1
        if prev > 0 and m > threshold * prev:
            st[C_RANDOMIZATIONS] += 1
            mid = (l + r) // 2
            j = l + rand_below(r - l, state)
            x[l], x[j] = x[j], x[l]
            j = l + rand_below(r - l, state)
            x[mid], x[j] = x[j], x[mid]
            j = l + rand_below(r - l, state)
            x[r], x[j] = x[j], x[r]
        prev = m
        if fallback and parts >= limit:
            st[C_FALLBACKS] += 1
            merge_sort(x, l, r, st)
            return k
        mid = (l + r) // 2
        median3(x, l, mid, r, st)
        v = x[mid]
        x[mid], x[l + 1] = x[l + 1], x[mid]
        i = l + 1
        j = r
        c = 0
        while True:
            i += 1
            c += 1
            while _lt(x[i], v):
                i += 1
                c += 1
            j -= 1
            c += 1
            while _lt(v, x[j]):
                j -= 1
                c += 1
            if i >= j:
                break
            x[i], x[j] = x[j], x[i]
        x[l + 1], x[j] = x[j], x[l + 1]
        st[C_COMPARISONS] += c
        st[C_PARTITIONS] += 1
        st[C_PARTITIONED] += m
        parts += 1
        if j == k:
            return k
        if k < j:
            r = j - 1
        else:
            l = j + 1
    if r - l == 2:
        median3(x, l, l + 1, r, st)
    elif r - l == 1:
        st[C_COMPARISONS] += 1
        if _lt(x[r], x[l]):
            x[l], x[r] = x[r], x[l]
    return k
