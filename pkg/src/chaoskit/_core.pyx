# cython: language_level=3
"""Compiled twins of chaoskit._pure — identical algorithms and visit
order, C integer/double inner loops."""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

BACKEND = "compiled"


cdef long long _pair_rec(char* paired, int k, int unpaired) noexcept:
    cdef int a = 0, b
    cdef long long total = 0
    if unpaired == 0:
        return 1
    while paired[a]:
        a += 1
    paired[a] = 1
    for b in range(a + 1, k):
        if not paired[b]:
            paired[b] = 1
            total += _pair_rec(paired, k, unpaired - 2)
            paired[b] = 0
    paired[a] = 0
    return total


def pairing_count(int k):
    """Count perfect matchings of [k] by literal smallest-first recursion."""
    if k % 2:
        return 0
    cdef char* paired = <char*> malloc(k if k else 1)
    memset(paired, 0, k if k else 1)
    cdef long long out = _pair_rec(paired, k, k)
    free(paired)
    return out


cdef void _cross_rec(char* paired, long long* hist, int k,
                     int unpaired, int crossings) noexcept:
    cdef int a = 0, b, p, inside
    if unpaired == 0:
        hist[crossings] += 1
        return
    while paired[a]:
        a += 1
    paired[a] = 1
    for b in range(a + 1, k):
        if not paired[b]:
            inside = 0
            for p in range(a + 1, b):
                if paired[p]:
                    inside += 1
            paired[b] = 1
            _cross_rec(paired, hist, k, unpaired - 2, crossings + inside)
            paired[b] = 0
    paired[a] = 0


def crossing_histogram(int k):
    """hist[c] = number of perfect matchings of [k] with c crossings."""
    if k % 2:
        return [0]
    cdef int hsize = k * (k - 2) // 8 + 1
    cdef char* paired = <char*> malloc(k if k else 1)
    cdef long long* hist = <long long*> malloc(hsize * sizeof(long long))
    memset(paired, 0, k if k else 1)
    memset(hist, 0, hsize * sizeof(long long))
    _cross_rec(paired, hist, k, k, 0)
    out = [hist[i] for i in range(hsize)]
    free(paired)
    free(hist)
    return out


cdef long long _star_rec(char* paired, int* block, int* rem, int nblocks,
                         int k, int unpaired) noexcept:
    cdef int a = 0, b, i, maxrem = 0
    cdef long long total = 0
    if unpaired == 0:
        return 1
    for i in range(nblocks):
        if rem[i] > maxrem:
            maxrem = rem[i]
    if 2 * maxrem > unpaired:
        return 0
    while paired[a]:
        a += 1
    paired[a] = 1
    rem[block[a]] -= 1
    for b in range(a + 1, k):
        if not paired[b] and block[b] != block[a]:
            paired[b] = 1
            rem[block[b]] -= 1
            total += _star_rec(paired, block, rem, nblocks, k, unpaired - 2)
            rem[block[b]] += 1
            paired[b] = 0
    rem[block[a]] += 1
    paired[a] = 0
    return total


def star_pairing_count_enum(sizes):
    """Matchings of interval blocks with no intra-block pair, by pruned
    literal enumeration."""
    cdef int k = 0, nblocks = len(sizes), i, j, pos = 0
    for i in range(nblocks):
        k += sizes[i]
    if k % 2:
        return 0
    cdef char* paired = <char*> malloc(k if k else 1)
    cdef int* block = <int*> malloc((k if k else 1) * sizeof(int))
    cdef int* rem = <int*> malloc(nblocks * sizeof(int))
    memset(paired, 0, k if k else 1)
    for i in range(nblocks):
        rem[i] = sizes[i]
        for j in range(sizes[i]):
            block[pos] = i
            pos += 1
    cdef long long out = _star_rec(paired, block, rem, nblocks, k, k)
    free(paired)
    free(block)
    free(rem)
    return out


cdef long long _nc_pair_seg(int length) noexcept:
    cdef long long total = 0
    cdef int gap
    if length == 0:
        return 1
    for gap in range(0, length - 1, 2):
        total += _nc_pair_seg(gap) * _nc_pair_seg(length - 2 - gap)
    return total


def nc_pairing_count(int k):
    """Count non-crossing perfect matchings of [k] by interval DFS."""
    if k % 2:
        return 0
    return _nc_pair_seg(k)


cdef long long _ncp_grow(int suffix) noexcept:
    # region(L) is _ncp_grow(L - 1) for L >= 1, inlined to keep the
    # mutual recursion in one function
    cdef long long total = _ncp_grow(suffix - 1) if suffix > 0 else 1
    cdef long long gap_ways
    cdef int gap
    for gap in range(suffix):
        gap_ways = _ncp_grow(gap - 1) if gap > 0 else 1
        total += gap_ways * _ncp_grow(suffix - gap - 1)
    return total


def nc_partition_count(int k):
    """Count non-crossing partitions of [k] by first-block interval DFS."""
    if k == 0:
        return 1
    return _ncp_grow(k - 1)


cdef long long _nc_star_seg(int* block, int lo, int hi) noexcept:
    cdef long long total = 0
    cdef int j
    if lo == hi:
        return 1
    for j in range(lo + 1, hi, 2):
        if block[j] != block[lo]:
            total += _nc_star_seg(block, lo + 1, j) * _nc_star_seg(block, j + 1, hi)
    return total


def nc_star_pairing_count(sizes):
    """Non-crossing matchings of interval blocks with no intra-block pair."""
    cdef int k = 0, nblocks = len(sizes), i, j, pos = 0
    for i in range(nblocks):
        k += sizes[i]
    if k % 2:
        return 0
    cdef int* block = <int*> malloc((k if k else 1) * sizeof(int))
    for i in range(nblocks):
        for j in range(sizes[i]):
            block[pos] = i
            pos += 1
    cdef long long out = _nc_star_seg(block, 0, k)
    free(block)
    return out


cdef struct WordState:
    long long* rows      # R x d row-major, indices 1..n
    double* coeffs
    int d
    int m
    int* starts
    int* stops
    double* moments
    int* cnt             # multiplicity per index, 1..n
    int* touched         # stack of currently-present indices
    int ntouched
    double total
    double comp
    long long words


cdef void _wsum_rec(WordState* st, int slot, double prod) noexcept:
    cdef int r, i, idx, newly
    cdef double factor, y, t
    if slot == st.m:
        factor = 1.0
        for i in range(st.ntouched):
            factor *= st.moments[st.cnt[st.touched[i]]]
        st.words += 1
        y = prod * factor - st.comp
        t = st.total + y
        st.comp = (t - st.total) - y
        st.total = t
        return
    for r in range(st.starts[slot], st.stops[slot]):
        newly = 0
        for i in range(st.d):
            idx = <int> st.rows[r * st.d + i]
            if st.cnt[idx] == 0:
                st.touched[st.ntouched] = idx
                st.ntouched += 1
                newly += 1
            st.cnt[idx] += 1
        _wsum_rec(st, slot + 1, prod * st.coeffs[r])
        for i in range(st.d):
            idx = <int> st.rows[r * st.d + i]
            st.cnt[idx] -= 1
        st.ntouched -= newly


def weighted_moment_sum(rows, coeffs, slot_starts, slot_stops, moments):
    """Float word-sum engine; see chaoskit._pure.weighted_moment_sum."""
    cdef int R = len(rows), d = len(rows[0]) if R else 0
    cdef int m = len(slot_starts), nmom = len(moments)
    cdef int i, j, nmax = 0
    cdef WordState st
    st.rows = <long long*> malloc((R * d if R * d else 1) * sizeof(long long))
    st.coeffs = <double*> malloc((R if R else 1) * sizeof(double))
    for i in range(R):
        row = rows[i]
        st.coeffs[i] = coeffs[i]
        for j in range(d):
            st.rows[i * d + j] = row[j]
            if row[j] > nmax:
                nmax = row[j]
    st.d = d
    st.m = m
    st.starts = <int*> malloc(m * sizeof(int))
    st.stops = <int*> malloc(m * sizeof(int))
    for i in range(m):
        st.starts[i] = slot_starts[i]
        st.stops[i] = slot_stops[i]
    st.moments = <double*> malloc(nmom * sizeof(double))
    for i in range(nmom):
        st.moments[i] = moments[i]
    st.cnt = <int*> malloc((nmax + 1) * sizeof(int))
    memset(st.cnt, 0, (nmax + 1) * sizeof(int))
    st.touched = <int*> malloc((d * m if d * m else 1) * sizeof(int))
    st.ntouched = 0
    st.total = 0.0
    st.comp = 0.0
    st.words = 0
    _wsum_rec(&st, 0, 1.0)
    out = (st.total, st.words)
    free(st.rows); free(st.coeffs); free(st.starts); free(st.stops)
    free(st.moments); free(st.cnt); free(st.touched)
    return out


cdef void _sig_rec(WordState* st, int slot, dict hist) noexcept:
    cdef int r, i, j, idx, newly, tmp
    cdef int sig[32]
    if slot == st.m:
        for i in range(st.ntouched):
            sig[i] = st.cnt[st.touched[i]]
        # insertion sort ascending
        for i in range(1, st.ntouched):
            tmp = sig[i]
            j = i - 1
            while j >= 0 and sig[j] > tmp:
                sig[j + 1] = sig[j]
                j -= 1
            sig[j + 1] = tmp
        key = tuple([sig[i] for i in range(st.ntouched)])
        hist[key] = hist.get(key, 0) + 1
        return
    for r in range(st.starts[slot], st.stops[slot]):
        newly = 0
        for i in range(st.d):
            idx = <int> st.rows[r * st.d + i]
            if st.cnt[idx] == 0:
                st.touched[st.ntouched] = idx
                st.ntouched += 1
                newly += 1
            st.cnt[idx] += 1
        _sig_rec(st, slot + 1, hist)
        for i in range(st.d):
            idx = <int> st.rows[r * st.d + i]
            st.cnt[idx] -= 1
        st.ntouched -= newly


def signature_histogram(rows, slot_starts, slot_stops):
    """Histogram of words by sorted index-multiplicity profile."""
    cdef int R = len(rows), d = len(rows[0]) if R else 0
    cdef int m = len(slot_starts)
    cdef int i, j, nmax = 0
    cdef WordState st
    st.rows = <long long*> malloc((R * d if R * d else 1) * sizeof(long long))
    for i in range(R):
        row = rows[i]
        for j in range(d):
            st.rows[i * d + j] = row[j]
            if row[j] > nmax:
                nmax = row[j]
    st.coeffs = NULL
    st.moments = NULL
    st.d = d
    st.m = m
    st.starts = <int*> malloc(m * sizeof(int))
    st.stops = <int*> malloc(m * sizeof(int))
    for i in range(m):
        st.starts[i] = slot_starts[i]
        st.stops[i] = slot_stops[i]
    st.cnt = <int*> malloc((nmax + 1) * sizeof(int))
    memset(st.cnt, 0, (nmax + 1) * sizeof(int))
    st.touched = <int*> malloc((d * m if d * m else 1) * sizeof(int))
    st.ntouched = 0
    hist = {}
    _sig_rec(&st, 0, hist)
    free(st.rows); free(st.starts); free(st.stops)
    free(st.cnt); free(st.touched)
    return hist
