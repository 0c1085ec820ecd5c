"""Pure-Python twins of the compiled enumeration kernels.

Same algorithms, same visit order, same results as chaoskit._core; the
compiled module is just these loops with C integer/double types.  All
counting is exact integer arithmetic.
"""

from __future__ import annotations

BACKEND = "pure"


def pairing_count(k: int) -> int:
    """Count perfect matchings of [k] by literal smallest-first recursion."""
    if k % 2:
        return 0
    paired = [False] * k

    def rec(unpaired: int) -> int:
        if unpaired == 0:
            return 1
        a = 0
        while paired[a]:
            a += 1
        paired[a] = True
        total = 0
        for b in range(a + 1, k):
            if not paired[b]:
                paired[b] = True
                total += rec(unpaired - 2)
                paired[b] = False
        paired[a] = False
        return total

    return rec(k)


def crossing_histogram(k: int) -> list[int]:
    """hist[c] = number of perfect matchings of [k] with exactly c crossings.

    Pairs {a<b}, {c<d} cross iff a < c < b < d.  Crossings are counted
    incrementally: when (a, b) is added with a the smallest unpaired
    position, every already-paired position strictly inside (a, b) is a
    closing endpoint whose opening lies left of a, hence one crossing.
    """
    if k % 2:
        return [0]
    hist = [0] * (k * (k - 2) // 8 + 1)
    paired = [False] * k

    def rec(unpaired: int, crossings: int) -> None:
        if unpaired == 0:
            hist[crossings] += 1
            return
        a = 0
        while paired[a]:
            a += 1
        paired[a] = True
        for b in range(a + 1, k):
            if not paired[b]:
                inside = 0
                for p in range(a + 1, b):
                    if paired[p]:
                        inside += 1
                paired[b] = True
                rec(unpaired - 2, crossings + inside)
                paired[b] = False
        paired[a] = False

    rec(k, 0)
    return hist


def star_pairing_count_enum(sizes: tuple[int, ...]) -> int:
    """Matchings of interval blocks with no pair inside a block, by
    pruned literal enumeration (cross-check engine for small grounds)."""
    k = sum(sizes)
    if k % 2:
        return 0
    block = []
    for b, s in enumerate(sizes):
        block.extend([b] * s)
    rem = list(sizes)
    paired = [False] * k

    def rec(unpaired: int) -> int:
        if unpaired == 0:
            return 1
        if 2 * max(rem) > unpaired:
            return 0
        a = 0
        while paired[a]:
            a += 1
        ba = block[a]
        paired[a] = True
        rem[ba] -= 1
        total = 0
        for b in range(a + 1, k):
            if not paired[b] and block[b] != ba:
                paired[b] = True
                rem[block[b]] -= 1
                total += rec(unpaired - 2)
                rem[block[b]] += 1
                paired[b] = False
        rem[ba] += 1
        paired[a] = False
        return total

    return rec(k)


def nc_pairing_count(k: int) -> int:
    """Count non-crossing perfect matchings of [k] by interval DFS."""
    if k % 2:
        return 0

    def seg(length: int) -> int:
        if length == 0:
            return 1
        total = 0
        for gap in range(0, length - 1, 2):
            total += seg(gap) * seg(length - 2 - gap)
        return total

    return seg(k)


def nc_partition_count(k: int) -> int:
    """Count non-crossing partitions of [k] by first-block interval DFS."""

    def grow(suffix: int) -> int:
        # current block may close (suffix becomes an independent region)
        # or absorb one more member after a gap that closes on itself
        total = region(suffix)
        for gap in range(suffix):
            total += region(gap) * grow(suffix - gap - 1)
        return total

    def region(length: int) -> int:
        if length == 0:
            return 1
        return grow(length - 1)

    return region(k)


def nc_star_pairing_count(sizes: tuple[int, ...]) -> int:
    """Non-crossing matchings of interval blocks with no intra-block pair."""
    k = sum(sizes)
    if k % 2:
        return 0
    block = []
    for b, s in enumerate(sizes):
        block.extend([b] * s)
    positions = list(range(k))

    def seg(lo: int, hi: int) -> int:
        # positions[lo:hi] of the original line; blocks confine pairs
        if lo == hi:
            return 1
        a = positions[lo]
        total = 0
        for j in range(lo + 1, hi, 2):
            if block[positions[j]] != block[a]:
                total += seg(lo + 1, j) * seg(j + 1, hi)
        return total

    return seg(0, k)


def weighted_moment_sum(rows, coeffs, slot_starts, slot_stops, moments):
    """Sum over words (one row per slot) of prod(coeff) * prod over
    indices of moments[multiplicity].  Float engine with compensated
    accumulation; returns (total, words_visited)."""
    rows = [tuple(r) for r in rows]
    coeffs = [float(c) for c in coeffs]
    moments = [float(v) for v in moments]
    m = len(slot_starts)
    counts: dict[int, int] = {}
    total = 0.0
    comp = 0.0
    words = 0

    def rec(slot: int, prod: float) -> None:
        nonlocal total, comp, words
        if slot == m:
            factor = 1.0
            for c in counts.values():
                factor *= moments[c]
            words += 1
            y = prod * factor - comp
            t = total + y
            comp = (t - total) - y
            total = t
            return
        for r in range(slot_starts[slot], slot_stops[slot]):
            row = rows[r]
            for i in row:
                counts[i] = counts.get(i, 0) + 1
            rec(slot + 1, prod * coeffs[r])
            for i in row:
                c = counts[i] - 1
                if c:
                    counts[i] = c
                else:
                    del counts[i]

    rec(0, 1.0)
    return total, words


def signature_histogram(rows, slot_starts, slot_stops):
    """Histogram of words by the sorted multiplicity profile of their
    index word (the block sizes of its position partition)."""
    rows = [tuple(r) for r in rows]
    m = len(slot_starts)
    counts: dict[int, int] = {}
    hist: dict[tuple[int, ...], int] = {}

    def rec(slot: int) -> None:
        if slot == m:
            sig = tuple(sorted(counts.values()))
            hist[sig] = hist.get(sig, 0) + 1
            return
        for r in range(slot_starts[slot], slot_stops[slot]):
            row = rows[r]
            for i in row:
                counts[i] = counts.get(i, 0) + 1
            rec(slot + 1)
            for i in row:
                c = counts[i] - 1
                if c:
                    counts[i] = c
                else:
                    del counts[i]

    rec(0)
    return hist
