"""Set partitions, pairings, and the restricted pairing classes behind
every exact moment formula.

Ground sets are [k] = {1, ..., k}.  Enumerators are lazy streams in a
fixed order (smallest-unpaired-element-first recursion) so golden tests
stay stable; counts use exact integers throughout.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from chaoskit import _backend
from chaoskit.errors import OddGround, ShapeMismatch, TooLarge

MAX_PAIRING_GROUND = 20
MAX_NC_PAIRING_GROUND = 24
MAX_NC_PARTITION_GROUND = 14
MAX_STAR_K = 5

Blocks = tuple[tuple[int, ...], ...]


class SetPartition:
    """Canonical set partition: blocks sorted internally and by minimum."""

    __slots__ = ("ground_size", "blocks")

    def __init__(self, ground_size: int, blocks, _trusted: bool = False):
        if _trusted:
            self.ground_size = ground_size
            self.blocks = blocks
            return
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks),
                             key=lambda b: b[0]))
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise ValueError("empty block")
            seen.update(b)
        if len(seen) != sum(len(b) for b in canon) or \
                seen != set(range(1, ground_size + 1)):
            raise ValueError("blocks must partition [ground_size]")
        self.ground_size = ground_size
        self.blocks = canon

    def __eq__(self, other) -> bool:
        return (isinstance(other, SetPartition)
                and self.ground_size == other.ground_size
                and self.blocks == other.blocks)

    def __hash__(self) -> int:
        return hash((self.ground_size, self.blocks))

    def __repr__(self) -> str:
        body = "|".join("".join(str(x) for x in b) for b in self.blocks)
        return f"{{{body}}}"

    @property
    def is_pairing(self) -> bool:
        return all(len(b) == 2 for b in self.blocks)


class Pairing(SetPartition):
    """Partition with all blocks of size 2."""

    __slots__ = ()

    def __init__(self, ground_size: int, blocks, _trusted: bool = False):
        super().__init__(ground_size, blocks, _trusted)
        if not _trusted and not self.is_pairing:
            raise ValueError("blocks must all have size 2")


def enumerate_pairings(k: int) -> Iterator[Pairing]:
    """All (k-1)!! pairings of [k], smallest-unpaired-first order."""
    if k % 2:
        raise OddGround(f"no pairings of odd ground set {k}")
    if k > MAX_PAIRING_GROUND:
        raise TooLarge(f"pairing enumeration capped at k={MAX_PAIRING_GROUND}")

    def rec(items: tuple[int, ...], acc: Blocks) -> Iterator[Blocks]:
        if not items:
            yield acc
            return
        a = items[0]
        rest = items[1:]
        for i, b in enumerate(rest):
            yield from rec(rest[:i] + rest[i + 1:], acc + ((a, b),))

    for blocks in rec(tuple(range(1, k + 1)), ()):
        yield Pairing(k, blocks, _trusted=True)


def crossing_count(p: SetPartition) -> int:
    """Number of crossing pair-pairs: {a<b}, {c<d} cross iff a<c<b<d."""
    blocks = p.blocks
    total = 0
    for (a, b), (c, d) in combinations(blocks, 2):
        if a < c < b < d or c < a < d < b:
            total += 1
    return total


def enumerate_nc_pairings(k: int) -> Iterator[Pairing]:
    """All Catalan(k/2) non-crossing pairings of [k]."""
    if k % 2:
        raise OddGround(f"no pairings of odd ground set {k}")
    if k > MAX_NC_PAIRING_GROUND:
        raise TooLarge(
            f"non-crossing pairing enumeration capped at k={MAX_NC_PAIRING_GROUND}")

    def seg(items: tuple[int, ...]) -> Iterator[Blocks]:
        if not items:
            yield ()
            return
        a = items[0]
        for j in range(1, len(items), 2):
            for inner in seg(items[1:j]):
                for outer in seg(items[j + 1:]):
                    yield ((a, items[j]),) + inner + outer

    for blocks in seg(tuple(range(1, k + 1))):
        yield Pairing(k, tuple(sorted(blocks)), _trusted=True)


def enumerate_nc_partitions(k: int) -> Iterator[SetPartition]:
    """All Catalan(k) non-crossing partitions of [k]."""
    if k > MAX_NC_PARTITION_GROUND:
        raise TooLarge(
            f"non-crossing partition enumeration capped at k={MAX_NC_PARTITION_GROUND}")

    def region(items: tuple[int, ...]) -> Iterator[Blocks]:
        if not items:
            yield ()
            return
        yield from grow((items[0],), items[1:])

    def grow(block: tuple[int, ...], suffix: tuple[int, ...]) -> Iterator[Blocks]:
        for rest in region(suffix):
            yield (block,) + rest
        for j, nxt in enumerate(suffix):
            for gap in region(suffix[:j]):
                for done in grow(block + (nxt,), suffix[j + 1:]):
                    yield gap + done

    for blocks in region(tuple(range(1, k + 1))):
        yield SetPartition(k, tuple(sorted(blocks, key=lambda b: b[0])),
                           _trusted=True)


def index_kernel(word) -> SetPartition:
    """Partition of positions 1..k grouping equal labels of the word."""
    letters = tuple(word)
    groups: dict[object, list[int]] = {}
    for pos, label in enumerate(letters, start=1):
        groups.setdefault(label, []).append(pos)
    blocks = tuple(sorted((tuple(b) for b in groups.values()),
                          key=lambda b: b[0]))
    return SetPartition(len(letters), blocks, _trusted=True)


def refines(p: SetPartition, q: SetPartition) -> bool:
    """True iff every block of p is contained in some block of q."""
    if p.ground_size != q.ground_size:
        raise ShapeMismatch("partitions live on different ground sets")
    owner: dict[int, int] = {}
    for bi, b in enumerate(q.blocks):
        for x in b:
            owner[x] = bi
    for b in p.blocks:
        if any(owner[x] != owner[b[0]] for x in b[1:]):
            return False
    return True


@lru_cache(maxsize=None)
def star_pairing_count(sizes: tuple[int, ...]) -> int:
    """Matchings of interval blocks (given sizes) with no pair inside a
    block.  Counted by recursion on remaining slots per block: match one
    element of the fullest block against each other block."""
    state = tuple(sorted(s for s in sizes if s))
    return _star_dp(state)


@lru_cache(maxsize=None)
def _star_dp(state: tuple[int, ...]) -> int:
    if not state:
        return 1
    if sum(state) % 2 or 2 * state[-1] > sum(state):
        return 0
    picked = state[-1] - 1
    total = 0
    for j in range(len(state) - 1):
        nxt = list(state[:-1])
        nxt[j] -= 1
        if picked:
            nxt.append(picked)
        total += state[j] * _star_dp(tuple(sorted(x for x in nxt if x)))
    return total


def count_star_pairings(k: int, noncrossing: bool) -> int:
    """Size of the pairing class of [4k] in which every pair meets each
    of the four interval blocks {1..k}, ..., {3k+1..4k} at most once;
    non-crossing pairings only when the flag is set."""
    if not 1 <= k <= MAX_STAR_K:
        raise TooLarge(f"star pairing counts capped at k={MAX_STAR_K}")
    sizes = (k, k, k, k)
    if noncrossing:
        return _backend.nc_star_pairing_count(sizes)
    return star_pairing_count(sizes)


def count_pairings(k: int) -> int:
    """Exact |pairings of [k]| via the backend enumeration counter."""
    if k % 2:
        raise OddGround(f"no pairings of odd ground set {k}")
    if k > MAX_PAIRING_GROUND:
        raise TooLarge(f"pairing counting capped at k={MAX_PAIRING_GROUND}")
    return _backend.pairing_count(k)


def count_nc_pairings(k: int) -> int:
    if k % 2:
        raise OddGround(f"no pairings of odd ground set {k}")
    if k > MAX_NC_PAIRING_GROUND:
        raise TooLarge(
            f"non-crossing pairing counting capped at k={MAX_NC_PAIRING_GROUND}")
    return _backend.nc_pairing_count(k)


def count_nc_partitions(k: int) -> int:
    if k > MAX_NC_PARTITION_GROUND:
        raise TooLarge(
            f"non-crossing partition counting capped at k={MAX_NC_PARTITION_GROUND}")
    return _backend.nc_partition_count(k)
