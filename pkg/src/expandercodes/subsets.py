"""Right-vertex subsets as fixed-width bitsets, plus deterministic subset
enumeration shared by every exhaustive search in the package.

Order contract: subsets are visited by increasing cardinality and, within
one cardinality, lexicographically on the sorted index tuple (the order
``itertools.combinations`` produces). ``combination_rank`` converts a
combination back to its position in that order, which lets a partitioned
parallel scan report the exact counters a sequential scan would.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence


def bit_indices(bits: int) -> tuple[int, ...]:
    """Positions of the set bits of a nonnegative int, ascending."""
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return tuple(out)


@dataclass(frozen=True)
class RightSubset:
    """A subset of the right vertices [0, n) packed into one int.

    Immutable; set bits may only appear at positions below ``n``.
    """

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"universe size must be >= 0, got {self.n}")
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError("subset has bits outside the universe [0, n)")

    @classmethod
    def of(cls, n: int, indices: Iterable[int]) -> "RightSubset":
        bits = 0
        for i in indices:
            if not 0 <= i < n:
                raise IndexError(f"right-vertex index {i} out of range [0, {n})")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> "RightSubset":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "RightSubset":
        return cls(n, (1 << n) - 1)

    @property
    def indices(self) -> tuple[int, ...]:
        return bit_indices(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.bits >> v) & 1 == 1

    def __xor__(self, other: "RightSubset") -> "RightSubset":
        if self.n != other.n:
            raise ValueError("symmetric difference needs matching universes")
        return RightSubset(self.n, self.bits ^ other.bits)

    def toggled(self, v: int) -> "RightSubset":
        if not 0 <= v < self.n:
            raise IndexError(f"right-vertex index {v} out of range [0, {self.n})")
        return RightSubset(self.n, self.bits ^ (1 << v))


def combination_rank(combo: Sequence[int], n: int) -> int:
    """0-based position of a sorted combination among C(n, k) in lex order."""
    k = len(combo)
    rank = 0
    prev = -1
    for i, c in enumerate(combo):
        for j in range(prev + 1, c):
            rank += math.comb(n - 1 - j, k - 1 - i)
        prev = c
    return rank


def count_sizes(n: int, lo: int, hi: int) -> int:
    """Number of subsets of [0, n) with size in [lo, hi]."""
    return sum(math.comb(n, s) for s in range(max(lo, 0), min(hi, n) + 1))


def scan_xor_zero(cols: Sequence[int], universe: Sequence[int], k: int, acc0: int):
    """First k-combination of ``universe`` (lex order) whose selected columns
    XOR with ``acc0`` to zero; None if there is none.

    The XOR accumulator is updated incrementally over the suffix that
    changes between consecutive combinations, so a step costs O(changed)
    single-int XORs rather than O(k).
    """
    u = len(universe)
    if k == 0:
        return () if acc0 == 0 else None
    if k > u:
        return None
    idx = list(range(k))
    acc = acc0
    for i in idx:
        acc ^= cols[universe[i]]
    while True:
        if acc == 0:
            return tuple(universe[i] for i in idx)
        i = k - 1
        while i >= 0 and idx[i] == u - k + i:
            i -= 1
        if i < 0:
            return None
        for j in range(i, k):
            acc ^= cols[universe[idx[j]]]
        base = idx[i] + 1
        for j in range(i, k):
            idx[j] = base + (j - i)
            acc ^= cols[universe[idx[j]]]


def scan_union_below(
    masks: Sequence[int],
    universe: Sequence[int],
    k: int,
    acc0: int,
    min_required: int,
):
    """First k-combination of ``universe`` (lex order) whose neighborhood
    union (OR of masks, seeded with ``acc0``) has fewer than ``min_required``
    set bits; None if every combination meets the requirement.

    Unions cannot be un-done, so a prefix stack is kept and only the changed
    suffix is recomputed on each step.
    """
    u = len(universe)
    if k == 0:
        return () if acc0.bit_count() < min_required else None
    if k > u:
        return None
    idx = list(range(k))
    pref = [0] * k

    def refill(start: int) -> None:
        run = acc0 if start == 0 else pref[start - 1]
        for j in range(start, k):
            run |= masks[universe[idx[j]]]
            pref[j] = run

    refill(0)
    while True:
        if pref[k - 1].bit_count() < min_required:
            return tuple(universe[i] for i in idx)
        i = k - 1
        while i >= 0 and idx[i] == u - k + i:
            i -= 1
        if i < 0:
            return None
        base = idx[i] + 1
        for j in range(i, k):
            idx[j] = base + (j - i)
        refill(i)


def level_min_union(masks: Sequence[int], n: int, k: int) -> int | None:
    """Minimum popcount of the mask union over all k-subsets of [0, n)."""
    if k == 0 or k > n:
        return None
    idx = list(range(k))
    pref = [0] * k

    def refill(start: int) -> None:
        run = 0 if start == 0 else pref[start - 1]
        for j in range(start, k):
            run |= masks[idx[j]]
            pref[j] = run

    refill(0)
    best = pref[k - 1].bit_count()
    while True:
        i = k - 1
        while i >= 0 and idx[i] == n - k + i:
            i -= 1
        if i < 0:
            return best
        base = idx[i] + 1
        for j in range(i, k):
            idx[j] = base + (j - i)
        refill(i)
        count = pref[k - 1].bit_count()
        if count < best:
            best = count


def find_first_at_level(
    scan: Callable[[Sequence[int], int, int], tuple | None],
    seed: Callable[[int], int],
    n: int,
    k: int,
    workers: int = 1,
):
    """Run ``scan`` over the k-subsets of [0, n), optionally partitioned.

    With ``workers > 1`` the level is split by leading element; partition
    results are reduced in enumeration order (not arrival order), so the
    returned combination is identical to a sequential scan.
    """
    if k > n or k < 1:
        return None
    if workers <= 1 or n - k + 1 <= 1:
        return scan(range(n), k, 0)
    leads = range(n - k + 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = {a: pool.submit(scan, range(a + 1, n), k - 1, seed(a)) for a in leads}
        hit = None
        for a in leads:
            found = futures[a].result()
            if found is not None:
                hit = (a,) + found
                for b in leads:
                    if b > a:
                        futures[b].cancel()
                break
    return hit
