"""Bipartite graphs, the odd-neighborhood operator, and exhaustive
verification of the vertex-expansion property.

A graph has parts L (size m, "left") and R (size n, "right"); every edge
joins a left vertex to a right vertex. The right side indexes code bits:
the biadjacency matrix doubles as a parity-check matrix, and the odd
neighborhood of a right subset S is exactly the support of the mod-2 sum
of the matrix columns indexed by S.

All thresholds are exact rationals (``fractions.Fraction``); floats are
rejected so equality cases like |N(S)| = 8/3 never hinge on rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .errors import CapabilityError
from .gf2 import Gf2Matrix
from .subsets import (
    RightSubset,
    bit_indices,
    count_sizes,
    find_first_at_level,
    level_min_union,
    scan_union_below,
)

# Default ceiling on the number of subsets one exhaustive operation may
# enumerate. Exceeding it raises CapabilityError, never a truncated answer.
DEFAULT_SUBSET_BUDGET = 1 << 28


def exact_rational(value, name: str) -> Fraction:
    """Coerce to Fraction, rejecting floats outright."""
    if isinstance(value, float):
        raise TypeError(f"{name} must be an exact rational (int or Fraction), not float")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"{name} must be an exact rational (int or Fraction)")


@dataclass(frozen=True)
class BipartiteGraph:
    """Immutable bipartite graph stored as sorted neighbor tuples per right
    vertex, with packed left-neighborhood masks derived once at construction.

    ``d`` is the uniform right-degree when every right vertex has the same
    number of neighbors, else None.
    """

    m: int
    n: int
    right_adj: tuple[tuple[int, ...], ...]
    d: int | None = field(init=False, compare=False)
    _masks: tuple[int, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("vertex counts must be >= 0")
        adj = tuple(tuple(sorted(neigh)) for neigh in self.right_adj)
        if len(adj) != self.n:
            raise ValueError(f"expected {self.n} right adjacency lists, got {len(adj)}")
        masks = []
        for j, neigh in enumerate(adj):
            if len(set(neigh)) != len(neigh):
                raise ValueError(f"right vertex {j} has a duplicate edge")
            mask = 0
            for i in neigh:
                if not 0 <= i < self.m:
                    raise ValueError(
                        f"right vertex {j}: left index {i} out of range [0, {self.m})"
                    )
                mask |= 1 << i
            masks.append(mask)
        degrees = {len(neigh) for neigh in adj}
        object.__setattr__(self, "right_adj", adj)
        object.__setattr__(self, "d", degrees.pop() if len(degrees) == 1 else None)
        object.__setattr__(self, "_masks", tuple(masks))

    @classmethod
    def from_edges(cls, m: int, n: int, edges: Iterable[tuple[int, int]]) -> "BipartiteGraph":
        adj: list[list[int]] = [[] for _ in range(n)]
        for left, right in edges:
            if not 0 <= right < n:
                raise ValueError(f"right index {right} out of range [0, {n})")
            adj[right].append(left)
        return cls(m, n, tuple(tuple(a) for a in adj))

    @classmethod
    def from_biadjacency(cls, matrix: Gf2Matrix) -> "BipartiteGraph":
        return cls(
            matrix.rows,
            matrix.cols,
            tuple(bit_indices(col) for col in matrix.columns),
        )

    @property
    def is_right_regular(self) -> bool:
        return self.d is not None

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.right_adj)

    def neighbors(self, v: int) -> frozenset[int]:
        """N(v) for a right vertex v."""
        if not 0 <= v < self.n:
            raise IndexError(f"right-vertex index {v} out of range [0, {self.n})")
        return frozenset(self.right_adj[v])

    def neighbor_mask(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"right-vertex index {v} out of range [0, {self.n})")
        return self._masks[v]

    def neighbor_set(self, subset: RightSubset) -> frozenset[int]:
        """N(S): union of the neighborhoods of the vertices in S."""
        self._check_subset(subset)
        acc = 0
        for j in subset.indices:
            acc |= self._masks[j]
        return frozenset(bit_indices(acc))

    def odd_neighborhood(self, subset: RightSubset) -> frozenset[int]:
        """Left vertices with an odd number of neighbors in S.

        Equals the support of the mod-2 column sum of the biadjacency
        matrix over S, so it is empty exactly when the indicator vector of
        S is a codeword.
        """
        self._check_subset(subset)
        return frozenset(bit_indices(self._odd_mask(subset.bits)))

    def _odd_mask(self, bits: int) -> int:
        acc = 0
        while bits:
            low = bits & -bits
            acc ^= self._masks[low.bit_length() - 1]
            bits ^= low
        return acc

    def biadjacency(self) -> Gf2Matrix:
        """m x n matrix with entry (i, j) = 1 iff left i is adjacent to right j."""
        return Gf2Matrix(self.m, self.n, self._masks)

    def _check_subset(self, subset: RightSubset) -> None:
        if subset.n != self.n:
            raise IndexError(
                f"subset universe size {subset.n} does not match right side {self.n}"
            )


@dataclass(frozen=True)
class ExpansionViolation:
    """Concrete counterexample to |N(S)| >= d*alpha*|S|."""

    subset: RightSubset
    neighbor_count: int
    required: Fraction

    def to_record(self, m: int) -> dict:
        indices = list(self.subset.indices)
        return {
            "indices": indices,
            "labels": [m + 1 + j for j in indices],
            "neighbors": self.neighbor_count,
            "required": str(self.required),
        }


@dataclass(frozen=True)
class ExpanderCertificate:
    """Outcome of exhaustively checking the expansion inequality on one graph.

    When ``verified`` no nonempty subset of size <= floor(gamma*n) violates
    |N(S)| >= d*alpha*|S|; otherwise ``violation`` is the first
    counterexample in (cardinality, lex) enumeration order.
    """

    graph: BipartiteGraph
    gamma: Fraction
    alpha: Fraction
    verified: bool
    violation: ExpansionViolation | None

    def to_record(self) -> dict:
        g = self.graph
        return {
            "m": g.m,
            "n": g.n,
            "d": g.d,
            "gamma": str(self.gamma),
            "alpha": str(self.alpha),
            "verified": self.verified,
            "violation": None if self.violation is None else self.violation.to_record(g.m),
        }


@dataclass(frozen=True)
class ExpansionProfile:
    """Exact min |N(S)| per subset size, for sizes 1..s_max."""

    n: int
    d: int | None
    min_neighbors: tuple[int, ...]

    @property
    def s_max(self) -> int:
        return len(self.min_neighbors)

    def min_at(self, size: int) -> int:
        if not 1 <= size <= self.s_max:
            raise IndexError(f"size {size} outside the profiled range [1, {self.s_max}]")
        return self.min_neighbors[size - 1]

    def best_alpha(self, gamma) -> Fraction | None:
        """Largest alpha for which the graph expands at this gamma, i.e.
        min over sizes s <= floor(gamma*n) of min_neighbors(s) / (d*s).

        None when floor(gamma*n) < 1 (nothing to constrain).
        """
        if self.d is None:
            raise ValueError("best_alpha requires a right-regular graph")
        gamma = exact_rational(gamma, "gamma")
        cap = min(self.n, math.floor(gamma * self.n))
        if cap < 1:
            return None
        if cap > self.s_max:
            raise ValueError(
                f"profile covers sizes up to {self.s_max}, need {cap} for this gamma"
            )
        return min(Fraction(self.min_neighbors[s - 1], self.d * s) for s in range(1, cap + 1))

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "min_neighbors": list(self.min_neighbors),
        }


def check_expansion(
    graph: BipartiteGraph,
    gamma,
    alpha,
    budget: int = DEFAULT_SUBSET_BUDGET,
    workers: int = 1,
) -> ExpanderCertificate:
    """Exhaustively certify |N(S)| >= d*alpha*|S| for all nonempty S with
    |S| <= floor(gamma*n).

    Comparisons are exact rational; the reported counterexample (if any) is
    the first in (cardinality, lex) order regardless of ``workers``.
    """
    gamma = exact_rational(gamma, "gamma")
    alpha = exact_rational(alpha, "alpha")
    if gamma <= 0:
        raise ValueError(f"gamma must be > 0, got {gamma}")
    if alpha <= 0:
        raise ValueError(f"alpha must be > 0, got {alpha}")
    if graph.d is None or graph.d < 1:
        raise ValueError("expansion checking requires a right-regular graph with d >= 1")
    d, n = graph.d, graph.n
    cap = min(n, math.floor(gamma * n))
    planned = count_sizes(n, 1, cap)
    if planned > budget:
        raise CapabilityError(
            f"checking all subsets up to size {cap} needs {planned} subsets, "
            f"over the budget of {budget}"
        )
    masks = graph._masks
    for k in range(1, cap + 1):
        required = d * alpha * k
        min_required = math.ceil(required)
        if min_required <= 0:
            continue

        def scan(universe, kk, acc0, _req=min_required):
            return scan_union_below(masks, universe, kk, acc0, _req)

        hit = find_first_at_level(scan, lambda a: masks[a], n, k, workers)
        if hit is not None:
            subset = RightSubset.of(n, hit)
            count = len(graph.neighbor_set(subset))
            return ExpanderCertificate(
                graph, gamma, alpha, False, ExpansionViolation(subset, count, required)
            )
    return ExpanderCertificate(graph, gamma, alpha, True, None)


def expansion_profile(
    graph: BipartiteGraph,
    s_max: int,
    budget: int = DEFAULT_SUBSET_BUDGET,
) -> ExpansionProfile:
    """Exact min |N(S)| for every subset size 1..s_max (full enumeration)."""
    if s_max < 0 or s_max > graph.n:
        raise ValueError(f"s_max must be in [0, {graph.n}], got {s_max}")
    planned = count_sizes(graph.n, 1, s_max)
    if planned > budget:
        raise CapabilityError(
            f"profiling sizes up to {s_max} needs {planned} subsets, "
            f"over the budget of {budget}"
        )
    mins = []
    for k in range(1, s_max + 1):
        best = level_min_union(graph._masks, graph.n, k)
        mins.append(best if best is not None else 0)
    return ExpansionProfile(graph.n, graph.d, tuple(mins))


def odd_neighborhood_bounds(graph: BipartiteGraph, subset: RightSubset, epsilon):
    """The sandwich (d*(1-2*eps)*|S|, |odd neighborhood of S|, |N(S)|).

    On a graph certified to expand with alpha = 1 - eps and |S| <= gamma*n,
    the three values are nondecreasing left to right.
    """
    epsilon = exact_rational(epsilon, "epsilon")
    if graph.d is None:
        raise ValueError("bounds require a right-regular graph")
    if len(subset) == 0:
        raise ValueError("bounds require a nonempty subset")
    graph._check_subset(subset)
    lower = graph.d * (1 - 2 * epsilon) * len(subset)
    odd = graph._odd_mask(subset.bits).bit_count()
    nbhd = len(graph.neighbor_set(subset))
    return lower, odd, nbhd


@dataclass(frozen=True)
class BoundsSweep:
    """Exhaustive run of the sandwich inequality over all nonempty subsets
    up to floor(gamma*n); ``violation`` holds the first failure if any."""

    gamma: Fraction
    epsilon: Fraction
    size_cap: int
    subsets_checked: int
    violation: tuple[RightSubset, Fraction, int, int] | None

    def to_record(self, m: int) -> dict:
        rec = {
            "gamma": str(self.gamma),
            "epsilon": str(self.epsilon),
            "size_cap": self.size_cap,
            "subsets_checked": self.subsets_checked,
            "violation": None,
        }
        if self.violation is not None:
            subset, lower, odd, nbhd = self.violation
            indices = list(subset.indices)
            rec["violation"] = {
                "indices": indices,
                "labels": [m + 1 + j for j in indices],
                "lower": str(lower),
                "odd_neighborhood": odd,
                "neighborhood": nbhd,
            }
        return rec


def find_bounds_violation(
    graph: BipartiteGraph,
    gamma,
    epsilon,
    budget: int = DEFAULT_SUBSET_BUDGET,
) -> BoundsSweep:
    """Scan all nonempty S with |S| <= floor(gamma*n) for a failure of
    d*(1-2*eps)*|S| <= |odd(S)| <= |N(S)|, in (cardinality, lex) order."""
    gamma = exact_rational(gamma, "gamma")
    epsilon = exact_rational(epsilon, "epsilon")
    if graph.d is None:
        raise ValueError("the bounds sweep requires a right-regular graph")
    n, d = graph.n, graph.d
    cap = min(n, math.floor(gamma * n))
    planned = count_sizes(n, 1, cap)
    if planned > budget:
        raise CapabilityError(
            f"sweeping all subsets up to size {cap} needs {planned} subsets, "
            f"over the budget of {budget}"
        )
    masks = graph._masks
    checked = 0
    for k in range(1, cap + 1):
        lower = d * (1 - 2 * epsilon) * k
        for combo in combinations(range(n), k):
            checked += 1
            odd = 0
            union = 0
            for j in combo:
                odd ^= masks[j]
                union |= masks[j]
            mid, upper = odd.bit_count(), union.bit_count()
            if not (lower <= mid <= upper):
                subset = RightSubset.of(n, combo)
                return BoundsSweep(gamma, epsilon, cap, checked, (subset, lower, mid, upper))
    return BoundsSweep(gamma, epsilon, cap, checked, None)


@dataclass(frozen=True)
class PartitionSweep:
    """Exhaustive check that splitting any S with empty odd neighborhood
    into nonempty halves A and B gives odd(A) = odd(B)."""

    subsets_checked: int
    empty_odd_found: int
    partitions_checked: int
    violation: tuple[RightSubset, RightSubset, frozenset, frozenset] | None

    def to_record(self) -> dict:
        rec = {
            "subsets_checked": self.subsets_checked,
            "empty_odd_found": self.empty_odd_found,
            "partitions_checked": self.partitions_checked,
            "violation": None,
        }
        if self.violation is not None:
            subset, part_a, odd_a, odd_b = self.violation
            rec["violation"] = {
                "indices": list(subset.indices),
                "part_a": list(part_a.indices),
                "odd_a": sorted(odd_a),
                "odd_b": sorted(odd_b),
            }
        return rec


def find_partition_violation(
    graph: BipartiteGraph,
    max_size: int | None = None,
    budget: int = DEFAULT_SUBSET_BUDGET,
) -> PartitionSweep:
    """For every S (up to ``max_size``) whose odd neighborhood is empty,
    check odd(A) = odd(B) over every bipartition S = A disjoint-union B.

    Both sides are computed independently per bipartition; the budget counts
    subsets plus bipartitions inspected.
    """
    n = graph.n
    cap = n if max_size is None else min(max_size, n)
    masks = graph._masks
    work = count_sizes(n, 1, cap)
    if work > budget:
        raise CapabilityError(
            f"enumerating subsets up to size {cap} needs {work} subsets, "
            f"over the budget of {budget}"
        )
    subsets_checked = 0
    empty_found = 0
    partitions = 0
    for k in range(1, cap + 1):
        for combo in combinations(range(n), k):
            subsets_checked += 1
            odd = 0
            for j in combo:
                odd ^= masks[j]
            if odd != 0:
                continue
            empty_found += 1
            if k < 2:
                continue  # no bipartition into two nonempty parts
            head, rest = combo[0], combo[1:]
            for pick in range(1 << (k - 1)):
                if pick == (1 << (k - 1)) - 1:
                    continue  # B would be empty
                partitions += 1
                if subsets_checked + partitions > budget:
                    raise CapabilityError(
                        f"bipartition sweep exceeded the budget of {budget}"
                    )
                a_bits = 1 << head
                b_bits = 0
                for t, j in enumerate(rest):
                    if (pick >> t) & 1:
                        a_bits |= 1 << j
                    else:
                        b_bits |= 1 << j
                odd_a = graph._odd_mask(a_bits)
                odd_b = graph._odd_mask(b_bits)
                if odd_a != odd_b:
                    return PartitionSweep(
                        subsets_checked,
                        empty_found,
                        partitions,
                        (
                            RightSubset(n, a_bits | b_bits),
                            RightSubset(n, a_bits),
                            frozenset(bit_indices(odd_a)),
                            frozenset(bit_indices(odd_b)),
                        ),
                    )
    return PartitionSweep(subsets_checked, empty_found, partitions, None)
