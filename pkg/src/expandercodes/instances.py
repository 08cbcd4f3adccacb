"""Instance ingestion, serialization, the built-in demo graph, and seeded
random right-regular generation.

Generation uses splitmix64, fully specified here and in the README so that
a corpus can be regenerated bit-for-bit on any platform or language; it
does not depend on the interpreter's own RNG.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError
from .gf2 import Gf2Matrix
from .graph import BipartiteGraph

EDGE_LIST = "edge-list"
MATRIX = "matrix"
FORMATS = (EDGE_LIST, MATRIX)

# 5 left, 4 right, right-regular of degree 2; the witness {0, 2, 3} (labels
# {6, 8, 9}) is its only minimum-weight codeword support, with distance 3.
_DEMO_ADJ = ((0, 1), (3, 4), (1, 2), (0, 2))


def figure1() -> BipartiteGraph:
    """The built-in 5+4 demo instance, addressable as "figure1" in the CLI."""
    return BipartiteGraph(5, 4, _DEMO_ADJ)


def parse_edge_list(text: str) -> BipartiteGraph:
    """Parse the edge-list format: "m n" header, one "left right" pair per
    line, '#' starting a comment; duplicate edges are rejected."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 2:
                raise ParseError(f"line {lineno}: expected header 'm n'")
            try:
                m, n = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: expected header 'm n'") from None
            if m < 0 or n < 0:
                raise ParseError(f"line {lineno}: vertex counts must be >= 0")
            header = (m, n)
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected edge 'left right'")
        try:
            left, right = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected edge 'left right'") from None
        m, n = header
        if not 0 <= left < m:
            raise ParseError(f"line {lineno}: left index {left} out of range [0, {m})")
        if not 0 <= right < n:
            raise ParseError(f"line {lineno}: right index {right} out of range [0, {n})")
        if (left, right) in seen:
            raise ParseError(f"line {lineno}: duplicate edge ({left}, {right})")
        seen.add((left, right))
        edges.append((left, right))
    if header is None:
        raise ParseError("empty input: missing 'm n' header")
    return BipartiteGraph.from_edges(header[0], header[1], edges)


def parse_matrix(text: str) -> BipartiteGraph:
    """Parse the matrix format of the GF(2) core into a graph."""
    return BipartiteGraph.from_biadjacency(Gf2Matrix.from_text(text))


def parse_graph(text: str, fmt: str = EDGE_LIST) -> BipartiteGraph:
    if fmt == EDGE_LIST:
        return parse_edge_list(text)
    if fmt == MATRIX:
        return parse_matrix(text)
    raise ValueError(f"unknown graph format {fmt!r}, expected one of {FORMATS}")


def serialize_edge_list(graph: BipartiteGraph) -> str:
    """Canonical edge-list form: header then edges sorted by (left, right)."""
    edges = sorted(
        (left, right)
        for right, neigh in enumerate(graph.right_adj)
        for left in neigh
    )
    lines = [f"{graph.m} {graph.n}"]
    lines.extend(f"{left} {right}" for left, right in edges)
    return "\n".join(lines) + "\n"


def serialize_matrix(graph: BipartiteGraph) -> str:
    return graph.biadjacency().to_text()


def serialize_graph(graph: BipartiteGraph, fmt: str = EDGE_LIST) -> str:
    if fmt == EDGE_LIST:
        return serialize_edge_list(graph)
    if fmt == MATRIX:
        return serialize_matrix(graph)
    raise ValueError(f"unknown graph format {fmt!r}, expected one of {FORMATS}")


_U64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """The splitmix64 sequence (public constants, 64-bit wraparound):

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    output z ^ (z >> 31)
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _U64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _U64
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _U64
        z = ((z ^ (z >> 27)) * _MIX2) & _U64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from [0, bound) by rejection; no modulo bias."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound


@dataclass(frozen=True)
class GenSpec:
    """Parameters for seeded right-regular generation."""

    m: int
    n: int
    d: int
    seed: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"m and n must be >= 1, got m={self.m}, n={self.n}")
        if not 1 <= self.d <= self.m:
            raise ValueError(f"d must satisfy 1 <= d <= m, got d={self.d}, m={self.m}")
        if not 0 <= self.seed <= _U64:
            raise ValueError("seed must fit in 64 bits")


def random_right_regular(spec: GenSpec) -> BipartiteGraph:
    """Each right vertex draws d distinct left neighbors uniformly, using
    rejection of repeats on a single splitmix64 stream; fully deterministic
    for a given spec.

    Nothing here certifies expansion: run ``check_expansion`` on the output
    before any pruning-dependent computation.
    """
    rng = SplitMix64(spec.seed)
    adjacency = []
    for _ in range(spec.n):
        chosen: set[int] = set()
        while len(chosen) < spec.d:
            chosen.add(rng.below(spec.m))
        adjacency.append(tuple(sorted(chosen)))
    return BipartiteGraph(spec.m, spec.n, tuple(adjacency))
