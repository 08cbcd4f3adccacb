"""Minimum-distance methods, pruning, and the certified lower bound."""

import json
from fractions import Fraction
from itertools import combinations

import pytest

from expandercodes import (
    INFINITE,
    BipartiteGraph,
    CapabilityError,
    GenSpec,
    Gf2Matrix,
    MinDistanceResult,
    PruningParams,
    RightSubset,
    check_expansion,
    distance_lower_bound,
    figure1,
    is_minimal_dependent,
    min_distance_kernel,
    min_distance_pruned,
    min_distance_subset,
    random_right_regular,
    verify_distance_result,
)

G = figure1()
B = G.biadjacency()
HALF = Fraction(1, 2)
WITNESS = RightSubset.of(4, (0, 2, 3))


def brute_force_distance(graph):
    """Oracle: scan subsets with itertools and explicit counters."""
    cols = graph.biadjacency().columns
    examined = 0
    for k in range(1, graph.n + 1):
        for combo in combinations(range(graph.n), k):
            examined += 1
            acc = 0
            for j in combo:
                acc ^= cols[j]
            if acc == 0:
                return k, combo, examined
    return None, None, examined


def test_kernel_demo():
    result = min_distance_kernel(B)
    assert result.distance == 3
    assert result.witness == WITNESS
    assert result.method == "kernel"
    assert result.examined == 1  # 1-dimensional code


def test_kernel_full_rank_infinite():
    result = min_distance_kernel(Gf2Matrix.identity(4))
    assert result.distance is INFINITE
    assert result.is_infinite and result.witness is None


def test_kernel_duplicate_column_distance_two():
    m = Gf2Matrix(3, 4, (0b011, 0b101, 0b011, 0b110))
    result = min_distance_kernel(m)
    assert result.distance == 2
    assert result.witness == RightSubset.of(4, (0, 2))


def test_kernel_dimension_cap():
    with pytest.raises(CapabilityError):
        min_distance_kernel(Gf2Matrix.zeros(1, 12), max_dimension=10)


def test_subset_demo():
    result = min_distance_subset(G)
    assert result.distance == 3
    assert result.witness == WITNESS
    # all subsets of size <= 2 have a nonempty odd neighborhood
    for k in (1, 2):
        for combo in combinations(range(G.n), k):
            assert G.odd_neighborhood(RightSubset.of(G.n, combo))
    k, combo, examined = brute_force_distance(G)
    assert (k, combo, examined) == (3, (0, 2, 3), result.examined)


def test_subset_isolated_right_vertex():
    graph = BipartiteGraph(3, 3, ((0, 1), (), (1, 2)))
    result = min_distance_subset(graph)
    assert result.distance == 1
    assert result.witness == RightSubset.of(3, (1,))


def test_subset_infinite():
    graph = BipartiteGraph.from_biadjacency(Gf2Matrix.identity(5))
    result = min_distance_subset(graph)
    assert result.distance is INFINITE
    assert result.examined == 2**5 - 1


def test_subset_right_cap():
    graph = BipartiteGraph(1, 30, ((0,),) * 30)
    with pytest.raises(CapabilityError):
        min_distance_subset(graph, max_right=28)


def test_infinite_marker_refuses_ordering():
    with pytest.raises(TypeError):
        INFINITE < 3  # noqa: B015
    assert repr(INFINITE) == "INFINITE"
    assert INFINITE == INFINITE
    assert INFINITE != 3


def test_pruned_demo_loose_alpha():
    params = PruningParams.certify(G, HALF, Fraction(1, 3))
    result = min_distance_pruned(G, params)
    assert result.distance == 3
    assert result.witness == WITNESS
    assert result.threshold == Fraction(8, 3)
    # sizes 1 and 2 are skipped entirely: C(4,1) + C(4,2) = 10 subsets
    unpruned = min_distance_subset(G)
    assert unpruned.examined - result.examined == 10


def test_pruned_demo_tight_alpha_integer_threshold():
    # tight alpha 3/4 puts the bound at exactly 3 = d(C); the size-3 level
    # must still be searched
    params = PruningParams.certify(G, HALF, Fraction(1, 4))
    result = min_distance_pruned(G, params)
    assert result.threshold == 3
    assert result.distance == 3
    assert result.witness == WITNESS


def test_pruned_preconditions():
    with pytest.raises(ValueError, match="epsilon"):
        PruningParams.certify(G, HALF, Fraction(1, 2))
    with pytest.raises(ValueError, match="epsilon"):
        PruningParams.certify(G, HALF, 0)
    with pytest.raises(ValueError, match="expander"):
        PruningParams.certify(G, HALF, Fraction(1, 5))  # alpha 4/5 > 3/4 fails
    cert = check_expansion(G, HALF, Fraction(2, 3))
    unverified = check_expansion(G, HALF, Fraction(101, 100))
    with pytest.raises(ValueError, match="verified"):
        PruningParams(HALF, Fraction(1, 3), unverified)
    with pytest.raises(ValueError, match="alpha"):
        PruningParams(HALF, Fraction(1, 4), cert)
    params = PruningParams(HALF, Fraction(1, 3), cert)
    other = BipartiteGraph(5, 4, ((0, 1), (3, 4), (1, 2), (0, 1)))
    with pytest.raises(ValueError, match="different graph"):
        min_distance_pruned(other, params)


def test_pruned_rejects_fractional_gamma_n():
    graph = random_right_regular(GenSpec(6, 5, 2, seed=9))
    cert = check_expansion(graph, Fraction(1, 2), Fraction(2, 3))
    if cert.verified:
        params = PruningParams(Fraction(1, 2), Fraction(1, 3), cert)
        with pytest.raises(ValueError, match="positive integer"):
            min_distance_pruned(graph, params)  # gamma*n = 5/2


def test_lower_bound_values():
    assert distance_lower_bound(HALF, Fraction(1, 3), 4) == Fraction(8, 3)
    assert distance_lower_bound(HALF, Fraction(1, 4), 8) == 6
    with pytest.raises(ValueError):
        distance_lower_bound(HALF, Fraction(1, 2), 4)
    with pytest.raises(ValueError):
        distance_lower_bound(0, Fraction(1, 3), 4)
    with pytest.raises(TypeError):
        distance_lower_bound(0.5, Fraction(1, 3), 4)


def test_verify_distance_result_demo():
    result = min_distance_subset(G)
    assert verify_distance_result(B, result) is True
    assert is_minimal_dependent(B, result.witness) is True


def test_verify_distance_result_duplicate_columns():
    m = Gf2Matrix(3, 3, (0b011, 0b011, 0b100))
    result = min_distance_kernel(m)
    assert result.distance == 2
    assert verify_distance_result(m, result) is True


def test_verify_distance_result_rejects_corruption():
    good = min_distance_subset(G)
    too_large = MinDistanceResult(4, RightSubset.full(4), "subset", good.examined)
    assert verify_distance_result(B, too_large) is False
    wrong_witness = MinDistanceResult(3, RightSubset.of(4, (0, 1, 2)), "subset", 1)
    assert verify_distance_result(B, wrong_witness) is False
    with pytest.raises(ValueError):
        verify_distance_result(B, min_distance_kernel(Gf2Matrix.identity(3)))


def test_kernel_subset_agree_small_sweep():
    for seed in range(40):
        spec = GenSpec(m=4 + seed % 5, n=3 + seed % 6, d=2 + seed % 2, seed=seed)
        graph = random_right_regular(spec)
        by_kernel = min_distance_kernel(graph.biadjacency())
        by_subset = min_distance_subset(graph)
        assert by_kernel.distance == by_subset.distance
        assert by_kernel.witness == by_subset.witness
        if not by_subset.is_infinite:
            # a minimum-size witness is a minimal dependent column set
            assert not graph.odd_neighborhood(by_subset.witness)
            assert is_minimal_dependent(graph.biadjacency(), by_subset.witness)


def test_subset_parallel_matches_sequential():
    for seed in (1, 2, 3):
        graph = random_right_regular(GenSpec(6, 7, 2, seed=seed))
        seq = min_distance_subset(graph)
        par = min_distance_subset(graph, workers=4)
        assert seq == par
        assert json.dumps(seq.to_record(graph.m), sort_keys=True) == json.dumps(
            par.to_record(graph.m), sort_keys=True
        )


def test_examined_counter_matches_recount():
    for seed in range(10):
        graph = random_right_regular(GenSpec(5, 6, 2, seed=seed))
        result = min_distance_subset(graph)
        _, _, examined = brute_force_distance(graph)
        assert result.examined == examined


def test_record_shape():
    rec = min_distance_subset(G).to_record(G.m)
    assert rec == {
        "method": "subset",
        "distance": 3,
        "witness": {"indices": [0, 2, 3], "labels": [6, 8, 9]},
        "examined": 13,
        "threshold": None,
    }
    inf = min_distance_kernel(Gf2Matrix.identity(3)).to_record(3)
    assert inf["distance"] == "infinite" and inf["witness"] is None
