from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from schubert.errors import ResourceCapExceeded
from schubert.permutations import all_permutations, is_binomial_pattern, parse_permutation, parts
from schubert.regularity import (
    ADSValue, BipartiteGraph, Partition, ads_regularity, ads_regularity_of_shape,
    canonical_antidiagonal, canonical_antidiagonal_cells, count_components,
    is_strongly_connected, max_matching, parse_partition, partition_graph,
    partitions_in_box, recession_connectivity, recession_graph, recession_witness,
    regularity_decomposition, rrw_regularity, thicken,
)


def L(*parts):
    return Partition(tuple(parts))


# -- independent oracles ------------------------------------------------------

def matching_by_brute_force(B):
    edges = list(B.edges)
    for k in range(min(B.m, B.n), 0, -1):
        for sub in combinations(edges, k):
            if len({i for i, _ in sub}) == k and len({j for _, j in sub}) == k:
                return k
    return 0


def strongly_connected_by_closure(R):
    adj = R.adjacency()
    nodes = list(adj)

    def reach(src):
        seen = {src}
        stack = [src]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen

    return all(len(reach(v)) == len(nodes) for v in nodes)


def antidiagonal_by_definition(lam):
    k = 0
    while all((k + 1 - i + 1, i) in lam for i in range(1, k + 2)):
        k += 1
    return k


partitions = st.lists(st.integers(1, 5), min_size=1, max_size=5).map(
    lambda ps: Partition(tuple(sorted(ps, reverse=True))))


# -- partitions --------------------------------------------------------------

def test_partition_parsing():
    assert parse_partition("6,4,1,1,1").parts == (6, 4, 1, 1, 1)
    with pytest.raises(ValueError):
        parse_partition("1,2")
    with pytest.raises(ValueError):
        parse_partition("")


def test_partitions_in_box_count():
    # binomial(6, 3) lattice paths minus the empty partition
    assert sum(1 for _ in partitions_in_box(3, 3)) == 19
    assert sum(1 for _ in partitions_in_box(6, 6)) == 923


def test_canonical_antidiagonal_examples():
    assert canonical_antidiagonal(L(6, 4, 1, 1, 1)) == 3
    assert canonical_antidiagonal(L(1)) == 1
    assert canonical_antidiagonal(L(3, 3, 3)) == 3
    assert canonical_antidiagonal(L(2, 1)) == 2
    assert canonical_antidiagonal_cells(L(2, 2)) == [(2, 1), (1, 2)]


@given(partitions)
def test_canonical_antidiagonal_by_definition(lam):
    assert canonical_antidiagonal(lam) == antidiagonal_by_definition(lam)


def test_thicken_examples():
    assert thicken(L(6, 4, 1, 1, 1)).parts == (7, 7, 5, 2, 2, 2)
    assert thicken(L(1)).parts == (2, 2)
    assert thicken(L(2, 2)).parts == (3, 3, 3)


# -- graphs and matchings ----------------------------------------------------

def test_partition_graph_examples():
    assert partition_graph(L(2, 1)).edges == ((1, 1), (1, 2), (2, 1))
    assert len(partition_graph(L(7, 7, 5, 2, 2, 2)).edges) == 25
    assert partition_graph(L(1)).edges == ((1, 1),)


def test_graph_json_round_trip():
    B = partition_graph(L(3, 1))
    assert BipartiteGraph.from_json(B.to_json()) == B


def test_matching_examples():
    assert max_matching(partition_graph(L(6, 4, 1, 1, 1))) == 3
    assert max_matching(partition_graph(L(1))) == 1
    assert max_matching(partition_graph(L(3, 3, 3))) == 3


def test_matching_equals_antidiagonal_in_4x4_box():
    for lam in partitions_in_box(4, 4):
        B = partition_graph(lam)
        assert max_matching(B) == canonical_antidiagonal(lam) == matching_by_brute_force(B)


@settings(max_examples=100)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_matching_random_graphs(m, n, data):
    cells = [(i, j) for i in range(1, m + 1) for j in range(1, n + 1)]
    edges = data.draw(st.lists(st.sampled_from(cells), unique=True, max_size=len(cells)))
    B = BipartiteGraph(m, n, tuple(edges))
    assert max_matching(B) == matching_by_brute_force(B)


# -- recession graphs --------------------------------------------------------

def test_strong_connectivity_examples():
    B = partition_graph(L(2, 2))
    assert is_strongly_connected(recession_graph(B, B.edges))
    assert not is_strongly_connected(recession_graph(B, ()))


def test_marked_edges_must_be_edges():
    with pytest.raises(ValueError):
        recession_graph(partition_graph(L(1)), [(2, 2)])


@settings(max_examples=200)
@given(st.sampled_from(list(partitions_in_box(3, 3))), st.data())
def test_tarjan_matches_closure(lam, data):
    B = partition_graph(thicken(lam))
    S = data.draw(st.lists(st.sampled_from(B.edges), unique=True))
    R = recession_graph(B, S)
    ok = is_strongly_connected(R)
    assert ok == strongly_connected_by_closure(R)
    if ok:
        # row vertices have no other in-edges and columns no other out-edges
        touched_rows = {i for i, _ in S}
        touched_cols = {j for _, j in S}
        assert touched_rows == set(range(1, B.m + 1))
        assert touched_cols == set(range(1, B.n + 1))


def test_count_components():
    assert count_components(2, 2, [(1, 1)]) == 1
    assert count_components(2, 2, [(1, 1)], spanning=True) == 3
    assert count_components(2, 2, [(1, 1), (2, 2)], spanning=True) == 2


def test_recession_connectivity_examples():
    assert recession_connectivity(partition_graph(L(2, 2))) == 2
    # |C_(2,1)| = 2, so the thickened graph gives 3
    assert recession_connectivity(partition_graph(thicken(L(2, 1)))) == 3
    assert recession_connectivity(partition_graph(L(1))) == 1


def recession_by_closure(B):
    best = 0
    for k in range(len(B.edges) + 1):
        for S in combinations(B.edges, k):
            if strongly_connected_by_closure(recession_graph(B, S)):
                best = max(best, count_components(B.m, B.n, S, spanning=True))
    return best


@pytest.mark.parametrize("lam", [L(1), L(2), L(1, 1), L(2, 1), L(3)])
def test_recession_connectivity_matches_naive_search(lam):
    B = partition_graph(thicken(lam))
    assert recession_connectivity(B, prune=False) == recession_by_closure(B)


def test_recession_cap():
    with pytest.raises(ResourceCapExceeded):
        recession_connectivity(partition_graph(thicken(L(6, 4, 1, 1, 1))))


def test_recession_equality_3x3_box():
    for lam in partitions_in_box(3, 3):
        B = partition_graph(thicken(lam))
        r, S = recession_connectivity(B, return_witness=True)
        assert r == canonical_antidiagonal(lam) + 1
        assert r <= max_matching(B)
        assert is_strongly_connected(recession_graph(B, S))


def test_witness_examples():
    S, comps = recession_witness(L(1))
    assert S == {(1, 1), (2, 2)} and comps == 2
    S, comps = recession_witness(L(3, 3, 3))
    assert comps == 4
    S, comps = recession_witness(L(6, 4, 1, 1, 1))
    assert comps == 4
    assert S == {(1, 1), (2, 4), (3, 3), (4, 2), (2, 5), (2, 6), (2, 7), (5, 2), (6, 2)}


def test_figure_bullet_set_is_also_a_witness():
    # the drawn bullets sit on the framing row and column rather than one step inside
    B = partition_graph(thicken(L(6, 4, 1, 1, 1)))
    S = {(1, 1), (1, 5), (1, 6), (1, 7), (2, 4), (3, 3), (4, 2), (5, 1), (6, 1)}
    assert is_strongly_connected(recession_graph(B, S))
    assert count_components(B.m, B.n, S, spanning=True) == 4


def test_witnesses_in_6x6_box():
    for lam in partitions_in_box(6, 6):
        B = partition_graph(thicken(lam))
        S, comps = recession_witness(lam)
        assert comps == canonical_antidiagonal(lam) + 1
        assert strongly_connected_by_closure(recession_graph(B, S))


# -- regularity values ---------------------------------------------------------

def test_rrw_examples():
    assert rrw_regularity(L(1)) == 1
    assert rrw_regularity(L(6, 4, 1, 1, 1)) == 3
    assert rrw_regularity(L(2, 2)) == 2


def test_ads_examples():
    v = ads_regularity_of_shape(L(6, 4, 1, 1, 1))
    assert v == ADSValue(3, "witness") and not v.exact
    assert "witness" in v.describe()
    assert ads_regularity(partition_graph(thicken(L(1)))) == ADSValue(1, "exhaustive")
    assert ads_regularity(partition_graph(L(1))).value == 0


def test_ads_rejects_disconnected_graph():
    with pytest.raises(ValueError):
        ads_regularity(BipartiteGraph(2, 2, ((1, 1), (2, 2))))


def test_ads_needs_witness_above_cap():
    B = partition_graph(thicken(L(6, 4, 1, 1, 1)))
    with pytest.raises(ResourceCapExceeded):
        ads_regularity(B)
    with pytest.raises(ValueError):
        ads_regularity(B, witness=[(1, 1)])


def test_decomposition_examples():
    assert regularity_decomposition(parse_permutation("31425")) == 1
    assert regularity_decomposition(parse_permutation("3412")) == 0
    with pytest.raises(ValueError):
        regularity_decomposition(parse_permutation("2143"))


def test_decomposition_with_two_single_box_parts():
    found = None
    for w in all_permutations(6):
        if not is_binomial_pattern(w):
            continue
        nondominant = [(r, shape) for _, r, shape in parts(w) if r > 0]
        if len(nondominant) == 2 and all(shape == (1,) for _, shape in nondominant):
            found = w
            break
    assert found is not None
    assert regularity_decomposition(found) == 2
