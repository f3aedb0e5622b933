from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicm.graph import (
    DomainError,
    Graph,
    canonical_form,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    enumerate_graphs,
    from_edge_list,
    from_graph6,
    graph_name,
    induced_subgraph,
    is_isomorphic,
    matching_number,
    matchings,
    parse_graphs,
    path_graph,
    relabel,
    to_edge_list,
    to_graph6,
)

from . import oracles


@st.composite
def graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


def test_complete_and_path():
    assert complete_graph(4).edges_1() == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert path_graph(4).edges_1() == [(1, 2), (2, 3), (3, 4)]
    assert complete_graph(2).edges_1() == [(1, 2)]


@pytest.mark.parametrize("bad", [0, 33])
def test_constructors_reject_bad_n(bad):
    with pytest.raises(DomainError):
        complete_graph(bad)
    with pytest.raises(DomainError):
        path_graph(bad)


def test_graph_invariants_enforced():
    with pytest.raises(DomainError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(DomainError):
        Graph(2, (0b01, 0))  # loop
    with pytest.raises(DomainError):
        Graph(2, (0b100, 0))  # beyond n


def test_complement():
    assert complement(path_graph(4)).edges_1() == [(1, 3), (1, 4), (2, 4)]
    assert complement(complete_graph(5)).num_edges() == 0
    assert complement(complement(path_graph(6))) == path_graph(6)


@given(graphs(max_n=8))
def test_complement_involution(g):
    assert complement(complement(g)) == g


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(5), [0, 1, 2]) == complete_graph(3)
    assert induced_subgraph(path_graph(5), [0, 2, 4]) == empty_graph(3)
    # P5c restricted to {1,2,3,4}: edges 13, 14, 24 among those vertices
    sub = induced_subgraph(complement(path_graph(5)), [0, 1, 2, 3])
    assert sub.edges_1() == [(1, 3), (1, 4), (2, 4)]
    assert sub == complement(path_graph(4))


def test_induced_subgraph_errors():
    with pytest.raises(DomainError):
        induced_subgraph(path_graph(3), [])
    with pytest.raises(DomainError):
        induced_subgraph(path_graph(3), [0, 5])


@given(graphs(max_n=7), st.data())
def test_induced_subgraph_transitive(g, data):
    a = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    sub_a = induced_subgraph(g, a)
    b = data.draw(st.sets(st.integers(0, sub_a.n - 1), min_size=1))
    image = sorted(a)
    assert induced_subgraph(sub_a, b) == induced_subgraph(g, [image[i] for i in b])


def test_matching_examples():
    assert matching_number(path_graph(4)) == 2
    assert [m.edges for m in matchings(path_graph(4), 2)] == [((0, 1), (2, 3))]
    assert matching_number(complete_graph(6)) == 3
    p4c = complement(path_graph(4))
    assert [m.edges for m in matchings(p4c, 2)] == [((0, 2), (1, 3))]
    assert matching_number(empty_graph(3)) == 0
    with pytest.raises(DomainError):
        matchings(p4c, 0)


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_matchings_against_brute_force(g):
    nu = matching_number(g)
    for k in range(1, nu + 2):
        ours = matchings(g, k)
        for m in ours:
            verts = [v for e in m.edges for v in e]
            assert len(set(verts)) == 2 * len(m.edges)
            assert bin(m.vertex_set).count("1") == 2 * k
        assert [m.edges for m in ours] == oracles.brute_matchings(g.edges(), k)
        assert (len(ours) == 0) == (k > nu)


def test_isomorphism_examples():
    p4 = path_graph(4)
    ok, perm = is_isomorphic(p4, complement(p4))
    assert ok and relabel(p4, perm) == complement(p4)
    assert oracles.brute_isomorphic(4, p4.edges(), complement(p4).edges()) is not None
    assert is_isomorphic(complete_graph(4), complement(p4)) == (False, None)
    ok, perm = is_isomorphic(cycle_graph(5), cycle_graph(5))
    assert ok and relabel(cycle_graph(5), perm) == cycle_graph(5)
    assert is_isomorphic(path_graph(3), path_graph(4)) == (False, None)


@settings(max_examples=80)
@given(graphs(min_n=2, max_n=6), st.permutations(range(6)), graphs(min_n=2, max_n=6))
def test_isomorphism_against_brute_force(g, perm, h):
    perm = [p for p in perm if p < g.n]
    moved = relabel(g, perm)
    ok, witness = is_isomorphic(g, moved)
    assert ok and relabel(g, witness) == moved
    assert canonical_form(g)[0] == canonical_form(moved)[0]
    if h.n == g.n:
        expected = oracles.brute_isomorphic(g.n, g.edges(), h.edges()) is not None
        assert is_isomorphic(g, h)[0] == expected
        assert (canonical_form(g)[0] == canonical_form(h)[0]) == expected


@pytest.mark.parametrize("n,expected", [(3, 2), (4, 7), (5, 23)])
def test_iso_class_counts(n, expected):
    # 3 and 4 from the text of the classification; 5 from the brute-force oracle
    assert oracles.brute_iso_class_count(n) == expected
    assert len(list(enumerate_graphs(n, no_isolated=True, up_to_iso=True))) == expected


def test_iso_class_counts_with_isolated():
    # OEIS A000088: graphs on n unlabeled vertices
    assert [len(list(enumerate_graphs(n, up_to_iso=True))) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_labeled_enumeration_count(n):
    assert sum(1 for _ in enumerate_graphs(n)) == 2 ** (n * (n - 1) // 2)


def test_enumeration_domain():
    with pytest.raises(DomainError):
        next(enumerate_graphs(9, up_to_iso=True))


def test_enumeration_is_deterministic():
    first = [to_graph6(g) for g in enumerate_graphs(5, no_isolated=True, up_to_iso=True)]
    second = [to_graph6(g) for g in enumerate_graphs(5, no_isolated=True, up_to_iso=True)]
    assert first == second


def test_three_vertex_classes_are_p3_and_k3():
    found = list(enumerate_graphs(3, no_isolated=True, up_to_iso=True))
    assert len(found) == 2
    assert sorted(g.num_edges() for g in found) == [2, 3]
    assert any(is_isomorphic(g, path_graph(3))[0] for g in found)
    assert any(g == complete_graph(3) for g in found)


def test_graph6_known_strings():
    # reference encodings: K4 = C~, P4 (edges 12, 23, 34) = Ch, K1 = @
    assert to_graph6(complete_graph(4)) == "C~"
    assert to_graph6(path_graph(4)) == "Ch"
    assert to_graph6(Graph(1, (0,))) == "@"
    assert from_graph6("C~") == complete_graph(4)
    assert from_graph6(">>graph6<<Ch") == path_graph(4)


@given(graphs(max_n=12))
def test_graph6_round_trip(g):
    assert from_graph6(to_graph6(g)) == g


def test_graph6_rejects_malformed():
    for bad in ["", "C", "C~~", "C\x10", "A`"]:
        with pytest.raises(DomainError):
            from_graph6(bad)


def test_edge_list_round_trip():
    g = complement(path_graph(5))
    text = to_edge_list(g)
    assert text.splitlines()[0] == "5"
    assert from_edge_list(text) == g
    assert parse_graphs(text) == [g]
    assert parse_graphs("C~\nCh\n") == [complete_graph(4), path_graph(4)]


def test_graph_name():
    assert graph_name(complete_graph(5)) == "K5"
    assert graph_name(relabel(complement(path_graph(6)), [3, 1, 5, 0, 2, 4])) == "P6c"
    assert graph_name(cycle_graph(5)) is None
    assert graph_name(cycle_graph(6)) is None
