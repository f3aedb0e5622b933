from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bicm.graph import DomainError, complement, complete_graph, empty_graph, enumerate_graphs, matching_number, path_graph
from bicm.ideal import (
    SquarefreeIdeal,
    add_variable_to_ideal,
    edge_ideal,
    ideal_stats,
    intersect,
    is_t_spread,
    matching_power,
    matching_product,
    minimalize,
    monomial_grade,
    squarefree_power,
    squarefree_veronese,
    t_spread_borel,
    uniform_veronese,
    variable_multiply,
)
from bicm.graph import mask_of

from . import oracles


def I(n, *gens):
    return SquarefreeIdeal.from_lists(n, gens)


def M(*vars_1):
    return mask_of(v - 1 for v in vars_1)


@st.composite
def ideals(draw, max_n=6, max_gens=6):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_gens))
    return SquarefreeIdeal.from_gens(n, gens)


def test_edge_ideal_examples():
    assert edge_ideal(complete_graph(4)) == I(4, [1, 2], [1, 3], [1, 4], [2, 3], [2, 4], [3, 4])
    assert edge_ideal(complement(path_graph(4))) == I(4, [1, 3], [1, 4], [2, 4])
    assert edge_ideal(empty_graph(3)).is_zero


def test_minimalize():
    assert minimalize([M(1, 2), M(1, 2, 3)]) == (M(1, 2),)
    assert minimalize([M(1), M(2), M(1, 2)]) == (M(1), M(2))
    anti = (M(1, 2), M(2, 3), M(1, 3))
    assert set(minimalize(anti)) == set(anti)


def test_generator_order_is_degree_then_lex():
    ideal = I(4, [3, 4], [1], [2, 3], [1, 4])
    assert ideal.gen_lists() == [[1], [2, 3], [3, 4]]


def test_squarefree_power_examples():
    assert squarefree_power(edge_ideal(complete_graph(4)), 2) == I(4, [1, 2, 3, 4])
    assert squarefree_power(edge_ideal(complement(path_graph(5))), 2) == squarefree_veronese(5, 4)
    p4 = edge_ideal(path_graph(4))
    assert squarefree_power(p4, monomial_grade(p4) + 1).is_zero
    with pytest.raises(DomainError):
        squarefree_power(p4, 0)


def test_matching_power_examples():
    assert matching_power(complete_graph(6), 3) == I(6, [1, 2, 3, 4, 5, 6])
    assert matching_power(path_graph(4), 2) == I(4, [1, 2, 3, 4])
    p4c = complement(path_graph(4))
    assert matching_power(p4c, 1) == edge_ideal(p4c)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_matching_power_equals_literal_squarefree_power(n):
    for g in enumerate_graphs(n, up_to_iso=True):
        gens = [set(e) for e in g.edges()]
        nu = matching_number(g)
        assert monomial_grade(edge_ideal(g)) == nu
        for k in range(1, nu + 2):
            literal = oracles.literal_squarefree_power(gens, k)
            ours = matching_power(g, k)
            assert {frozenset(i - 1 for i in gl) for gl in ours.gen_lists()} == literal
            assert ours == squarefree_power(edge_ideal(g), k)


def test_matching_product_examples():
    assert matching_product(I(4, [1], [2]), I(4, [1, 2])).is_zero
    assert matching_product(I(4, [1], [2]), I(4, [3, 4])) == I(4, [1, 3, 4], [2, 3, 4])
    with pytest.raises(DomainError):
        matching_product(I(3, [1]), I(4, [1]))


def test_matching_product_reconstructs_power_of_k5():
    # I(K5) = x5 P + I(K4); squares both ways
    g = complete_graph(5)
    p = I(5, [1], [2], [3], [4])
    h = SquarefreeIdeal(5, edge_ideal(complete_graph(4)).gens)
    lhs = matching_power(g, 2)
    rhs = variable_multiply(matching_product(p, squarefree_power(h, 1)), 4) + squarefree_power(h, 2)
    assert lhs == rhs == squarefree_veronese(5, 4)


@st.composite
def ideal_pairs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    gen = st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=6)
    return SquarefreeIdeal.from_gens(n, draw(gen)), SquarefreeIdeal.from_gens(n, draw(gen))


@given(ideal_pairs())
def test_matching_product_symmetric(pair):
    a, b = pair
    assert matching_product(a, b) == matching_product(b, a)
    assert matching_product(a, SquarefreeIdeal.unit(a.n)) == a


@given(ideals())
def test_squarefree_power_properties(ideal):
    assert squarefree_power(ideal, 1) == ideal
    nu = monomial_grade(ideal)
    for k in range(1, nu + 2):
        power = squarefree_power(ideal, k)
        assert power.is_zero == (k > nu)
        # antichain
        assert all(not (a & b == a) for a in power.gens for b in power.gens if a != b)
        if k > 1 and not power.is_zero:
            assert not squarefree_power(ideal, k - 1).is_zero


def test_t_spread_predicate():
    assert is_t_spread(M(2, 4), (2,))
    assert not is_t_spread(M(2, 3), (2,))
    assert is_t_spread(M(3), ())


def test_t_spread_borel_examples():
    assert t_spread_borel(M(3, 4), (1,), 4) == edge_ideal(complete_graph(4))
    assert t_spread_borel(M(2, 4), (2,), 4) == I(4, [1, 3], [1, 4], [2, 4]) == edge_ideal(complement(path_graph(4)))
    expected = I(4, [1, 2], [1, 3], [1, 4], [2, 3], [2, 4])
    assert t_spread_borel(M(2, 4), (1,), 4) == expected
    assert t_spread_borel(M(2, 4), (1,), 4, method="exchange") == expected
    with pytest.raises(DomainError):
        t_spread_borel(M(2, 3), (2,), 4)


@pytest.mark.parametrize("n", range(4, 9))
def test_named_families_are_borel(n):
    assert t_spread_borel(M(n - 1, n), (1,), n) == edge_ideal(complete_graph(n))
    assert t_spread_borel(M(n - 2, n), (2,), n) == edge_ideal(complement(path_graph(n)))
    assert uniform_veronese(n, 2, 1) == edge_ideal(complete_graph(n))
    assert uniform_veronese(n, 2, 2) == edge_ideal(complement(path_graph(n)))


def _brute_borel(u, t, n):
    a = [i for i in range(n) if u >> i & 1]
    out = set()
    for b in combinations(range(n), len(a)):
        if all(b[j] <= a[j] for j in range(len(a))) and all(b[j + 1] - b[j] >= t[j] for j in range(len(a) - 1)):
            out.add(mask_of(b))
    return out


def test_borel_characterizations_agree():
    checked = 0
    for n in range(1, 8):
        for d in (1, 2, 3):
            for t in ([()] if d == 1 else [tuple(x) for x in _vectors(d - 1)]):
                for u in combinations(range(n), d):
                    um = mask_of(u)
                    if not is_t_spread(um, t):
                        continue
                    upper = t_spread_borel(um, t, n)
                    exchange = t_spread_borel(um, t, n, method="exchange")
                    assert upper == exchange
                    assert set(upper.gens) == _brute_borel(um, t, n)
                    checked += 1
    assert checked > 300


def _vectors(length):
    if length == 0:
        yield ()
        return
    for head in range(0, 3):
        for tail in _vectors(length - 1):
            yield (head,) + tail


def test_ideal_stats():
    s = ideal_stats(edge_ideal(complement(path_graph(4))))
    assert (s["mu"], s["height"], s["monomial_grade"]) == (3, 2, 2)
    s = ideal_stats(edge_ideal(complete_graph(5)))
    assert (s["mu"], s["height"], s["monomial_grade"]) == (10, 4, 2)
    s = ideal_stats(SquarefreeIdeal.maximal(4))
    assert (s["mu"], s["height"], s["monomial_grade"]) == (4, 4, 4)
    assert s["support"] == [1, 2, 3, 4] and s["is_equigenerated"] and s["degree"] == 1
    with pytest.raises(DomainError):
        ideal_stats(SquarefreeIdeal.zero(3))


@settings(max_examples=60)
@given(ideals(max_n=6))
def test_height_against_brute_force(ideal):
    gens = [frozenset(i - 1 for i in g) for g in ideal.gen_lists()]
    brute = min(len(c) for c in oracles.subsets(range(ideal.n)) if all(c & g for g in gens))
    assert ideal_stats(ideal)["height"] == brute


def test_intersect():
    assert intersect(I(2, [1]), I(2, [2])) == I(2, [1, 2])
    j = edge_ideal(path_graph(4))
    assert intersect(j, j) == j
    assert intersect(I(2, [1], [2]), I(2, [1, 2])) == I(2, [1, 2])


def test_variable_operations():
    assert variable_multiply(I(3, [1], [2]), 2) == I(3, [1, 3], [2, 3])
    with pytest.raises(DomainError):
        variable_multiply(I(3, [1], [2]), 0)
    assert add_variable_to_ideal(I(2, [1, 2]), 0) == I(2, [1])


def test_lemma_splitting_reconstructs_k5():
    p = I(5, [1], [2], [3], [4])
    h = SquarefreeIdeal(5, edge_ideal(complete_graph(4)).gens)
    assert variable_multiply(p, 4) + h == edge_ideal(complete_graph(5))


def test_json_round_trip():
    ideal = edge_ideal(complement(path_graph(5)))
    data = ideal.to_json()
    assert data == {"n": 5, "gens": [[1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [3, 5]]}
    assert SquarefreeIdeal.from_json(ideal.dumps()) == ideal
