import math

import pytest

from setchroma import oracle
from setchroma.chromafn import (
    CLOSED_FORMS,
    closed_form_special,
    partitioned_set_chromatic,
    set_chromatic,
    weighted_chromatic,
)
from setchroma.combinatorics import binomial_row, gaussian_binomial, power_sums
from setchroma.genfunc import product_linear_factors, urn_counts
from setchroma.graph import (
    SimpleGraph,
    complete_graph,
    connected_partitions,
    empty_graph,
    path_graph,
)
from setchroma.verify import all_graphs, graphs_up_to_isomorphism

K2, K3, P3 = complete_graph(2), complete_graph(3), path_graph(3)


def test_set_chromatic_examples():
    assert set_chromatic(K3, 2) == 12
    assert set_chromatic(P3, 2) == 64 - 48 + 10 == 26
    assert set_chromatic(complete_graph(4), 2) == 0
    for n in range(5):
        for k in range(5):
            assert set_chromatic(empty_graph(n), k) == 2 ** (n * k)


def test_weighted_examples():
    assert weighted_chromatic(K2, (1, 2)) == 1 * 2 + 2 * 1 == 4
    b = power_sums((1, 2), 2)
    assert b[1] ** 2 - b[2] == 4
    for n in range(4):
        assert weighted_chromatic(empty_graph(n), (3, 0, 2)) == 5**n


def test_weighted_with_binomials_is_set_chromatic():
    for n in range(1, 5):
        for g in graphs_up_to_isomorphism(n, connected=True):
            for k in range(4):
                assert weighted_chromatic(g, binomial_row(k)) == set_chromatic(g, k)


def test_partitioned_set_examples():
    assert partitioned_set_chromatic(K2, (1, 1)) == 2
    assert partitioned_set_chromatic(empty_graph(2), (2, 3)) == 25
    with pytest.raises(ValueError):
        partitioned_set_chromatic(K2, (1, -1))


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", range(4))
def test_subspace_coloring_of_complete_graphs(k, q):
    sizes = [gaussian_binomial(k, j, q) for j in range(k + 1)]
    e = product_linear_factors(sizes)
    for n in range(k + 3):
        expected = math.factorial(n) * e[n]
        assert partitioned_set_chromatic(complete_graph(n), sizes) == expected
        if n <= 3 and sum(sizes) ** n <= 2**16:
            assert oracle.brute_force_weighted(complete_graph(n), sizes) == expected


def test_lattice_reuse_and_mismatch():
    lat = connected_partitions(K3)
    assert set_chromatic(K3, 3, lat) == 144
    with pytest.raises(ValueError):
        set_chromatic(P3, 3, lat)


def test_three_routes_on_complete_graphs():
    for n in range(6):
        for k in range(4):
            chi = urn_counts(k, n)[n]
            assert set_chromatic(complete_graph(n), k) == chi
            assert oracle.brute_force_set_coloring(complete_graph(n), k) == chi
    for n in range(7):
        for k in range(8):
            assert set_chromatic(complete_graph(n), k) == urn_counts(k, n)[n]


def test_g_function_identity():
    """Colorings constant on the blocks of p sum to prod_B beta_|B|."""
    weights = (2, 0, 1, 3)
    for n in range(1, 5):
        beta = power_sums(weights, n)
        for g in graphs_up_to_isomorphism(n):
            for p in connected_partitions(g):
                expected = math.prod(beta[len(b)] for b in p)
                assert oracle.brute_force_block_constant(n, p, weights) == expected


def test_positive_iff_few_colors_needed():
    for n in range(1, 6):
        for g in graphs_up_to_isomorphism(n):
            chi_num = oracle.chromatic_number(g)
            for k in range(5):
                assert (set_chromatic(g, k) > 0) == (chi_num <= k + 1)


def test_multiplicative_over_components():
    for g in all_graphs(5):
        comps = g.components()
        if len(comps) < 2:
            continue
        for k in range(4):
            expected = math.prod(set_chromatic(g.induced(c), k) for c in comps)
            assert set_chromatic(g, k) == expected


@pytest.mark.parametrize("k", range(11))
def test_closed_forms_match_mobius_sum(k):
    assert closed_form_special("chi0", k) == set_chromatic(complete_graph(0), k)
    assert closed_form_special("chi1", k) == set_chromatic(complete_graph(1), k)
    assert closed_form_special("chi2", k) == set_chromatic(complete_graph(2), k)
    assert closed_form_special("chi3", k) == set_chromatic(complete_graph(3), k)
    assert closed_form_special("chiP3", k) == set_chromatic(P3, k)
    for n in range(4):
        assert closed_form_special("chiEmpty", k, n) == set_chromatic(empty_graph(n), k)
    if k <= 8:
        assert closed_form_special("chiTop", k) == set_chromatic(complete_graph(k + 1), k)


def test_closed_form_values():
    assert closed_form_special("chi2", 2) == 10
    assert closed_form_special("chi3", 4) == 1428
    assert closed_form_special("chiTop", 3) == 216
    assert set(CLOSED_FORMS) == {"chi0", "chi1", "chi2", "chi3", "chiP3", "chiEmpty", "chiTop"}


def test_closed_form_errors():
    with pytest.raises(ValueError):
        closed_form_special("chi4", 2)
    with pytest.raises(ValueError):
        closed_form_special("chiEmpty", 2)


def test_set_chromatic_rejects_negative_k():
    with pytest.raises(ValueError):
        set_chromatic(K2, -1)


def test_triangle_plus_pendant():
    g = SimpleGraph(4, frozenset([(1, 2), (2, 3), (1, 3), (3, 4)]))
    for k in range(4):
        assert set_chromatic(g, k) == oracle.brute_force_set_coloring(g, k)
