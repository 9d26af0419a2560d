from math import gcd

from hypothesis import given, settings
from hypothesis import strategies as st

from cyclic_mckay import (
    build_resolution,
    chart_deformation,
    cluster_ideal,
    enumerate_clusters,
    g_basis,
    is_in_sl2,
    l_space,
    make_group,
    monomial_character,
    special_reps,
    tensor_matrix,
)
from cyclic_mckay.quiver import is_negative_definite


@st.composite
def groups(draw, r_max=45):
    r = draw(st.integers(2, r_max))
    a = draw(st.integers(1, r - 1).filter(lambda a: gcd(r, a) == 1))
    return make_group(r, a)


exponents = st.integers(0, 200)


@given(groups(), exponents, exponents, exponents, exponents)
def test_character_is_additive(G, m1, n1, m2, n2):
    lhs = monomial_character(G, m1 + m2, n1 + n2)
    assert lhs == (monomial_character(G, m1, n1) + monomial_character(G, m2, n2)) % G.r


@given(groups())
def test_pure_r_powers_invariant(G):
    assert monomial_character(G, G.r, 0) == monomial_character(G, 0, G.r) == 0


@given(groups(), st.integers(-500, 500))
def test_exponent_reduction(G, k):
    assert make_group(G.r, G.a + k * G.r) == G


@settings(max_examples=60)
@given(groups())
def test_basis_equals_l_space_iff_sl2(G):
    sl2 = is_in_sl2(G)
    assert (g_basis(G) == l_space(G)) == sl2
    assert (len(special_reps(G).specials) == G.r - 1) == sl2


@settings(max_examples=60)
@given(groups())
def test_clusters_are_regular_representations(G):
    for c in enumerate_clusters(G):
        assert sorted(c.chars(G)) == list(range(G.r))
        ideal = cluster_ideal(G, c)
        assert chart_deformation(G, ideal).at_origin() == ideal.generators


@settings(max_examples=60)
@given(groups(r_max=60))
def test_intersection_matrix_negative_definite(G):
    assert is_negative_definite(build_resolution(G).intersection_matrix)


@settings(max_examples=60)
@given(groups())
def test_tensor_rows_and_symmetry(G):
    A = tensor_matrix(G)
    assert all(sum(row) == 2 for row in A)
    assert (A == [list(col) for col in zip(*A)]) == is_in_sl2(G)
