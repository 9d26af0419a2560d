from fractions import Fraction

import pytest

from cyclic_mckay import build_resolution, dual_graph, hj_expansion, make_group, newton_boundary, self_intersections
from cyclic_mckay.errors import NonIntegralRelation
from cyclic_mckay.monomials import Monomial
from cyclic_mckay.resolution import NPoint, hj_value, pairing
from conftest import small_pairs
from oracles import continued_fraction, naive_newton_boundary


@pytest.mark.parametrize("r, a, expected", [(7, 3, (3, 2, 2)), (4, 1, (4,)), (5, 2, (3, 2)), (2, 1, (2,))])
def test_hj_expansion(r, a, expected):
    assert hj_expansion(make_group(r, a)) == expected
    assert continued_fraction(list(expected)) == Fraction(r, a)


@pytest.mark.parametrize("r", range(2, 12))
def test_hj_sl2_all_twos(r):
    assert hj_expansion(make_group(r, r - 1)) == (2,) * (r - 1)


@pytest.mark.parametrize("r, a", small_pairs(25))
def test_hj_evaluates_back(r, a):
    coeffs = hj_expansion(make_group(r, a))
    assert all(b >= 2 for b in coeffs)
    assert continued_fraction(list(coeffs)) == Fraction(r, a)
    assert hj_value(coeffs) == Fraction(r, a)


def test_newton_boundary_examples():
    assert newton_boundary(make_group(7, 3)) == ((7, 0), (5, 1), (3, 2), (1, 3), (0, 7))
    assert newton_boundary(make_group(2, 1)) == ((2, 0), (1, 1), (0, 2))
    assert newton_boundary(make_group(4, 1)) == ((4, 0), (1, 1), (0, 4))


@pytest.mark.parametrize("r, a", small_pairs(15))
def test_newton_boundary_matches_supporting_line_oracle(r, a):
    assert list(newton_boundary(make_group(r, a))) == naive_newton_boundary(r, a)


def test_self_intersections_examples():
    assert self_intersections(newton_boundary(make_group(7, 3))) == (-2, -2, -3)
    assert self_intersections(newton_boundary(make_group(2, 1))) == (-2,)
    assert self_intersections(newton_boundary(make_group(6, 5))) == (-2,) * 5


def test_self_intersections_rejects_bad_boundary():
    with pytest.raises(NonIntegralRelation):
        self_intersections([(7, 0), (4, 1), (0, 7)])


def test_build_resolution_c73(c73):
    res = build_resolution(c73)
    assert [c.special_rep for c in res.curves] == [1, 2, 3]
    e2 = res.curves[1]
    assert e2.ray == (3, 2)
    assert e2.ratio_pair == (Monomial(2, 0), Monomial(0, 3))
    assert res.charts[0].dual_pair == ((1, -5), (0, 7))
    assert len(res.charts) == 4


def test_chart_pairings_c73(c73):
    res = build_resolution(c73)
    for chart in res.charts:
        u, v = chart.rays
        alpha, beta = chart.dual_pair
        assert (pairing(c73, alpha, u), pairing(c73, alpha, v)) == (1, 0)
        assert (pairing(c73, beta, u), pairing(c73, beta, v)) == (0, 1)


def test_dual_graph():
    g = dual_graph(build_resolution(make_group(7, 3)).curves)
    assert g.nodes == ((-2, 1), (-2, 2), (-3, 3))
    assert g.edges == ((0, 1), (1, 2))
    assert dual_graph(build_resolution(make_group(2, 1)).curves).nodes == ((-2, 1),)
    g5 = dual_graph(build_resolution(make_group(5, 4)).curves)
    assert [s for s, _ in g5.nodes] == [-2] * 4 and len(g5.edges) == 3


@pytest.mark.parametrize("r, a", small_pairs(25))
def test_fan_invariants(r, a):
    G = make_group(r, a)
    res = build_resolution(G)
    for u, v in zip(res.boundary, res.boundary[1:]):
        assert u[0] * v[1] - u[1] * v[0] == r
    assert len(res.hj) == len(res.boundary) - 2 == len(res.curves)
    dual = hj_expansion(make_group(r, G.a_inverse))
    assert tuple(reversed(res.hj)) == dual
    assert tuple(-c.self_intersection for c in res.curves) == dual
    for c in res.curves:
        assert (a * c.ray.p - c.ray.q) % r == 0
        assert c.self_intersection <= -2
    # adjacent charts share one coordinate up to inversion: alpha of chart k is 1/beta of chart k+1
    for left, right in zip(res.charts, res.charts[1:]):
        assert left.rays[1] == right.rays[0]
        alpha, beta = left.dual_pair[0], right.dual_pair[1]
        assert alpha == (-beta[0], -beta[1])
        opposite = [(u, v) for u in left.dual_pair for v in right.dual_pair if u == (-v[0], -v[1])]
        assert len(opposite) == 1


def test_npoint_is_tuple():
    assert NPoint(3, 2) == (3, 2)
