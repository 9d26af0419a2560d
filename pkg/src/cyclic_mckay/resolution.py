"""Toric minimal resolution of C^2 / C_{r,a}.

Lattice points of N = Z^2 + Z (1/r)(1, a) are stored by their numerators
(p, q) over the common denominator r, so all arithmetic is on integers.  The
Newton boundary runs from e1 = (r, 0)/r to e2 = (0, r)/r; its interior points
are the rays of the exceptional curves, numbered from the x-axis end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import NonIntegralRelation
from .group import GroupParams
from .monomials import Monomial


class NPoint(NamedTuple):
    """The lattice point (p/r, q/r) of N; ``r`` is implied by the group."""

    p: int
    q: int


def in_lattice(G: GroupParams, u: NPoint) -> bool:
    return (u.q - u.p * G.a) % G.r == 0


def pairing(G: GroupParams, w: tuple[int, int], u: NPoint) -> Fraction:
    """<w, u> for w in M (integer exponent vector) and u in N."""
    return Fraction(w[0] * u.p + w[1] * u.q, G.r)


def hj_expansion(G: GroupParams) -> tuple[int, ...]:
    """Hirzebruch-Jung continued fraction r/a = b1 - 1/(b2 - ...), all b_i >= 2."""
    n, d = G.r, G.a
    coeffs = []
    while d:
        b = -(-n // d)
        coeffs.append(b)
        n, d = d, b * d - n
    return tuple(coeffs)


def hj_value(coeffs) -> Fraction:
    """Evaluate [b1, ..., bs] back to a rational."""
    value = Fraction(coeffs[-1])
    for b in reversed(coeffs[:-1]):
        value = b - 1 / value
    return value


def _cross(o: NPoint, a: NPoint, b: NPoint) -> int:
    return (a.p - o.p) * (b.q - o.q) - (a.q - o.q) * (b.p - o.p)


@lru_cache(maxsize=None)
def newton_boundary(G: GroupParams) -> tuple[NPoint, ...]:
    """Boundary lattice points of conv(sigma cap N minus 0), x-axis end first.

    Collinear boundary points are kept: each one is a (-2)-curve.
    """
    r, a = G.r, G.a
    candidates = [NPoint(0, r)] + [NPoint(p, (p * a) % r) for p in range(1, r + 1)]
    candidates.sort()
    hull: list[NPoint] = []
    for pt in candidates:
        # lower hull, keeping collinear points
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) < 0:
            hull.pop()
        hull.append(pt)
    assert hull[0] == (0, r) and hull[-1] == (r, 0)
    return tuple(reversed(hull))


def self_intersections(boundary) -> tuple[int, ...]:
    """-b_i for each interior boundary point, from u_{i-1} + u_{i+1} = b_i u_i."""
    out = []
    for prev, cur, nxt in zip(boundary, boundary[1:], boundary[2:]):
        sp, sq = prev[0] + nxt[0], prev[1] + nxt[1]
        # cur has p, q > 0 for interior points
        if sp % cur[0] or sq % cur[1] or sp // cur[0] != sq // cur[1]:
            raise NonIntegralRelation(f"{prev} + {nxt} is not a multiple of {cur}")
        b = sp // cur[0]
        if b < 2:
            raise NonIntegralRelation(f"boundary point {cur} has b = {b} < 2")
        out.append(-b)
    return tuple(out)


@dataclass(frozen=True)
class ExceptionalCurve:
    index: int
    ray: NPoint
    self_intersection: int
    special_rep: int
    ratio_pair: tuple[Monomial, Monomial]

    @property
    def label(self) -> str:
        return f"E{self.index} ({self.self_intersection}) rho{self.special_rep}"


@dataclass(frozen=True)
class FanChart:
    """The smooth cone spanned by consecutive boundary rays.

    ``dual_pair`` holds the exponent vectors of the chart coordinates
    (alpha, beta): alpha pairs to 1 with ``rays[0]`` and 0 with ``rays[1]``,
    beta the other way round.
    """

    index: int
    rays: tuple[NPoint, NPoint]
    dual_pair: tuple[tuple[int, int], tuple[int, int]]


def chart_dual_pair(u: NPoint, v: NPoint) -> tuple[tuple[int, int], tuple[int, int]]:
    # with det(u, v) = r the dual basis of M is (q', -p'), (-q, p)
    return ((v.q, -v.p), (-u.q, u.p))


@dataclass(frozen=True)
class Resolution:
    group: GroupParams
    boundary: tuple[NPoint, ...]
    hj: tuple[int, ...]
    curves: tuple[ExceptionalCurve, ...]
    charts: tuple[FanChart, ...]

    @property
    def intersection_matrix(self) -> list[list[int]]:
        s = len(self.curves)
        mat = [[0] * s for _ in range(s)]
        for k, curve in enumerate(self.curves):
            mat[k][k] = curve.self_intersection
            if k + 1 < s:
                mat[k][k + 1] = mat[k + 1][k] = 1
        return mat


@lru_cache(maxsize=None)
def build_resolution(G: GroupParams) -> Resolution:
    boundary = newton_boundary(G)
    selfint = self_intersections(boundary)
    curves = tuple(
        ExceptionalCurve(
            index=k + 1,
            ray=u,
            self_intersection=e,
            special_rep=u.q % G.r,
            ratio_pair=(Monomial(u.q, 0), Monomial(0, u.p)),
        )
        for k, (u, e) in enumerate(zip(boundary[1:-1], selfint))
    )
    charts = tuple(
        FanChart(index=k, rays=(u, v), dual_pair=chart_dual_pair(u, v))
        for k, (u, v) in enumerate(zip(boundary, boundary[1:]))
    )
    return Resolution(G, boundary, hj_expansion(G), curves, charts)


def chart_labels(res: Resolution, chart: FanChart) -> tuple[int, ...]:
    """Special reps of the curves whose rays bound ``chart``."""
    by_ray = {c.ray: c.special_rep for c in res.curves}
    return tuple(sorted(by_ray[u] for u in chart.rays if u in by_ray))


@dataclass(frozen=True)
class ChainGraph:
    """Path E1 - E2 - ... - Es; ``ends`` name the axis strict transforms at each end."""

    nodes: tuple[tuple[int, int], ...]  # (self_intersection, special_rep)
    edges: tuple[tuple[int, int], ...]
    ends: tuple[str, str] = ("x-axis", "y-axis")

    @property
    def labels(self) -> tuple[int, ...]:
        return tuple(rep for _, rep in self.nodes)


def dual_graph(curves) -> ChainGraph:
    nodes = tuple((c.self_intersection, c.special_rep) for c in curves)
    edges = tuple((k, k + 1) for k in range(len(nodes) - 1))
    return ChainGraph(nodes, edges)
