"""Torus-fixed G-clusters of Hilb^G(C^2) and what they say about the resolution.

A torus-fixed G-cluster is a Young diagram of r cells whose cell characters
are pairwise distinct, i.e. C[x, y]/I is the regular representation.  Diagrams
are stored as column heights: column m of height h holds x^m, x^m y, ...,
x^m y^(h-1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    InternalInconsistency,
    NonSpecialCotangent,
    NotAChain,
    NotSL2,
    TooManyGenerators,
)
from .group import GroupParams, is_in_sl2
from .monomials import (
    Monomial,
    canonical,
    char_of,
    format_monomial,
    minimal_elements,
    module_generators,
    special_reps,
    staircase_heights,
)
from .resolution import Resolution


@dataclass(frozen=True)
class GCluster:
    columns: tuple[int, ...]

    @property
    def cells(self) -> tuple[Monomial, ...]:
        return tuple(Monomial(m, n) for m, h in enumerate(self.columns) for n in range(h))

    def chars(self, G: GroupParams) -> tuple[int, ...]:
        return tuple(char_of(G, c) for c in self.cells)

    def is_young(self) -> bool:
        cols = self.columns
        return all(h > 0 for h in cols) and all(x >= y for x, y in zip(cols, cols[1:]))


@lru_cache(maxsize=None)
def enumerate_clusters(G: GroupParams) -> tuple[GCluster, ...]:
    """All Young diagrams of r cells with pairwise distinct characters.

    Depth-first over weakly decreasing column heights; a column is grown one
    cell at a time and abandoned at the first repeated character.  Cells
    never leave B(G) (a cell divisible by an invariant repeats the character
    of its quotient), so B(G)'s column heights bound what later columns can
    still reach.
    """
    r, a = G.r, G.a
    basis_heights = staircase_heights(G) + (0,)

    # reach[m][h]: bitmask of characters that columns m, m+1, ... can still
    # carry when no column may exceed height h; every character not yet used
    # must lie in it
    reach = [[0] * (r + 1) for _ in range(r + 2)]
    for m in range(r, -1, -1):
        col = 0
        for h in range(r + 1):
            if 0 < h <= basis_heights[m]:
                col |= 1 << ((m + a * (h - 1)) % r)
            reach[m][h] = reach[m + 1][h] | col

    full = (1 << r) - 1
    column_bits = [[1 << ((m + a * n) % r) for n in range(basis_heights[m])] for m in range(r)]
    found: list[tuple[int, ...]] = []
    cols: list[int] = []

    def grow(m: int, cap: int, used: int, remaining: int, run_start: int):
        bits = column_bits[m]
        limit = cap if cap < remaining else remaining
        reach_next = reach[m + 1]
        height = 0
        for bit in bits[:limit]:
            if used & bit:
                break
            used |= bit
            height += 1
            # run of equal-height columns ending here starts at j
            j = run_start if height == cap else m
            # the cell above this column is covered by a translate of the
            # cluster by an invariant x^l y^height with j <= l <= m
            if j and (-a * height - j) % r > m - j:
                continue
            left = remaining - height
            if left == 0:
                found.append(tuple(cols) + (height,))
                continue
            if full & ~used & ~reach_next[height]:
                continue
            cols.append(height)
            grow(m + 1, height, used, left, j)
            cols.pop()

    grow(0, r, 0, r, 0)
    found.sort(key=lambda cs: (len(cs), [-h for h in cs]))
    return tuple(GCluster(cs) for cs in found)


@dataclass(frozen=True)
class ClusterIdeal:
    generators: tuple[Monomial, ...]
    cotangent: tuple[int, ...]

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def staircase_generators(columns) -> tuple[Monomial, ...]:
    """Minimal monomials outside the diagram: one corner per drop in column height."""
    heights = list(columns) + [0]
    gens = [Monomial(0, heights[0])]
    for m in range(1, len(heights)):
        if heights[m] < heights[m - 1]:
            gens.append(Monomial(m, heights[m]))
    return canonical(gens)


def cluster_ideal(G: GroupParams, c: GCluster) -> ClusterIdeal:
    gens = staircase_generators(c.columns)
    return ClusterIdeal(gens, tuple(char_of(G, g) for g in gens))


def cotangent_decomposition(G: GroupParams, ci: ClusterIdeal) -> tuple[int, ...]:
    """Characters of I/mI: the nontrivial ones ascending, then the trivial one."""
    chars = [char_of(G, g) for g in ci.generators]
    if chars.count(0) != 1:
        raise InternalInconsistency(f"ideal {ci} has {chars.count(0)} invariant generators")
    specials = set(special_reps(G).specials)
    nontrivial = sorted(c for c in chars if c)
    bad = [c for c in nontrivial if c not in specials]
    if bad:
        raise NonSpecialCotangent(f"ideal {ci} of {G} has non-special cotangent characters {bad}")
    return tuple(nontrivial) + (0,)


@dataclass(frozen=True)
class Relation:
    """lhs = coeff * rhs, with coeff one of "alpha", "beta", "1"."""

    lhs: Monomial
    coeff: str
    rhs: Monomial

    def __str__(self):
        rhs = format_monomial(*self.rhs)
        if self.coeff == "1":
            return f"{self.lhs} = {rhs}"
        if rhs == "1":
            return f"{self.lhs} = {self.coeff}"
        return f"{self.lhs} = {self.coeff}*{rhs}"


@dataclass(frozen=True)
class ChartDeformation:
    """x^A = alpha y^C,  y^B = beta x^D,  x^(A-D) y^(B-C) = alpha beta."""

    A: int
    B: int
    C: int
    D: int

    @property
    def relations(self) -> tuple[Relation, Relation, Relation]:
        return (
            Relation(Monomial(self.A, 0), "alpha", Monomial(0, self.C)),
            Relation(Monomial(0, self.B), "beta", Monomial(self.D, 0)),
            Relation(Monomial(self.A - self.D, self.B - self.C), "alpha*beta", Monomial(0, 0)),
        )

    @property
    def alpha_exponent(self) -> tuple[int, int]:
        return (self.A, -self.C)

    @property
    def beta_exponent(self) -> tuple[int, int]:
        return (-self.D, self.B)

    def at_origin(self) -> tuple[Monomial, ...]:
        """Monomial ideal cut out when alpha = beta = 0 (minimal generators)."""
        return minimal_elements(rel.lhs for rel in self.relations)


def chart_deformation(G: GroupParams, ci: ClusterIdeal) -> ChartDeformation:
    gens = ci.generators
    if len(gens) > 3:
        raise TooManyGenerators(f"ideal {ci} of {G} has {len(gens)} minimal generators")
    A = next(g.m for g in gens if g.n == 0)
    B = next(g.n for g in gens if g.m == 0)

    def pure_partner(i: int, axis: int) -> int:
        pures = [g for g in module_generators(G, i) if g[1 - axis] == 0]
        if len(pures) != 1:
            raise InternalInconsistency(f"character {i} of {G} has pure generators {pures}")
        return pures[0][axis]

    C = pure_partner(char_of(G, Monomial(A, 0)), axis=1)
    D = pure_partner(char_of(G, Monomial(0, B)), axis=0)
    if A < D or B < C:
        raise InternalInconsistency(f"deformation of {ci} has negative exponents")
    return ChartDeformation(A, B, C, D)


@dataclass(frozen=True)
class PointIdeal:
    """Ideal of a general point on an exceptional curve: (alpha x^q - beta y^p, psi - gamma)."""

    curve: int
    ratio: tuple[Monomial, Monomial]
    invariant: Monomial

    def __str__(self):
        x, y = self.ratio
        return f"(alpha*{x} - beta*{y}, {self.invariant} - gamma)"


def curve_point_ideal(G: GroupParams, res: Resolution, curve_index: int) -> PointIdeal:
    """Point ideal on E_k, read off the cluster whose alpha-relation is x^q = alpha y^p.

    That cluster sits at the origin of the chart just before E_k (the chart
    bounded by E_{k-1} and E_k).
    """
    curve = res.curves[curve_index - 1]
    clusters = enumerate_clusters(G)
    deform = chart_deformation(G, cluster_ideal(G, clusters[curve_index - 1]))
    ratio = (Monomial(deform.A, 0), Monomial(0, deform.C))
    if ratio != curve.ratio_pair:
        raise InternalInconsistency(f"cluster ratio {ratio} disagrees with curve {curve.label}")
    return PointIdeal(curve_index, ratio, deform.relations[2].lhs)


@dataclass(frozen=True)
class ReconstructedChain:
    nodes: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    ends: tuple[GCluster, GCluster]


def reconstruct_chain(G: GroupParams, clusters) -> ReconstructedChain:
    """Rebuild the exceptional chain from cotangent characters alone.

    Nodes are the nontrivial cotangent characters; a cluster with two of them
    is an intersection point and contributes an edge.  The path is walked from
    the end cluster with fewer columns, which is the (x, y^r) side.
    """
    nodes: set[int] = set()
    adj: dict[int, set[int]] = {}
    ends: list[GCluster] = []
    edge_count = 0
    for c in clusters:
        nontrivial = cotangent_decomposition(G, cluster_ideal(G, c))[:-1]
        nodes.update(nontrivial)
        if len(nontrivial) == 1:
            ends.append(c)
        elif len(nontrivial) == 2:
            i, j = nontrivial
            adj.setdefault(i, set()).add(j)
            adj.setdefault(j, set()).add(i)
            edge_count += 1
        else:
            raise NotAChain(f"cluster {c.columns} has cotangent characters {nontrivial}")
    if len(ends) != 2 or edge_count != len(nodes) - 1:
        raise NotAChain(f"{G}: {len(ends)} end clusters, {edge_count} edges, {len(nodes)} nodes")
    if any(len(v) > 2 for v in adj.values()):
        raise NotAChain(f"{G}: a node has degree > 2")

    ends.sort(key=lambda c: len(c.columns))
    start = cotangent_decomposition(G, cluster_ideal(G, ends[0]))[0]
    order = [start]
    prev = None
    while True:
        nxt = [v for v in adj.get(order[-1], ()) if v != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    if len(order) != len(nodes):
        raise NotAChain(f"{G}: incidence graph is disconnected")
    edges = tuple(zip(order, order[1:]))
    return ReconstructedChain(tuple(order), edges, (ends[0], ends[1]))


def an_corollary_check(G: GroupParams) -> bool:
    """For SL(2) groups: the clusters are exactly the ideals (x^k, y^(r-k+1), xy)."""
    if not is_in_sl2(G):
        raise NotSL2(f"{G} is not in SL(2)")
    r = G.r
    expected = {
        minimal_elements([Monomial(k, 0), Monomial(0, r - k + 1), Monomial(1, 1)])
        for k in range(1, r + 1)
    }
    clusters = enumerate_clusters(G)
    got = {cluster_ideal(G, c).generators for c in clusters}
    return len(clusters) == r and got == expected
