"""McKay tensor matrix, quiver and the Cartan / intersection matrix comparison."""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import NotSL2
from .group import GroupParams, is_in_sl2, natural_rep_summands
from .resolution import build_resolution


def tensor_matrix(G: GroupParams) -> list[list[int]]:
    """a_ij with rho_i (x) rho_nat = sum_j a_ij rho_j, rho_nat = rho_1 + rho_a."""
    r = G.r
    mat = [[0] * r for _ in range(r)]
    for i in range(r):
        for s in natural_rep_summands(G):
            mat[i][(i + s) % r] += 1
    return mat


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix 2I - A on indices 1..r-1 and the intersection matrix in rho-label order."""

    cartan: tuple[tuple[int, ...], ...]
    intersection: tuple[tuple[int, ...], ...]

    @property
    def opposite(self) -> bool:
        return all(c == -e for crow, erow in zip(self.cartan, self.intersection)
                   for c, e in zip(crow, erow))


def aligned_intersection_matrix(G: GroupParams) -> list[list[int]]:
    """Intersection matrix of the exceptional curves re-indexed by their rho-labels.

    Rows and columns follow the curves sorted by special_rep, so for SL(2)
    groups index k is rho_{k+1}.
    """
    res = build_resolution(G)
    order = sorted(range(len(res.curves)), key=lambda k: res.curves[k].special_rep)
    mat = res.intersection_matrix
    return [[mat[i][j] for j in order] for i in order]


def cartan_matrix(G: GroupParams) -> CartanData:
    if not is_in_sl2(G):
        raise NotSL2(f"{G} is not in SL(2); the McKay graph has no Cartan matrix")
    A = tensor_matrix(G)
    idx = range(1, G.r)
    cartan = tuple(tuple(2 * (i == j) - A[i][j] for j in idx) for i in idx)
    inter = tuple(tuple(row) for row in aligned_intersection_matrix(G))
    return CartanData(cartan, inter)


def quiver_graph(G: GroupParams) -> nx.MultiDiGraph:
    """McKay quiver: a_ij parallel arrows i -> j."""
    A = tensor_matrix(G)
    Q = nx.MultiDiGraph()
    Q.add_nodes_from(range(G.r))
    for i, row in enumerate(A):
        for j, mult in enumerate(row):
            for _ in range(mult):
                Q.add_edge(i, j)
    return Q


def is_extended_a_cycle(Q: nx.MultiDiGraph) -> bool:
    """True if Q is the doubled extended Dynkin diagram of type A~_{n-1}.

    Each undirected edge of the n-cycle must appear as one arrow each way;
    for n = 2 the two nodes are joined by two arrows each way.
    """
    n = Q.number_of_nodes()
    if n == 2:
        return Q.number_of_edges(0, 1) == 2 and Q.number_of_edges(1, 0) == 2
    if any(Q.number_of_edges(i, j) != Q.number_of_edges(j, i) for i, j in Q.edges()):
        return False
    U = nx.Graph(Q.to_undirected())
    return nx.is_isomorphic(U, nx.cycle_graph(n)) and Q.number_of_edges() == 2 * n


def leading_minors(mat) -> list[int]:
    """Leading principal minors by fraction-free (Bareiss) elimination without pivoting.

    Returns as many minors as can be computed before a zero pivot; a zero
    minor is reported and stops the elimination.
    """
    M = [list(row) for row in mat]
    n = len(M)
    minors = []
    prev = 1
    for k in range(n):
        pivot = M[k][k]
        minors.append(pivot)
        if pivot == 0:
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * pivot - M[i][k] * M[k][j]) // prev
        prev = pivot
    return minors


def is_negative_definite(mat) -> bool:
    neg = [[-v for v in row] for row in mat]
    minors = leading_minors(neg)
    return len(minors) == len(mat) and all(d > 0 for d in minors)
