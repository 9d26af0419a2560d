"""Brute-force reference computations.

Nothing here imports the package's algorithms; each function recomputes its
object from the definition by exhaustive search.
"""

import cmath
from fractions import Fraction
from itertools import combinations


def char(r, a, m, n):
    return (m + a * n) % r


def naive_invariant_generators(r, a):
    """Divisibility-minimal nonconstant invariants, by scanning [0, r]^2."""
    inv = [(m, n) for m in range(r + 1) for n in range(r + 1)
           if (m, n) != (0, 0) and char(r, a, m, n) == 0]
    return {u for u in inv
            if not any(v != u and v[0] <= u[0] and v[1] <= u[1] for v in inv)}


def naive_basis(r, a):
    inv = naive_invariant_generators(r, a)
    return {(m, n) for m in range(r + 1) for n in range(r + 1)
            if not any(v[0] <= m and v[1] <= n for v in inv)}


def naive_specials(r, a):
    """Nontrivial i with no character-i monomial in B(G) outside the L-shape."""
    extra = {u for u in naive_basis(r, a) if u[0] and u[1]}
    return {i for i in range(1, r) if all(char(r, a, *u) != i for u in extra)}


def continued_fraction(coeffs):
    value = Fraction(coeffs[-1])
    for b in reversed(coeffs[:-1]):
        value = b - 1 / value
    return value


def naive_newton_boundary(r, a):
    """Boundary lattice points, via supporting lines through pairs of candidates.

    A candidate u is on the Newton boundary iff it lies on a segment [v, w]
    between candidates whose line has every candidate on its far side from
    the origin.
    """
    pts = [(0, r)] + [(p, (p * a) % r) for p in range(1, r + 1)]
    on_boundary = set()
    for v, w in combinations(pts, 2):
        # line through v, w: normal (w1 - v1 ... ) oriented away from origin
        nx_, ny_ = (w[1] - v[1]), -(w[0] - v[0])
        c = nx_ * v[0] + ny_ * v[1]
        if c < 0:
            nx_, ny_, c = -nx_, -ny_, -c
        if c == 0:
            continue
        if all(nx_ * p + ny_ * q >= c for p, q in pts):
            for u in pts:
                if nx_ * u[0] + ny_ * u[1] == c and min(v[0], w[0]) <= u[0] <= max(v[0], w[0]):
                    on_boundary.add(u)
    return sorted(on_boundary, key=lambda u: -u[0])


def partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for h in range(min(n, cap), 0, -1):
        for rest in partitions(n - h, h):
            yield (h,) + rest


def brute_clusters(r, a):
    """Every partition of r (as column heights) with r distinct cell characters."""
    out = set()
    for cols in partitions(r):
        chars = {char(r, a, m, n) for m, h in enumerate(cols) for n in range(h)}
        if len(chars) == r:
            out.add(cols)
    return out


def naive_ideal(columns):
    """Minimal monomials outside the diagram, by scanning a box around it."""
    cells = {(m, n) for m, h in enumerate(columns) for n in range(h)}
    size = max(len(columns), max(columns)) + 2
    outside = [(m, n) for m in range(size) for n in range(size) if (m, n) not in cells]
    return {u for u in outside
            if not any(v != u and v[0] <= u[0] and v[1] <= u[1] for v in outside)}


def tensor_by_characters(r, a):
    """a_ij = <chi_i chi_nat, chi_j> over the cyclic group, numerically."""
    eps = cmath.exp(2j * cmath.pi / r)
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            total = sum(eps ** (i * k) * (eps ** k + eps ** (a * k)) * eps ** (-j * k) for k in range(r))
            row.append(round((total / r).real))
        out.append(row)
    return out


def det(mat):
    """Exact determinant by Laplace expansion (small matrices only)."""
    n = len(mat)
    if n == 0:
        return 1
    if n == 1:
        return mat[0][0]
    return sum((-1) ** j * mat[0][j] * det([row[:j] + row[j + 1:] for row in mat[1:]])
               for j in range(n) if mat[0][j])
